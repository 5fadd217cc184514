#include <doctest.h>

#include <sstream>

#include "summa/io.hpp"

using namespace summa;
using nlohmann::json;

TEST_SUITE_BEGIN("io");

TEST_CASE("exponent parsing") {
    CHECK(io::parse_exponent(json("inf")).is_inf());
    CHECK(io::parse_exponent(json("2")).is(2.0));
    CHECK(io::parse_exponent(json(1.5)).is(1.5));
    CHECK(io::exponent_to_json(Exponent(Exponent::inf)) == json("inf"));
}

TEST_CASE("matrix json round trip") {
    Matrix a(2, 3);
    a << 1, 2, 3, 4, 5, 6;
    Matrix b = io::matrix_from_json(io::matrix_to_json(a));
    CHECK((a - b).norm() == 0.0);
    json bad = {{"rows", 2}, {"cols", 2}, {"data", {1, 2, 3}}};
    CHECK_THROWS_AS(io::matrix_from_json(bad), std::invalid_argument);
}

TEST_CASE("csv parsing with diagnostics") {
    std::istringstream good("1,2\n3,4\n");
    Matrix a = io::matrix_from_csv(good);
    CHECK(a(1, 0) == 3.0);
    std::istringstream ragged("1,2\n3\n");
    CHECK_THROWS_WITH_AS(io::matrix_from_csv(ragged), "csv: line 2: ragged row",
                         std::invalid_argument);
    std::istringstream junk("1,x\n");
    try {
        io::matrix_from_csv(junk);
        FAIL("expected a parse error");
    } catch (const std::invalid_argument& e) {
        CHECK(std::string(e.what()).find("line 1, column 2") != std::string::npos);
    }
}

TEST_CASE("family json round trip") {
    Matrix m(2, 3);
    m << 1, 0, 1, 0, 1, -1;
    VectorFamily fam(SpaceSpec(2, Exponent(Exponent::inf)), m);
    VectorFamily back = io::family_from_json(io::family_to_json(fam));
    CHECK(back.space.dim == 2);
    CHECK(back.space.exp.is_inf());
    CHECK((back.vectors - m).norm() == 0.0);
}

TEST_CASE("estimates carry their kind") {
    json e = io::estimate_to_json(NormEstimate::exact(1.5, "rule"));
    CHECK(e.at("kind") == "exact");
    CHECK_FALSE(e.contains("stderr"));
    json m = io::estimate_to_json(NormEstimate::montecarlo(1.0, 0.01));
    CHECK(m.at("kind") == "montecarlo");
    CHECK(m.at("stderr") == 0.01);
}

TEST_CASE("certificate round trip stays valid") {
    Operator id(Matrix::Identity(2, 2), SpaceSpec(2, Exponent(Exponent::inf)),
                SpaceSpec(2, Exponent(2.0)));
    auto res = pi_2_upper(id);
    REQUIRE(res.has_value());
    PietschCertificate back = io::certificate_from_json(io::certificate_to_json(res->certificate));
    CHECK(back.valid_for(id));
    CHECK(back.constant == res->certificate.constant);
}

TEST_SUITE_END();
