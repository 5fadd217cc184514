#include <doctest.h>

#include "summa/grothendieck.hpp"

using namespace summa;

TEST_SUITE_BEGIN("groth");

TEST_CASE("inf -> 1 norm by sign enumeration") {
    Matrix had(2, 2);
    had << 1, 1, 1, -1;
    CHECK(norm_inf_to_1(had) == doctest::Approx(2.0));
    CHECK(norm_inf_to_1(Matrix::Ones(2, 2)) == doctest::Approx(4.0));
    const SignPair sp = inf_to_1_signs(had);
    CHECK(sp.value == doctest::Approx(sp.row_signs.transpose() * had * sp.col_signs));
    CHECK_THROWS_AS(norm_inf_to_1(Matrix::Zero(20, 20)), std::length_error);
}

TEST_CASE("bilinear Hilbertian supremum of the 2x2 sign matrix") {
    Matrix had(2, 2);
    had << 1, 1, 1, -1;
    const NormEstimate b = bilinear_hilbert_sup(had);
    CHECK(b.kind == EstimateKind::lower);
    CHECK(b.value == doctest::Approx(2.0 * std::sqrt(2.0)).epsilon(1e-6));
}

TEST_CASE("ratio bracket on sign matrices") {
    Matrix had(2, 2);
    had << 1, 1, 1, -1;
    CHECK(grothendieck_ratio(had) == doctest::Approx(std::sqrt(2.0)).epsilon(1e-5));
    Rng rng(31);
    for (int t = 0; t < 5; ++t) {
        Matrix a(3, 4);
        for (int i = 0; i < 3; ++i)
            for (int j = 0; j < 4; ++j) a(i, j) = rng.sign();
        const double r = grothendieck_ratio(a);
        CHECK(r >= 1.0 - 1e-9);
        CHECK(r <= kGrothendieckSanity);
    }
}

TEST_CASE("little grothendieck check") {
    Operator id(Matrix::Identity(3, 3), SpaceSpec(3, Exponent(1.0)),
                SpaceSpec(3, Exponent(2.0)));
    const LittleGrothendieckReport rep = little_grothendieck_check(id);
    CHECK(rep.defined);
    CHECK(rep.pass);
    CHECK(rep.operator_norm.value == doctest::Approx(1.0));
    CHECK(rep.pi1_lower.value >= 1.0 - 1e-9);
    CHECK_THROWS_AS(little_grothendieck_check(Operator(Matrix::Identity(2, 2),
                                                       SpaceSpec(2, Exponent(2.0)),
                                                       SpaceSpec(2, Exponent(2.0)))),
                    std::invalid_argument);
}

TEST_SUITE_END();
