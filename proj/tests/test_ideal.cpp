#include <doctest.h>

#include "summa/ideal.hpp"

using namespace summa;

namespace {
Operator op(Matrix a, double p, double q) {
    const int n = static_cast<int>(a.cols());
    const int m = static_cast<int>(a.rows());
    return Operator(std::move(a), SpaceSpec(n, Exponent(p)), SpaceSpec(m, Exponent(q)));
}
} // namespace

TEST_SUITE_BEGIN("ideal");

TEST_CASE("hs norm") {
    CHECK(hs_norm(op(Matrix::Identity(3, 3), 2.0, 2.0)) == doctest::Approx(std::sqrt(3.0)));
    Matrix d = Matrix::Zero(2, 2);
    d.diagonal() << 3, 4;
    CHECK(hs_norm(op(d, 2.0, 2.0)) == doctest::Approx(5.0));
    CHECK_THROWS_AS(hs_norm(op(Matrix::Identity(2, 2), 1.0, 2.0)), std::invalid_argument);
}

TEST_CASE("pietsch bound on the linf identity") {
    Operator id = op(Matrix::Identity(3, 3), Exponent::inf, 2.0);
    auto res = pi_2_upper(id);
    REQUIRE(res.has_value());
    CHECK(res->bound.kind == EstimateKind::upper);
    CHECK(res->bound.value == doctest::Approx(std::sqrt(3.0)).epsilon(1e-4));
    CHECK(res->certificate.valid_for(id));
    CHECK(res->certificate.extreme_exact);
    PietschFactorization f = pietsch_factorize(id, res->certificate);
    CHECK(f.residual <= 1e-8);
    // the factor through the weighted l2 space is bounded by the constant
    CHECK(svd(f.uhat).singular[0] <= res->certificate.constant * (1.0 + 1e-8));
}

TEST_CASE("pietsch bound on an l1 domain uses the dual cube") {
    Rng rng(23);
    Operator u = op(rng.gaussian_matrix(3, 3), 1.0, 2.0);
    auto res = pi_2_upper(u);
    REQUIRE(res.has_value());
    CHECK(res->certificate.extreme_exact);
    CHECK(res->certificate.valid_for(u));
    // sound: upper bound dominates the witness lower bound
    const NormEstimate lo = pi_p_lower(u, 2.0);
    CHECK(lo.value <= res->bound.value + 1e-6);
}

TEST_CASE("invalid certificates are rejected") {
    Operator id = op(Matrix::Identity(2, 2), Exponent::inf, 2.0);
    PietschCertificate bad{Matrix::Identity(2, 2), Vector::Constant(2, 0.5), 0.5, true};
    CHECK_FALSE(bad.valid_for(id)); // constant far too small
    CHECK_THROWS_AS(pietsch_factorize(id, bad), std::invalid_argument);
}

TEST_CASE("two-summing lower bounds from basis witnesses") {
    Operator id2 = op(Matrix::Identity(2, 2), 2.0, 2.0);
    CHECK(pi_p_lower(id2, 2.0).value >= std::sqrt(2.0) - 1e-6);
    Operator idinf = op(Matrix::Identity(2, 2), Exponent::inf, 2.0);
    CHECK(pi_p_lower(idinf, 2.0).value >= std::sqrt(2.0) - 1e-6);
}

TEST_CASE("one-summing lower bound on the l1 identity") {
    // id on l_1^2 is not absolutely summing with constant 1: the family
    // {(1,1),(1,-1)} has weak-l1 norm 2 and strong-l1 norm 4
    Operator id = op(Matrix::Identity(2, 2), 1.0, 1.0);
    const NormEstimate lo = pi_p_lower(id, 1.0);
    CHECK(lo.kind == EstimateKind::lower);
    CHECK(lo.value >= 1.0 - 1e-9);
    Matrix had(2, 2);
    had << 1, 1, 1, -1;
    VectorFamily fam(SpaceSpec(2, Exponent(1.0)), had);
    const double ratio = strong_lp_norm(fam, 1.0) / weak_lp_norm(fam, Exponent(1.0)).value;
    CHECK(ratio == doctest::Approx(2.0));
}

TEST_CASE("gamma and rademacher summing bounds on the Hilbert identity") {
    Operator id = op(Matrix::Identity(2, 2), 2.0, 2.0);
    const NormEstimate g = gamma_summing_lower(id);
    CHECK(g.value <= std::sqrt(2.0) + 1e-9); // gamma norm of id_2 is its HS norm
    CHECK(g.value >= 1.0);                   // singleton witness
    const NormEstimate r = r_summing_lower(id);
    CHECK(r.value <= std::sqrt(2.0) + 1e-9);
    CHECK(gamma_norm_hilbert_domain(id).value == doctest::Approx(std::sqrt(2.0)));
}

TEST_CASE("zero operators") {
    Operator z = op(Matrix::Zero(2, 2), 1.0, 2.0);
    CHECK(pi_p_lower(z, 2.0).value == 0.0);
    CHECK(gamma_summing_lower(z).value == 0.0);
    auto res = pi_2_upper(z);
    REQUIRE(res.has_value());
    CHECK(res->bound.value == 0.0);
}

TEST_CASE("nuclear representation from the svd") {
    Rng rng(29);
    Matrix a = rng.gaussian_matrix(4, 3);
    Operator u = op(a, 2.0, 2.0);
    const NuclearRep rep = weak_star_nuclear_rep(u);
    CHECK((rep.reconstruct(3) - a).norm() <= 1e-10);
    CHECK(rep.weak_l1_norm() == doctest::Approx(svd(a).singular.norm()));
    for (int j = 0; j < rep.terms(); ++j)
        CHECK(rep.vectors.col(j).norm() == doctest::Approx(1.0));
}

TEST_SUITE_END();
