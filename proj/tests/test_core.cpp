#include <doctest.h>

#include "summa/opnorm.hpp"
#include "summa/types.hpp"

using namespace summa;

TEST_SUITE_BEGIN("core");

TEST_CASE("exponent duality") {
    CHECK(Exponent(1.0).dual().is_inf());
    CHECK(Exponent(Exponent::inf).dual().is(1.0));
    CHECK(Exponent(2.0).dual().is(2.0));
    CHECK(Exponent(4.0).dual().value() == doctest::Approx(4.0 / 3.0).epsilon(1e-14));
    CHECK_THROWS_AS(Exponent(0.5), std::invalid_argument);
}

TEST_CASE("p_norm basics") {
    Vector x(2);
    x << 3.0, -4.0;
    CHECK(p_norm(x, Exponent(2.0)) == doctest::Approx(5.0));
    CHECK(p_norm(x, Exponent(1.0)) == doctest::Approx(7.0));
    CHECK(p_norm(x, Exponent(Exponent::inf)) == doctest::Approx(4.0));
    CHECK(p_norm(x, Exponent(3.0)) == doctest::Approx(std::pow(27.0 + 64.0, 1.0 / 3.0)));
}

TEST_CASE("operator shape validation") {
    CHECK_THROWS_AS(Operator(Matrix::Identity(2, 2), SpaceSpec(3, Exponent(2.0)),
                             SpaceSpec(2, Exponent(2.0))),
                    std::invalid_argument);
    CHECK_THROWS_AS(NormEstimate::exact(-1.0), std::invalid_argument);
    CHECK_THROWS_AS(NormEstimate(1.0, EstimateKind::exact, 0.5), std::invalid_argument);
}

TEST_CASE("sign pattern enumeration covers the cube") {
    Matrix a = Matrix::Identity(3, 3);
    int count = 0;
    for_each_sign_pattern(a, [&](const Vector& t, const Vector& y) {
        ++count;
        CHECK((y - t).norm() == doctest::Approx(0.0));
    });
    CHECK(count == 8);
    CHECK_THROWS_AS(for_each_sign_pattern(Matrix::Zero(1, 25), [](auto&, auto&) {}),
                    std::length_error);
}

TEST_CASE("exact operator norm rules") {
    auto op = [](Matrix a, double p, double q) {
        const int n = static_cast<int>(a.cols());
        const int m = static_cast<int>(a.rows());
        return Operator(std::move(a), SpaceSpec(n, Exponent(p)), SpaceSpec(m, Exponent(q)));
    };
    // l1 domain: max column norm
    Matrix ones = Matrix::Ones(2, 2);
    CHECK(op_norm(op(ones, 1.0, 1.0)).value == doctest::Approx(2.0));
    CHECK(op_norm(op(ones, 1.0, 2.0)).value == doctest::Approx(std::sqrt(2.0)));
    // linf codomain: max row dual-norm
    CHECK(op_norm(op(ones, 2.0, Exponent::inf)).value == doctest::Approx(std::sqrt(2.0)));
    // 2 -> 2: largest singular value
    Matrix d(2, 2);
    d << 3, 0, 0, 1;
    CHECK(op_norm(op(d, 2.0, 2.0)).value == doctest::Approx(3.0));
    // inf -> 1: sign enumeration
    Matrix had(2, 2);
    had << 1, 1, 1, -1;
    CHECK(op_norm(op(had, Exponent::inf, 1.0)).value == doctest::Approx(2.0));
    CHECK(op_norm(op(had, Exponent::inf, 1.0)).kind == EstimateKind::exact);
}

TEST_CASE("ascent lower bound and upper relaxation bracket") {
    Rng rng(7);
    Matrix a = rng.gaussian_matrix(4, 4);
    Operator u(a, SpaceSpec(4, Exponent(3.0)), SpaceSpec(4, Exponent(1.5)));
    const NormEstimate lo = op_norm(u);
    const NormEstimate hi = op_norm_upper(u);
    CHECK(lo.kind == EstimateKind::lower);
    CHECK(hi.kind == EstimateKind::upper);
    CHECK(lo.value <= hi.value + 1e-9);
    CHECK(lo.value > 0.0);
    // diagonal case p = q: norm is the largest diagonal entry
    Matrix d(2, 2);
    d << 2, 0, 0, 1;
    Operator ud(d, SpaceSpec(2, Exponent(3.0)), SpaceSpec(2, Exponent(3.0)));
    CHECK(op_norm(ud).value == doctest::Approx(2.0).epsilon(1e-6));
}

TEST_CASE("svd is consistent") {
    Matrix d = Matrix::Zero(3, 3);
    d.diagonal() << 3, 2, 1;
    SvdResult sv = svd(d);
    CHECK(sv.singular[0] == doctest::Approx(3.0));
    CHECK(sv.singular[2] == doctest::Approx(1.0));
    CHECK((sv.u * sv.singular.asDiagonal() * sv.v.transpose() - d).norm() ==
          doctest::Approx(0.0).epsilon(1e-12));
}

TEST_CASE("rng determinism") {
    Rng a(42), b(42);
    for (int i = 0; i < 100; ++i) CHECK(a.next_u64() == b.next_u64());
    Rng c(Rng::derive(42, 1)), d(Rng::derive(42, 2));
    CHECK(c.next_u64() != d.next_u64());
}

TEST_SUITE_END();
