#include <doctest.h>

#include "summa/seq.hpp"

using namespace summa;

TEST_SUITE_BEGIN("seq");

TEST_CASE("strong norm of the basis") {
    VectorFamily fam = VectorFamily::basis(SpaceSpec(3, Exponent(2.0)));
    CHECK(strong_lp_norm(fam, Exponent(2.0)) == doctest::Approx(std::sqrt(3.0)));
    CHECK(strong_lp_norm(fam, Exponent(1.0)) == doctest::Approx(3.0));
    CHECK(strong_lp_norm(fam, Exponent(Exponent::inf)) == doctest::Approx(1.0));
}

TEST_CASE("weak norms with polytope duals are exact") {
    // basis of l_1^2: weak-l1 = sup over the dual cube = 2
    VectorFamily f1 = VectorFamily::basis(SpaceSpec(2, Exponent(1.0)));
    NormEstimate w1 = weak_lp_norm(f1, Exponent(1.0));
    CHECK(w1.kind == EstimateKind::exact);
    CHECK(w1.value == doctest::Approx(2.0));
    // basis of l_inf^3: weak-l2 over +-e_k is 1
    VectorFamily fi = VectorFamily::basis(SpaceSpec(3, Exponent(Exponent::inf)));
    NormEstimate wi = weak_lp_norm(fi, Exponent(2.0));
    CHECK(wi.kind == EstimateKind::exact);
    CHECK(wi.value == doctest::Approx(1.0));
}

TEST_CASE("weak-l2 on a Hilbert host is the top singular value") {
    Rng rng(11);
    Matrix m = rng.gaussian_matrix(4, 6);
    VectorFamily fam(SpaceSpec(4, Exponent(2.0)), m);
    NormEstimate w = weak_lp_norm(fam, Exponent(2.0));
    CHECK(w.kind == EstimateKind::exact);
    CHECK(w.value == doctest::Approx(svd(m).singular[0]));
}

TEST_CASE("weak-l1 equals the sign supremum") {
    Rng rng(13);
    for (double host : {1.0, 2.0, Exponent::inf}) {
        VectorFamily fam(SpaceSpec(3, Exponent(host)), rng.gaussian_matrix(3, 5));
        NormEstimate w = weak_lp_norm(fam, Exponent(1.0));
        CHECK(w.kind == EstimateKind::exact);
        CHECK(w.value == doctest::Approx(sign_sup_norm(fam)).epsilon(1e-12));
    }
}

TEST_CASE("net lower bound stays under the upper relaxation") {
    Rng rng(17);
    VectorFamily fam(SpaceSpec(3, Exponent(3.0)), rng.gaussian_matrix(3, 4));
    NormEstimate lo = weak_lp_norm(fam, Exponent(2.0));
    NormEstimate hi = weak_lp_upper(fam, Exponent(2.0));
    CHECK(lo.kind == EstimateKind::lower);
    CHECK(lo.value <= hi.value + 1e-9);
    CHECK(lo.value > 0.0);
}

TEST_CASE("empty and singleton families") {
    VectorFamily empty(SpaceSpec(2, Exponent(2.0)), Matrix(2, 0));
    CHECK(weak_lp_norm(empty, Exponent(2.0)).value == 0.0);
    Vector x(2);
    x << 1.0, 1.0;
    VectorFamily single(SpaceSpec(2, Exponent(2.0)), x);
    CHECK(weak_lp_norm(single, Exponent(2.0)).value == doctest::Approx(std::sqrt(2.0)));
    CHECK(sign_sup_norm(single) == doctest::Approx(std::sqrt(2.0)));
}

TEST_CASE("family dimension validation") {
    CHECK_THROWS_AS(VectorFamily(SpaceSpec(2, Exponent(2.0)), Matrix::Identity(3, 3)),
                    std::invalid_argument);
}

TEST_SUITE_END();
