#include <doctest.h>

#include "summa/banach.hpp"

using namespace summa;

TEST_SUITE_BEGIN("banach");

TEST_CASE("type constant of a Hilbert space is one") {
    WitnessBudget budget;
    budget.families = 16;
    const NormEstimate t = type_constant_lower(SpaceSpec(3, Exponent(2.0)), 2.0, budget);
    CHECK(t.value == doctest::Approx(1.0).epsilon(1e-10)); // parallelogram identity
}

TEST_CASE("cotype witness of the linf basis") {
    WitnessBudget budget;
    budget.families = 8;
    const NormEstimate c = cotype_constant_lower(SpaceSpec(4, Exponent(Exponent::inf)), 2.0,
                                                 budget);
    CHECK(c.value >= 2.0 - 1e-9);
}

TEST_CASE("diagonal classification rows") {
    // row 1: p=1, q=1 -> 1/r = 1/2 - 1 + 1, r = 2
    ClassificationVerdict v1 = diag_classify({Exponent(1.0), Exponent(1.0), 0.6, {}});
    CHECK(v1.gamma_radonifying);
    CHECK(v1.r == doctest::Approx(2.0));
    // row 2: p=1, q=2 hits the threshold 2p/(2-p) = 2, bounded sigma suffices
    Vector sig(3);
    sig << 1.0, 0.5, 0.25;
    ClassificationVerdict v2 = diag_classify({Exponent(1.0), Exponent(2.0), std::nullopt, sig});
    CHECK(v2.gamma_radonifying);
    CHECK(v2.r == Exponent::inf);
    // row 3: p=2, q=2, constant sigma is not in l_2
    ClassificationVerdict v3 = diag_classify({Exponent(2.0), Exponent(2.0), 0.0, {}});
    CHECK_FALSE(v3.gamma_radonifying);
    CHECK(v3.r == doctest::Approx(2.0));
    CHECK_THROWS_AS(diag_classify({Exponent(Exponent::inf), Exponent(2.0), 0.5, {}}),
                    std::invalid_argument);
}

TEST_CASE("classification is scale covariant") {
    Vector sig(4);
    sig << 4.0, 2.0, 1.0, 0.5;
    ClassificationVerdict a = diag_classify({Exponent(1.5), Exponent(1.0), std::nullopt, sig});
    ClassificationVerdict b =
        diag_classify({Exponent(1.5), Exponent(1.0), std::nullopt, Vector(7.5 * sig)});
    CHECK(a.gamma_radonifying == b.gamma_radonifying);
    CHECK(a.r == doctest::Approx(b.r));
}

TEST_CASE("growth slopes separate convergent and divergent diagonals") {
    const std::vector<int> dims = default_growth_dims();
    GrowthTable conv = diag_growth_experiment({Exponent(2.0), Exponent(2.0), 0.6, {}}, dims);
    GrowthTable dive = diag_growth_experiment({Exponent(2.0), Exponent(2.0), 0.4, {}}, dims);
    CHECK(conv.slope <= 0.02);
    CHECK(dive.slope >= 0.05);
    for (const auto& kind : conv.kinds) CHECK(kind == "exact");
}

TEST_CASE("zero diagonal gives a zero table") {
    GrowthTable t = diag_growth_experiment({Exponent(2.0), Exponent(2.0), std::nullopt, {}},
                                           {2, 4, 8});
    for (double v : t.values) CHECK(v == 0.0);
    CHECK(t.slope == 0.0);
}

TEST_CASE("phs lower bound on identities") {
    Operator id2(Matrix::Identity(2, 2), SpaceSpec(2, Exponent(2.0)),
                 SpaceSpec(2, Exponent(2.0)));
    CHECK(phs_lower(id2, 2, 2).value == doctest::Approx(std::sqrt(2.0)).epsilon(1e-9));
    Operator z(Matrix::Zero(2, 2), SpaceSpec(2, Exponent(1.0)), SpaceSpec(2, Exponent(2.0)));
    CHECK(phs_lower(z, 2, 2).value == 0.0);
    Operator id12(Matrix::Identity(2, 2), SpaceSpec(2, Exponent(1.0)),
                  SpaceSpec(2, Exponent(2.0)));
    CHECK(phs_lower(id12, 2, 2).value >= 1.0 - 1e-9);
}

TEST_CASE("phs is monotone in the truncation size") {
    Rng rng(37);
    Operator u(rng.gaussian_matrix(3, 3), SpaceSpec(3, Exponent(1.0)),
               SpaceSpec(3, Exponent(2.0)));
    WitnessBudget budget;
    budget.families = 16;
    budget.refine_steps = 0; // refinement reseeds per call; compare the raw sweeps
    const double a = phs_lower(u, 1, 1, budget).value;
    const double b = phs_lower(u, 3, 3, budget).value;
    CHECK(a <= b + 1e-12);
}

TEST_CASE("phs stays under the two-summing upper bound") {
    Operator id(Matrix::Identity(2, 2), SpaceSpec(2, Exponent(Exponent::inf)),
                SpaceSpec(2, Exponent(2.0)));
    const PhsPi2Report rep = phs_vs_pi2_report(id);
    CHECK(rep.consistent);
    CHECK(rep.pi2_upper.value == doctest::Approx(std::sqrt(2.0)).epsilon(1e-4));
    CHECK(rep.phs.value <= std::sqrt(2.0) + 1e-8);
}

TEST_CASE("phs and gamma pinch on the Hilbert identity") {
    Operator id(Matrix::Identity(3, 3), SpaceSpec(3, Exponent(2.0)),
                SpaceSpec(3, Exponent(2.0)));
    const PhsGammaReport rep = phs_vs_gamma_report(id, {1, 2, 3});
    REQUIRE(rep.ratios.size() == 3);
    CHECK(rep.gamma_values[0] == doctest::Approx(rep.gamma_values[2]));
    CHECK(rep.ratios[2] == doctest::Approx(1.0).epsilon(0.05));
}

TEST_SUITE_END();
