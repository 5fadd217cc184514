#pragma once

#include <chrono>
#include <cmath>
#include <string>
#include <vector>

#include <json.hpp>

#include "summa/banach.hpp"
#include "summa/grothendieck.hpp"
#include "summa/ideal.hpp"
#include "summa/io.hpp"

namespace summa {

/// One check of the verification suite. `seconds` and `time_ok` are kept out
/// of the serialized report so that repeated runs stay byte-identical.
struct CriterionResult {
    std::string name;
    bool pass = false;
    nlohmann::json detail;
    double seconds = 0.0;
    double time_limit = 0.0; // 0 = none
    bool time_ok = true;
};

struct SuiteConfig {
    std::uint64_t seed = 42;
    bool quick = false; // smaller sample counts, same checks
};

struct SuiteReport {
    SuiteConfig config;
    std::vector<CriterionResult> criteria;

    bool all_pass() const {
        for (const auto& c : criteria)
            if (!c.pass) return false;
        return true;
    }
};

namespace suite_detail {

using nlohmann::json;
using Clock = std::chrono::steady_clock;

inline double elapsed(Clock::time_point t0) {
    return std::chrono::duration<double>(Clock::now() - t0).count();
}

inline CriterionResult finish(CriterionResult r, Clock::time_point t0) {
    r.seconds = elapsed(t0);
    r.time_ok = (r.time_limit <= 0.0) || (r.seconds < r.time_limit);
    return r;
}

/// Frobenius vs singular-value route agreement on random matrices.
inline CriterionResult c1_hs_consistency(const SuiteConfig& cfg) {
    const auto t0 = Clock::now();
    CriterionResult r;
    r.name = "hs-consistency";
    r.time_limit = 1.0;
    Rng rng(Rng::derive(cfg.seed, 101));
    double worst = 0.0;
    const int trials = cfg.quick ? 20 : 100;
    for (int t = 0; t < trials; ++t) {
        Matrix a = rng.gaussian_matrix(8, 8);
        const double frob = a.norm();
        const double via_sv = svd(a).singular.norm();
        worst = std::max(worst, std::abs(frob - via_sv));
        hs_norm(Operator(a, SpaceSpec(8, Exponent(2.0)), SpaceSpec(8, Exponent(2.0))));
    }
    r.pass = worst <= 1e-10;
    r.detail = {{"trials", trials}, {"worst_abs_diff", worst}};
    return finish(r, t0);
}

/// Two-summing bracket pinches sqrt(n) on the l_inf -> l_2 identity, with a
/// valid certificate and a small factorization residual.
inline CriterionResult c2_pietsch_pinch(const SuiteConfig& cfg) {
    const auto t0 = Clock::now();
    CriterionResult r;
    r.name = "pietsch-pinch";
    r.time_limit = 10.0;
    r.pass = true;
    json rows = json::array();
    WitnessBudget budget;
    budget.seed = cfg.seed;
    for (int n = 2; n <= 8; ++n) {
        Operator id(Matrix::Identity(n, n), SpaceSpec(n, Exponent(Exponent::inf)),
                    SpaceSpec(n, Exponent(2.0)));
        auto up = pi_2_upper(id);
        const NormEstimate lo = pi_p_lower(id, 2.0, budget);
        const double target = std::sqrt(double(n));
        bool ok = up.has_value();
        double residual = -1.0, slack = 0.0;
        if (ok) {
            slack = up->certificate.domination_slack(id);
            residual = pietsch_factorize(id, up->certificate).residual;
            ok = std::abs(up->bound.value - target) <= 1e-4 &&
                 std::abs(lo.value - target) <= 1e-4 &&
                 up->certificate.valid_for(id, 1e-8) && residual <= 1e-8;
        }
        rows.push_back({{"n", n},
                        {"upper", up ? up->bound.value : -1.0},
                        {"lower", lo.value},
                        {"target", target},
                        {"slack", slack},
                        {"residual", residual}});
        r.pass = r.pass && ok;
    }
    r.detail = {{"rows", rows}};
    return finish(r, t0);
}

/// sign_sup_norm agrees with the weak-l1 norm on random families in l_1, l_2
/// and l_inf hosts.
inline CriterionResult c3_sign_weak_l1(const SuiteConfig& cfg) {
    const auto t0 = Clock::now();
    CriterionResult r;
    r.name = "sign-sup-vs-weak-l1";
    r.time_limit = 5.0;
    Rng rng(Rng::derive(cfg.seed, 103));
    const Exponent hosts[3] = {Exponent(1.0), Exponent(2.0), Exponent(Exponent::inf)};
    double worst = 0.0;
    bool all_exact = true;
    const int trials = cfg.quick ? 60 : 200;
    for (int t = 0; t < trials; ++t) {
        const int dim = 2 + static_cast<int>(rng.next_u64() % 5);
        const int n = 1 + static_cast<int>(rng.next_u64() % 10);
        VectorFamily fam(SpaceSpec(dim, hosts[t % 3]), rng.gaussian_matrix(dim, n));
        const double a = sign_sup_norm(fam);
        const NormEstimate w = weak_lp_norm(fam, Exponent(1.0));
        all_exact = all_exact && (w.kind == EstimateKind::exact);
        worst = std::max(worst, std::abs(a - w.value));
    }
    r.pass = all_exact && worst <= 1e-10;
    r.detail = {{"trials", trials}, {"worst_abs_diff", worst}, {"all_exact", all_exact}};
    return finish(r, t0);
}

/// Basis of l_inf^N: Rademacher second moment is exactly 1 and the cotype-2
/// witness ratio reaches sqrt(N).
inline CriterionResult c4_c0_example(const SuiteConfig& cfg) {
    const auto t0 = Clock::now();
    CriterionResult r;
    r.name = "linf-basis-cotype";
    r.time_limit = 30.0;
    r.pass = true;
    WitnessBudget budget;
    budget.seed = cfg.seed;
    budget.families = 8;
    budget.max_size = 6;
    double worst_moment = 0.0, worst_cotype = 0.0;
    const int nmax = cfg.quick ? 12 : 16;
    for (int n = 2; n <= nmax; ++n) {
        SpaceSpec space(n, Exponent(Exponent::inf));
        const double m = rademacher_moment(VectorFamily::basis(space), 2.0);
        worst_moment = std::max(worst_moment, std::abs(m - 1.0));
        const double cot = cotype_constant_lower(space, 2.0, budget).value;
        const double deficit = std::sqrt(double(n)) - cot;
        worst_cotype = std::max(worst_cotype, deficit);
        r.pass = r.pass && std::abs(m - 1.0) <= 1e-12 && deficit <= 1e-9;
    }
    r.detail = {{"max_n", nmax},
                {"worst_moment_dev", worst_moment},
                {"worst_cotype_deficit", worst_cotype}};
    return finish(r, t0);
}

/// Exact Rademacher moment vs the sqrt(pi/2)-scaled Gaussian Monte Carlo
/// moment, with a four-stderr margin.
inline CriterionResult c5_m1_comparison(const SuiteConfig& cfg) {
    const auto t0 = Clock::now();
    CriterionResult r;
    r.name = "rademacher-gaussian-comparison";
    r.time_limit = 60.0;
    Rng rng(Rng::derive(cfg.seed, 105));
    const Exponent hosts[3] = {Exponent(1.0), Exponent(2.0), Exponent(Exponent::inf)};
    const double scale = std::sqrt(std::acos(-1.0) / 2.0); // sqrt(pi/2)
    int violations = 0;
    double worst_margin = 1e300;
    const int trials = cfg.quick ? 20 : 100;
    for (int t = 0; t < trials; ++t) {
        const int dim = 2 + static_cast<int>(rng.next_u64() % 4);
        const int n = 1 + static_cast<int>(rng.next_u64() % 6);
        VectorFamily fam(SpaceSpec(dim, hosts[t % 3]), rng.gaussian_matrix(dim, n));
        const double ex = rademacher_moment(fam, 2.0);
        RandomPlan plan;
        plan.seed = Rng::derive(cfg.seed, 10500 + std::uint64_t(t));
        plan.samples = cfg.quick ? 20000 : 100000;
        plan.moment_p = 2.0;
        const NormEstimate g = gaussian_moment(fam, plan);
        const double bound = scale * g.value + 4.0 * scale * g.stderr_;
        worst_margin = std::min(worst_margin, bound - ex);
        if (ex > bound) ++violations;
    }
    r.pass = violations == 0;
    r.detail = {{"trials", trials}, {"violations", violations}, {"worst_margin", worst_margin}};
    return finish(r, t0);
}

/// 2x2 sign-matrix ratio sqrt(2), and the ratio bracket [1, 1.8] on random
/// sign matrices.
inline CriterionResult c6_grothendieck(const SuiteConfig& cfg) {
    const auto t0 = Clock::now();
    CriterionResult r;
    r.name = "grothendieck-ratio";
    r.time_limit = 60.0;
    BilinearBudget budget;
    budget.seed = cfg.seed;
    Matrix had(2, 2);
    had << 1, 1, 1, -1;
    const double base = grothendieck_ratio(had, budget);
    bool ok = std::abs(base - std::sqrt(2.0)) <= 1e-5;
    Rng rng(Rng::derive(cfg.seed, 106));
    double rmin = 1e300, rmax = 0.0;
    const int trials = cfg.quick ? 10 : 50;
    for (int t = 0; t < trials; ++t) {
        const int m = 2 + static_cast<int>(rng.next_u64() % 5);
        const int n = 2 + static_cast<int>(rng.next_u64() % 5);
        Matrix a(m, n);
        for (int i = 0; i < m; ++i)
            for (int j = 0; j < n; ++j) a(i, j) = rng.sign();
        if (norm_inf_to_1(a) <= 0.0) continue;
        const double ratio = grothendieck_ratio(a, budget);
        rmin = std::min(rmin, ratio);
        rmax = std::max(rmax, ratio);
        ok = ok && ratio >= 1.0 - 1e-9 && ratio <= 1.8;
    }
    r.pass = ok;
    r.detail = {{"hadamard_ratio", base}, {"trials", trials}, {"min", rmin}, {"max", rmax}};
    return finish(r, t0);
}

/// One-summing lower bound stays below 1.8 times the operator norm on random
/// l_1 -> l_2 operators.
inline CriterionResult c7_little_grothendieck(const SuiteConfig& cfg) {
    const auto t0 = Clock::now();
    CriterionResult r;
    r.name = "little-grothendieck";
    r.time_limit = 30.0;
    Rng rng(Rng::derive(cfg.seed, 107));
    WitnessBudget budget;
    budget.seed = cfg.seed;
    double worst = 0.0;
    bool ok = true;
    const int trials = cfg.quick ? 10 : 50;
    for (int t = 0; t < trials; ++t) {
        Operator u(rng.gaussian_matrix(6, 6), SpaceSpec(6, Exponent(1.0)),
                   SpaceSpec(6, Exponent(2.0)));
        const LittleGrothendieckReport rep = little_grothendieck_check(u, budget);
        ok = ok && rep.defined && rep.pass;
        worst = std::max(worst, rep.ratio);
    }
    r.pass = ok;
    r.detail = {{"trials", trials}, {"worst_ratio", worst}};
    return finish(r, t0);
}

/// Nuclear representation: reconstruction error and the independent weak-l1
/// norm of the functional family vs the closed form.
inline CriterionResult c8_nuclear_rep(const SuiteConfig& cfg) {
    const auto t0 = Clock::now();
    CriterionResult r;
    r.name = "nuclear-representation";
    r.time_limit = 30.0;
    Rng rng(Rng::derive(cfg.seed, 108));
    double worst_recon = 0.0, worst_weak = 0.0;
    const int trials = cfg.quick ? 10 : 50;
    for (int t = 0; t < trials; ++t) {
        const int n = 2 + static_cast<int>(rng.next_u64() % 7);
        const int m = 2 + static_cast<int>(rng.next_u64() % 7);
        Operator u(rng.gaussian_matrix(m, n), SpaceSpec(n, Exponent(2.0)),
                   SpaceSpec(m, Exponent(2.0)));
        const NuclearRep rep = weak_star_nuclear_rep(u);
        worst_recon = std::max(worst_recon,
                               (rep.reconstruct(n) - u.matrix).norm());
        VectorFamily fam(SpaceSpec(n, Exponent(2.0)), rep.functionals);
        const NormEstimate w = weak_lp_norm(fam, Exponent(1.0));
        worst_weak = std::max(worst_weak, std::abs(w.value - rep.weak_l1_norm()));
    }
    r.pass = worst_recon <= 1e-10 && worst_weak <= 1e-8;
    r.detail = {{"trials", trials},
                {"worst_reconstruction", worst_recon},
                {"worst_weak_l1_diff", worst_weak}};
    return finish(r, t0);
}

/// Direct convergence probe for sum sigma_n^r with sigma_n = n^(-alpha):
/// the partial sums to 1e5 and 1e6 nearly agree iff the series converges.
inline bool power_series_converges(double alpha, double r) {
    double t5 = 0.0, t6 = 0.0;
    for (long n = 1; n <= 1000000; ++n) {
        const double term = std::pow(double(n), -alpha * r);
        t6 += term;
        if (n <= 100000) t5 += term;
    }
    return t6 / t5 < 1.1;
}

/// Diagonal table: growth slopes of truncated-diagonal norms match the
/// convergence of sum sigma_n^r, and the classifier agrees with the direct
/// series probe.
inline CriterionResult c9_diagonal_table(const SuiteConfig& cfg) {
    const auto t0 = Clock::now();
    CriterionResult r;
    r.name = "diagonal-growth";
    r.time_limit = 60.0;
    const std::vector<int> dims = default_growth_dims();
    DiagonalSpec conv{Exponent(2.0), Exponent(2.0), 0.6, {}};
    DiagonalSpec dive{Exponent(2.0), Exponent(2.0), 0.4, {}};
    const GrowthTable tc = diag_growth_experiment(conv, dims);
    const GrowthTable td = diag_growth_experiment(dive, dims);
    bool ok = tc.slope <= 0.02 && td.slope >= 0.05;
    // classifier vs the direct series probe
    json verdicts = json::array();
    const double alphas[3] = {0.6, 0.4, 0.6};
    const Exponent ps[3] = {Exponent(2.0), Exponent(2.0), Exponent(1.0)};
    const Exponent qs[3] = {Exponent(2.0), Exponent(2.0), Exponent(1.0)};
    for (int i = 0; i < 3; ++i) {
        DiagonalSpec s{ps[i], qs[i], alphas[i], {}};
        const ClassificationVerdict v = diag_classify(s);
        const bool direct = power_series_converges(alphas[i], v.r);
        ok = ok && (v.gamma_radonifying == direct);
        verdicts.push_back({{"p", ps[i].value()},
                            {"q", qs[i].value()},
                            {"alpha", alphas[i]},
                            {"r", v.r},
                            {"verdict", v.gamma_radonifying},
                            {"direct", direct}});
    }
    r.pass = ok;
    r.detail = {{"convergent_slope", tc.slope},
                {"divergent_slope", td.slope},
                {"verdicts", verdicts}};
    return finish(r, t0);
}

/// PHS lower bound stays under the 2-summing upper bound with a pinched
/// ratio, and Hilbert identities collapse all three values.
inline CriterionResult c10_phs_pinch(const SuiteConfig& cfg) {
    const auto t0 = Clock::now();
    CriterionResult r;
    r.name = "phs-pinch";
    r.time_limit = 120.0;
    Rng rng(Rng::derive(cfg.seed, 110));
    WitnessBudget budget;
    budget.seed = cfg.seed;
    bool ok = true;
    double worst_ratio = 1e300;
    const int trials = cfg.quick ? 5 : 20;
    for (int t = 0; t < trials; ++t) {
        Operator u(rng.gaussian_matrix(4, 4), SpaceSpec(4, Exponent(1.0)),
                   SpaceSpec(4, Exponent(2.0)));
        const PhsPi2Report rep = phs_vs_pi2_report(u, budget);
        ok = ok && rep.consistent && rep.pinch_ratio >= 0.5;
        worst_ratio = std::min(worst_ratio, rep.pinch_ratio);
    }
    // Hilbert identity: all three values pinch sqrt(3) within 5%
    Operator id3(Matrix::Identity(3, 3), SpaceSpec(3, Exponent(2.0)),
                 SpaceSpec(3, Exponent(2.0)));
    const PhsPi2Report h = phs_vs_pi2_report(id3, budget);
    const double target = std::sqrt(3.0);
    auto within5 = [&](double v) { return std::abs(v - target) <= 0.05 * target; };
    const bool hilbert_ok =
        within5(h.phs.value) && within5(h.pi2_lower.value) && within5(h.pi2_upper.value);
    r.pass = ok && hilbert_ok;
    r.detail = {{"trials", trials},
                {"worst_pinch_ratio", worst_ratio},
                {"hilbert", {{"phs", h.phs.value},
                             {"pi2_lower", h.pi2_lower.value},
                             {"pi2_upper", h.pi2_upper.value}}}};
    return finish(r, t0);
}

inline std::vector<CriterionResult> run_criteria(const SuiteConfig& cfg) {
    return {c1_hs_consistency(cfg), c2_pietsch_pinch(cfg),  c3_sign_weak_l1(cfg),
            c4_c0_example(cfg),     c5_m1_comparison(cfg),  c6_grothendieck(cfg),
            c7_little_grothendieck(cfg), c8_nuclear_rep(cfg), c9_diagonal_table(cfg),
            c10_phs_pinch(cfg)};
}

} // namespace suite_detail

/// Serialized form of a report; excludes wall-clock data so identical
/// (seed, config) runs serialize byte-identically.
inline nlohmann::json suite_report_json(const SuiteReport& rep) {
    nlohmann::json crit = nlohmann::json::array();
    for (const auto& c : rep.criteria)
        crit.push_back({{"name", c.name}, {"pass", c.pass}, {"detail", c.detail}});
    return {{"version", kVersion},
            {"seed", rep.config.seed},
            {"quick", rep.config.quick},
            {"criteria", crit},
            {"all_pass", rep.all_pass()}};
}

/// Runs the ten numeric criteria, then the determinism criterion: a second
/// full run must serialize to the identical byte string.
inline SuiteReport run_suite(const SuiteConfig& cfg = {}) {
    const auto t0 = suite_detail::Clock::now();
    SuiteReport rep;
    rep.config = cfg;
    rep.criteria = suite_detail::run_criteria(cfg);
    SuiteReport rerun;
    rerun.config = cfg;
    rerun.criteria = suite_detail::run_criteria(cfg);
    CriterionResult det;
    det.name = "determinism";
    const std::string s1 = suite_report_json(rep).dump();
    const std::string s2 = suite_report_json(rerun).dump();
    det.pass = (s1 == s2);
    det.detail = {{"bytes", s1.size()}, {"identical", det.pass}};
    det.seconds = suite_detail::elapsed(t0);
    rep.criteria.push_back(det);
    return rep;
}

} // namespace summa
