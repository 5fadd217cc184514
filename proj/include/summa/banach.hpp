#pragma once

#include <algorithm>
#include <cmath>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "summa/ideal.hpp"
#include "summa/rand_sums.hpp"

namespace summa {

/// Best witness ratio (E||sum r_n x_n||^2)^(1/2) / (sum ||x_n||^p)^(1/p)
/// over sampled families with exact Rademacher enumeration; a certified
/// lower bound of the type-p constant of the space.
inline NormEstimate type_constant_lower(const SpaceSpec& space, double p,
                                        const WitnessBudget& budget = {},
                                        int cap = kDefaultEnumCap) {
    if (!(p >= 1.0 && p <= 2.0))
        throw std::invalid_argument("type_constant_lower: p must lie in [1,2]");
    double best = 0.0;
    std::vector<Matrix> candidates;
    candidates.push_back(Matrix::Identity(space.dim, space.dim));
    Rng rng(Rng::derive(budget.seed, 0x74797065ULL));
    for (int f = 0; f < budget.families; ++f) {
        const int size =
            1 + static_cast<int>(rng.next_u64() % std::uint64_t(std::min(budget.max_size, cap)));
        candidates.push_back(rng.gaussian_matrix(space.dim, size));
    }
    for (const Matrix& m : candidates) {
        VectorFamily fam(space, m);
        const double denom = strong_lp_norm(fam, Exponent(p));
        if (denom <= 0.0) continue;
        best = std::max(best, rademacher_moment(fam, 2.0, cap) / denom);
    }
    return NormEstimate::lower(best, "witness search");
}

/// Best witness ratio (sum ||x_n||^q)^(1/q) / (E||sum r_n x_n||^2)^(1/2),
/// a certified lower bound of the cotype-q constant.
inline NormEstimate cotype_constant_lower(const SpaceSpec& space, double q,
                                          const WitnessBudget& budget = {},
                                          int cap = kDefaultEnumCap) {
    if (!(q >= 2.0)) throw std::invalid_argument("cotype_constant_lower: q must be >= 2");
    double best = 0.0;
    std::vector<Matrix> candidates;
    candidates.push_back(Matrix::Identity(space.dim, space.dim));
    Rng rng(Rng::derive(budget.seed, 0x636f7479ULL));
    for (int f = 0; f < budget.families; ++f) {
        const int size =
            1 + static_cast<int>(rng.next_u64() % std::uint64_t(std::min(budget.max_size, cap)));
        candidates.push_back(rng.gaussian_matrix(space.dim, size));
    }
    for (const Matrix& m : candidates) {
        VectorFamily fam(space, m);
        const double denom = rademacher_moment(fam, 2.0, cap);
        if (denom <= 0.0) continue;
        best = std::max(best, strong_lp_norm(fam, Exponent(q)) / denom);
    }
    return NormEstimate::lower(best, "witness search");
}

/// A diagonal multiplier sigma on l_p -> l_q, given either explicitly or as
/// the power law sigma_n = n^(-alpha).
struct DiagonalSpec {
    Exponent p{2.0};
    Exponent q{2.0};
    std::optional<double> alpha; // power law when set
    Vector sigma_list;           // explicit entries otherwise

    double sigma(int n) const { // 1-based
        if (alpha) return std::pow(double(n), -*alpha);
        if (n <= sigma_list.size()) return sigma_list[n - 1];
        return 0.0;
    }

    Matrix truncation(int n) const {
        Vector d(n);
        for (int i = 1; i <= n; ++i) d[i - 1] = sigma(i);
        return d.asDiagonal();
    }
};

struct ClassificationVerdict {
    bool gamma_radonifying = false;
    std::string criterion;         // table row and membership space
    double r = 0.0;                // the computed r (inf for rows 2)
    std::vector<double> evidence;  // truncated-norm growth data when attached
};

/// Applies the diagonal classification table:
///   row 1: 1 <= p < 2, q < 2p/(2-p): sigma in l_r, 1/r = 1/2 - 1/p + 1/q
///   row 2: 1 <= p < 2, q >= 2p/(2-p): sigma in l_inf
///   row 3: 2 <= p < inf: sigma in l_q
inline ClassificationVerdict diag_classify(const DiagonalSpec& spec) {
    if (spec.p.is_inf() || spec.q.is_inf())
        throw std::invalid_argument("diag_classify: p and q must be finite");
    const double p = spec.p.value();
    const double q = spec.q.value();
    ClassificationVerdict v;
    auto member_lr = [&](double r) {
        if (spec.alpha) return *spec.alpha * r > 1.0;
        return true; // a finite explicit list lies in every l_r
    };
    if (p < 2.0) {
        const double threshold = 2.0 * p / (2.0 - p);
        if (q < threshold) {
            const double inv_r = 0.5 - 1.0 / p + 1.0 / q;
            v.r = 1.0 / inv_r;
            v.gamma_radonifying = member_lr(v.r);
            v.criterion = "row 1: sigma in l_r, r = " + std::to_string(v.r);
            return v;
        }
        v.r = Exponent::inf;
        // l_inf membership: power laws need alpha >= 0; explicit lists are bounded
        v.gamma_radonifying = !spec.alpha || *spec.alpha >= 0.0;
        v.criterion = "row 2: sigma in l_inf";
        return v;
    }
    v.r = q;
    v.gamma_radonifying = member_lr(q);
    v.criterion = "row 3: sigma in l_q";
    return v;
}

struct GrowthTable {
    std::vector<int> dims;
    std::vector<double> values;
    std::vector<std::string> kinds;
    double slope = 0.0;    // extrapolated asymptotic log-log slope
    double ls_slope = 0.0; // raw log-log least squares slope
};

/// Default dim ladder for growth experiments: roughly geometric inside 2..64.
inline std::vector<int> default_growth_dims() {
    return {2, 3, 4, 6, 8, 12, 16, 24, 32, 48, 64};
}

namespace detail {

/// Asymptotic log-log growth slope of (dims, values): local slopes between
/// consecutive points, accelerated by one Aitken delta^2 pass (the transient
/// of a convergent truncation sequence decays too slowly below dim 128 for a
/// raw fit to read as flat). Falls back to the raw LS slope on short tables.
inline std::pair<double, double> growth_slopes(const std::vector<int>& dims,
                                               const std::vector<double>& values) {
    std::vector<double> x, y;
    for (std::size_t i = 0; i < dims.size(); ++i) {
        if (values[i] <= 0.0) continue;
        x.push_back(std::log(double(dims[i])));
        y.push_back(std::log(values[i]));
    }
    const int m = static_cast<int>(x.size());
    double sx = 0, sy = 0, sxx = 0, sxy = 0;
    for (int i = 0; i < m; ++i) {
        sx += x[i]; sy += y[i]; sxx += x[i] * x[i]; sxy += x[i] * y[i];
    }
    double ls = 0.0;
    if (m >= 2 && m * sxx - sx * sx > 0.0) ls = (m * sxy - sx * sy) / (m * sxx - sx * sx);
    std::vector<double> local;
    for (int i = 0; i + 1 < m; ++i)
        if (x[i + 1] > x[i]) local.push_back((y[i + 1] - y[i]) / (x[i + 1] - x[i]));
    if (local.size() < 3) return {ls, ls};
    double extrap = local.back();
    for (std::size_t k = 0; k + 2 < local.size(); ++k) {
        const double d1 = local[k + 1] - local[k];
        const double d2 = local[k + 2] - local[k + 1];
        const double den = d2 - d1;
        extrap = (std::abs(den) < 1e-14) ? local[k + 2]
                                         : local[k + 2] - d2 * d2 / den;
    }
    return {extrap, ls};
}

} // namespace detail

/// Gamma-norm estimates of the truncated diagonal across dims, with growth
/// slope fits. Hilbert-domain exact/MC path for p = 2, witness path
/// otherwise.
inline GrowthTable diag_growth_experiment(const DiagonalSpec& spec,
                                          const std::vector<int>& dims,
                                          const RandomPlan& plan = {},
                                          const WitnessBudget& budget = {}) {
    GrowthTable table;
    for (int n : dims) {
        if (n > 128) throw std::invalid_argument("diag_growth_experiment: dim > 128");
        Operator u(spec.truncation(n), SpaceSpec(n, spec.p), SpaceSpec(n, spec.q));
        NormEstimate est = spec.p.is(2.0) ? gamma_norm_hilbert_domain(u, plan)
                                          : gamma_summing_lower(u, budget, plan);
        table.dims.push_back(n);
        table.values.push_back(est.value);
        table.kinds.push_back(kind_name(est.kind));
    }
    auto [slope, ls] = detail::growth_slopes(table.dims, table.values);
    table.slope = slope;
    table.ls_slope = ls;
    return table;
}

namespace detail {

/// Candidate contractions l_2^k -> (dim, exp): coordinate embeddings,
/// witness-family maps, and normalized Gaussian draws. All are rescaled by a
/// sound upper bound of their 2 -> exp norm, so each is a true contraction.
inline std::vector<Matrix> contraction_candidates_in(const SpaceSpec& target, int k,
                                                     const WitnessBudget& budget,
                                                     std::uint64_t salt) {
    std::vector<Matrix> out;
    auto add_normalized = [&](Matrix v) {
        Operator op(v, SpaceSpec(k, Exponent(2.0)), target);
        const double n = op_norm_upper(op).value;
        if (n > 0.0) out.push_back(v / n);
    };
    // coordinate embedding
    Matrix emb = Matrix::Zero(target.dim, k);
    for (int j = 0; j < std::min(k, target.dim); ++j) emb(j, j) = 1.0;
    add_normalized(emb);
    // single-coordinate embeddings
    for (int j = 0; j < target.dim; ++j) {
        Matrix e = Matrix::Zero(target.dim, k);
        e(j, 0) = 1.0;
        add_normalized(e);
    }
    Rng rng(Rng::derive(budget.seed, salt));
    for (int f = 0; f < budget.families; ++f) add_normalized(rng.gaussian_matrix(target.dim, k));
    return out;
}

/// Candidate contractions (dim, exp) -> l_2^m.
inline std::vector<Matrix> contraction_candidates_out(const SpaceSpec& source, int m,
                                                      const WitnessBudget& budget,
                                                      std::uint64_t salt) {
    std::vector<Matrix> out;
    auto add_normalized = [&](Matrix w) {
        Operator op(w, source, SpaceSpec(m, Exponent(2.0)));
        const double n = op_norm_upper(op).value;
        if (n > 0.0) out.push_back(w / n);
    };
    Matrix proj = Matrix::Zero(m, source.dim);
    for (int j = 0; j < std::min(m, source.dim); ++j) proj(j, j) = 1.0;
    add_normalized(proj);
    Rng rng(Rng::derive(budget.seed, salt));
    for (int f = 0; f < budget.families; ++f) add_normalized(rng.gaussian_matrix(m, source.dim));
    return out;
}

} // namespace detail

/// sup of hs_norm(w o u o v) over sampled Hilbert contractions v: l_2^k -> E
/// and w: F -> l_2^m; a sound lower bound of the pre-Hilbert-Schmidt norm at
/// truncation (k, m).
inline NormEstimate phs_lower(const Operator& u, int k, int m,
                              const WitnessBudget& budget = {}) {
    if (u.matrix.isZero(0.0)) return NormEstimate::lower(0.0, "zero operator");
    std::vector<Matrix> vs = detail::contraction_candidates_in(u.domain, k, budget, 0x766dULL);
    std::vector<Matrix> ws = detail::contraction_candidates_out(u.codomain, m, budget, 0x776dULL);
    // witness families give the sharpest v maps: v e_n = x_n / weak2(fam)
    for (const VectorFamily& fam : detail::witness_families(u, budget)) {
        if (fam.count() > k) continue;
        const double denom = weak_lp_upper(fam, Exponent(2.0)).value;
        if (denom <= 0.0) continue;
        Matrix v = Matrix::Zero(u.domain.dim, k);
        v.leftCols(fam.count()) = fam.vectors / denom;
        vs.push_back(v);
    }
    double best = 0.0;
    Matrix best_v, best_w;
    for (const Matrix& v : vs)
        for (const Matrix& w : ws) {
            const double val = (w * u.matrix * v).norm();
            if (val > best) {
                best = val;
                best_v = v;
                best_w = w;
            }
        }
    // local refinement of the best pair
    if (best > 0.0 && budget.refine_steps > 0) {
        Rng rng(Rng::derive(budget.seed, 0x706873ULL));
        double scale = 0.2;
        for (int it = 0; it < budget.refine_steps; ++it) {
            Matrix v = best_v + scale * rng.gaussian_matrix(static_cast<int>(best_v.rows()), k);
            Matrix w = best_w + scale * rng.gaussian_matrix(m, static_cast<int>(best_w.cols()));
            const double nv = op_norm_upper(Operator(v, SpaceSpec(k, Exponent(2.0)), u.domain)).value;
            const double nw = op_norm_upper(Operator(w, u.codomain, SpaceSpec(m, Exponent(2.0)))).value;
            if (nv <= 0.0 || nw <= 0.0) continue;
            v /= nv;
            w /= nw;
            const double val = (w * u.matrix * v).norm();
            if (val > best) {
                best = val;
                best_v = v;
                best_w = w;
            } else {
                scale *= 0.98;
            }
        }
    }
    return NormEstimate::lower(best, "sampled contractions");
}

struct PhsPi2Report {
    NormEstimate phs;
    NormEstimate pi2_lower;
    NormEstimate pi2_upper;
    double pinch_ratio = 0.0; // phs / pi2_upper
    bool consistent = true;   // phs <= pi2_upper + 1e-8
};

/// Compares the PHS lower bound against the 2-summing bracket for a Hilbert
/// codomain, where the two classes coincide.
inline PhsPi2Report phs_vs_pi2_report(const Operator& u, const WitnessBudget& budget = {}) {
    if (!u.codomain.exp.is(2.0))
        throw std::invalid_argument("phs_vs_pi2_report: codomain must be l_2");
    PhsPi2Report rep;
    rep.phs = phs_lower(u, u.domain.dim, u.codomain.dim, budget);
    rep.pi2_lower = pi_p_lower(u, 2.0, budget);
    auto upper = pi_2_upper(u);
    if (!upper) throw std::runtime_error("phs_vs_pi2_report: no Pietsch certificate");
    rep.pi2_upper = upper->bound;
    if (rep.pi2_upper.value > 0.0) rep.pinch_ratio = rep.phs.value / rep.pi2_upper.value;
    rep.consistent = rep.phs.value <= rep.pi2_upper.value + 1e-8;
    return rep;
}

struct PhsGammaReport {
    std::vector<int> sizes;
    std::vector<double> phs_values;
    std::vector<double> gamma_values;
    std::vector<double> ratios; // phs / gamma, logged only (both are lower bounds)
};

/// Ratio trajectory of the PHS and gamma-summing lower bounds across
/// truncation sizes. No hard assertion; recorded for boundedness checks.
inline PhsGammaReport phs_vs_gamma_report(const Operator& u, const std::vector<int>& sizes,
                                          const WitnessBudget& budget = {},
                                          const RandomPlan& plan = {}) {
    if (u.codomain.exp.value() < 2.0)
        throw std::invalid_argument("phs_vs_gamma_report: codomain exponent must be >= 2");
    PhsGammaReport rep;
    const NormEstimate gamma = gamma_summing_lower(u, budget, plan);
    for (int s : sizes) {
        const NormEstimate phs = phs_lower(u, s, s, budget);
        rep.sizes.push_back(s);
        rep.phs_values.push_back(phs.value);
        rep.gamma_values.push_back(gamma.value);
        rep.ratios.push_back(gamma.value > 0.0 ? phs.value / gamma.value : 0.0);
    }
    return rep;
}

} // namespace summa
