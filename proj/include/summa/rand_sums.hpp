#pragma once

#include <Eigen/Dense>
#include <Eigen/QR>
#include <cmath>
#include <stdexcept>

#include "summa/rng.hpp"
#include "summa/seq.hpp"

namespace summa {

/// (E || sum_n r_n x_n ||^p)^(1/p), exact average over all 2^N sign patterns.
inline double rademacher_moment(const VectorFamily& fam, double p,
                                int cap = kDefaultEnumCap) {
    if (!(p >= 1.0)) throw std::invalid_argument("rademacher_moment: p must be >= 1");
    const int n = fam.count();
    if (n == 0) return 0.0;
    double acc = 0.0;
    for_each_sign_pattern(fam.vectors, [&](const Vector&, const Vector& y) {
        acc += std::pow(p_norm(y, fam.space.exp), p);
    }, cap);
    const double total = std::ldexp(1.0, n); // 2^n
    return std::pow(acc / total, 1.0 / p);
}

namespace detail {

inline constexpr long kMcBlock = 4096;

/// Blocked Monte Carlo mean of ||sum_n g_n x_n||^p with per-block derived
/// seeds and a fixed reduction order; bit-identical for identical plans.
/// Returns (mean of Y, stderr of that mean) for Y = ||.||^p.
inline std::pair<double, double> mc_gaussian_power(const VectorFamily& fam,
                                                   const RandomPlan& plan) {
    const long nsamp = plan.samples;
    double sum = 0.0, sumsq = 0.0;
    long done = 0;
    std::uint64_t block = 0;
    const int n = fam.count();
    Vector g(n);
    while (done < nsamp) {
        Rng rng(Rng::derive(plan.seed, block++));
        const long m = std::min<long>(kMcBlock, nsamp - done);
        for (long s = 0; s < m; ++s) {
            for (int j = 0; j < n; ++j) g[j] = rng.gaussian();
            const double v = std::pow(p_norm(fam.vectors * g, fam.space.exp), plan.moment_p);
            sum += v;
            sumsq += v * v;
        }
        done += m;
    }
    const double mean = sum / double(nsamp);
    const double var = std::max(0.0, sumsq / double(nsamp) - mean * mean);
    const double se = (nsamp > 1) ? std::sqrt(var / double(nsamp - 1)) : 0.0;
    return {mean, se};
}

} // namespace detail

/// (E || sum_n gamma_n x_n ||^p)^(1/p). Exact for an l_2 host with p = 2
/// (Gaussian orthonormality collapses it to the strong-l2 norm), Monte Carlo
/// otherwise with a delta-method stderr.
inline NormEstimate gaussian_moment(const VectorFamily& fam, const RandomPlan& plan) {
    if (fam.count() == 0) return NormEstimate::exact(0.0, "empty family");
    if (fam.space.exp.is(2.0) && plan.moment_p == 2.0)
        return NormEstimate::exact(fam.vectors.norm(), "gaussian orthonormality");
    auto [mean, se] = detail::mc_gaussian_power(fam, plan);
    if (mean <= 0.0) return NormEstimate::montecarlo(0.0, 0.0, "mc");
    const double p = plan.moment_p;
    const double value = std::pow(mean, 1.0 / p);
    const double se_value = value / (p * mean) * se; // delta method
    return NormEstimate::montecarlo(value, se_value, "mc");
}

struct KhintchineReport {
    double ratio;       // exact (E|sum a_n r_n|^p)^(1/p) / ||a||_2
    bool bracket_ok;    // ratio <= 1 for p <= 2, >= 1 for p >= 2
};

inline KhintchineReport khintchine_ratio(const Vector& a, double p,
                                         int cap = kDefaultEnumCap) {
    const double l2 = a.norm();
    if (l2 == 0.0) throw std::invalid_argument("khintchine_ratio: ||a||_2 = 0");
    VectorFamily fam(SpaceSpec(1, Exponent(1.0)), a.transpose());
    const double moment = rademacher_moment(fam, p, cap);
    const double ratio = moment / l2;
    const double tol = 1e-12;
    bool ok = true;
    if (p <= 2.0 && ratio > 1.0 + tol) ok = false;
    if (p >= 2.0 && ratio < 1.0 - tol) ok = false;
    return {ratio, ok};
}

/// ((E ||S||^q)^(1/q)) / ((E ||S||^p)^(1/p)) for S = sum_n r_n x_n, exact by
/// sign enumeration. Set gaussian = true for the Gaussian variant (MC unless
/// the l_2 exact rule applies to both moments).
inline NormEstimate kahane_ratio(const VectorFamily& fam, double p, double q,
                                 const RandomPlan& plan = {}, bool gaussian = false,
                                 int cap = kDefaultEnumCap) {
    if (!(p >= 1.0 && q >= 1.0)) throw std::invalid_argument("kahane_ratio: p,q >= 1");
    if (fam.count() == 0) return NormEstimate::exact(0.0, "empty family");
    if (!gaussian) {
        const double num = rademacher_moment(fam, q, cap);
        const double den = rademacher_moment(fam, p, cap);
        if (den == 0.0) return NormEstimate::exact(0.0, "zero family");
        return NormEstimate::exact(num / den, "sign enumeration");
    }
    RandomPlan pq = plan;
    pq.moment_p = q;
    RandomPlan pp = plan;
    pp.moment_p = p;
    const NormEstimate num = gaussian_moment(fam, pq);
    const NormEstimate den = gaussian_moment(fam, pp);
    if (den.value == 0.0) return NormEstimate::exact(0.0, "zero family");
    const double r = num.value / den.value;
    // first-order error propagation of the quotient
    const double se = r * std::hypot(num.stderr_ / std::max(num.value, 1e-300),
                                     den.stderr_ / den.value);
    return NormEstimate::montecarlo(r, se, "mc quotient");
}

/// Haar-distributed orthogonal matrix: QR of an i.i.d. Gaussian matrix with
/// the R diagonal signs folded into Q.
inline Matrix haar_orthogonal(int n, const RandomPlan& plan) {
    if (n < 1) throw std::invalid_argument("haar_orthogonal: n >= 1");
    Rng rng(plan.seed);
    Matrix g = rng.gaussian_matrix(n, n);
    Eigen::HouseholderQR<Matrix> qr(g);
    Matrix q = qr.householderQ();
    Matrix r = qr.matrixQR().triangularView<Eigen::Upper>();
    for (int j = 0; j < n; ++j)
        if (r(j, j) < 0.0) q.col(j) = -q.col(j);
    return q;
}

} // namespace summa
