#pragma once

#include <Eigen/Dense>
#include <Eigen/SVD>
#include <algorithm>
#include <cmath>
#include <optional>
#include <stdexcept>

#include "summa/rng.hpp"
#include "summa/types.hpp"

namespace summa {

/// Hard limit on sign-pattern enumeration: at most 2^cap patterns.
inline constexpr int kDefaultEnumCap = 20;

struct SvdResult {
    Vector singular; // nonincreasing
    Matrix u;        // m x r
    Matrix v;        // n x r
};

inline SvdResult svd(const Matrix& a) {
    Eigen::JacobiSVD<Matrix> solver(a, Eigen::ComputeThinU | Eigen::ComputeThinV);
    return {solver.singularValues(), solver.matrixU(), solver.matrixV()};
}

inline SvdResult svd(const Operator& u) { return svd(u.matrix); }

/// Visit all sign patterns t in {-1,1}^n in Gray-code order, maintaining
/// y = A t incrementally. f receives (t, y) for each pattern.
template <typename F>
void for_each_sign_pattern(const Matrix& a, F&& f, int cap = kDefaultEnumCap) {
    const int n = static_cast<int>(a.cols());
    if (n > cap)
        throw std::length_error("sign enumeration cap exceeded: n = " + std::to_string(n) +
                                ", cap = " + std::to_string(cap));
    Vector t = Vector::Constant(n, 1.0);
    Vector y = a * t;
    f(t, y);
    const std::uint64_t total = std::uint64_t(1) << n;
    for (std::uint64_t k = 1; k < total; ++k) {
        // Gray code: bit flipped at step k is the lowest set bit of k.
        int j = 0;
        while (!((k >> j) & 1)) ++j;
        t[j] = -t[j];
        y += 2.0 * t[j] * a.col(j);
        f(t, y);
    }
}

/// max over t in {-1,1}^n of ||A t||_q, exact by enumeration.
inline double cube_max_norm(const Matrix& a, Exponent q, int cap = kDefaultEnumCap) {
    double best = 0.0;
    for_each_sign_pattern(a, [&](const Vector&, const Vector& y) {
        best = std::max(best, p_norm(y, q));
    }, cap);
    return best;
}

namespace detail {

/// Subgradient of x -> ||y||_q at y (any element of the subdifferential).
inline Vector q_norm_subgradient(const Vector& y, Exponent q) {
    const int m = static_cast<int>(y.size());
    Vector g = Vector::Zero(m);
    if (q.is_inf()) {
        int imax = 0;
        y.cwiseAbs().maxCoeff(&imax);
        g[imax] = (y[imax] >= 0.0) ? 1.0 : -1.0;
        return g;
    }
    const double nq = p_norm(y, q);
    if (nq == 0.0) return g;
    if (q.is(1.0)) {
        for (int i = 0; i < m; ++i) g[i] = (y[i] > 0.0) ? 1.0 : (y[i] < 0.0 ? -1.0 : 0.0);
        return g;
    }
    const double qq = q.value();
    for (int i = 0; i < m; ++i) {
        if (y[i] == 0.0) continue;
        g[i] = std::copysign(std::pow(std::abs(y[i]) / nq, qq - 1.0), y[i]);
    }
    return g;
}

inline Vector normalize_p(Vector x, Exponent p) {
    const double n = p_norm(x, p);
    if (n > 0.0) x /= n;
    return x;
}

struct AscentConfig {
    int restarts = 32;
    int iters = 500;
    double step0 = 0.5;
    double tol = 1e-9;
};

/// Multistart projected-gradient ascent of ||A x||_q over the l_p unit
/// sphere. Deterministic for a fixed seed: the result is the maximum over a
/// fixed start set. Returns a certified lower bound of ||A||_{p->q}.
inline double ascent_lower(const Matrix& a, Exponent p, Exponent q,
                           const AscentConfig& cfg = {}, std::uint64_t seed = 42) {
    const int n = static_cast<int>(a.cols());
    double best = 0.0;
    // geometric step decay from step0 down to tol over the iteration budget
    const double decay = std::pow(cfg.tol / cfg.step0, 1.0 / std::max(1, cfg.iters - 1));
    for (int r = 0; r < cfg.restarts; ++r) {
        Rng rng(Rng::derive(seed, static_cast<std::uint64_t>(r)));
        Vector x;
        if (r == 0)
            x = Vector::Constant(n, 1.0); // deterministic start
        else if (r == 1 && n >= 1) {
            // start at the top right singular vector
            x = svd(a).v.col(0);
        } else
            x = rng.gaussian_vector(n);
        x = normalize_p(x, p);
        double step = cfg.step0;
        double fx = p_norm(a * x, q);
        for (int it = 0; it < cfg.iters; ++it) {
            const Vector y = a * x;
            const Vector g = a.transpose() * q_norm_subgradient(y, q);
            Vector xn = normalize_p(x + step * g, p);
            const double fn = p_norm(a * xn, q);
            if (fn > fx) {
                x = std::move(xn);
                fx = fn;
            }
            step *= decay;
            if (step < cfg.tol) break;
        }
        best = std::max(best, fx);
    }
    return best;
}

} // namespace detail

namespace detail {

/// Exact closed-form rules for the l_p -> l_q norm, when one applies.
inline std::optional<NormEstimate> op_norm_exact_rule(const Matrix& a, Exponent p,
                                                      Exponent q, int cap) {
    if (a.isZero(0.0)) return NormEstimate::exact(0.0, "zero operator");
    if (p.is(1.0)) {
        double best = 0.0;
        for (int j = 0; j < a.cols(); ++j) best = std::max(best, p_norm(a.col(j), q));
        return NormEstimate::exact(best, "max column q-norm");
    }
    if (q.is_inf()) {
        const Exponent ps = p.dual();
        double best = 0.0;
        for (int i = 0; i < a.rows(); ++i)
            best = std::max(best, p_norm(a.row(i).transpose(), ps));
        return NormEstimate::exact(best, "max row p*-norm");
    }
    if (p.is(2.0) && q.is(2.0))
        return NormEstimate::exact(svd(a).singular[0], "largest singular value");
    if (p.is_inf() && q.is(1.0) && a.cols() <= cap)
        return NormEstimate::exact(cube_max_norm(a, q, cap), "sign enumeration");
    return std::nullopt;
}

} // namespace detail

/// The l_p -> l_q operator norm. Exact for the four closed-form cases
/// (p = 1, q = inf, p = q = 2, and p = inf, q = 1 under the enumeration cap);
/// otherwise a certified lower bound from multistart ascent.
inline NormEstimate op_norm(const Operator& u, int cap = kDefaultEnumCap,
                            const detail::AscentConfig& cfg = {}) {
    const Exponent p = u.domain.exp;
    const Exponent q = u.codomain.exp;
    if (auto exact = detail::op_norm_exact_rule(u.matrix, p, q, cap)) return *exact;
    return NormEstimate::lower(detail::ascent_lower(u.matrix, p, q, cfg),
                               "multistart ascent");
}

/// A sound upper bound of the l_p -> l_q norm: exact when a closed-form rule
/// applies, otherwise the best of the factor-through-l2 relaxation and (when
/// enumerable) the cube relaxation B_p subset B_inf.
inline NormEstimate op_norm_upper(const Operator& u, int cap = kDefaultEnumCap) {
    const Matrix& a = u.matrix;
    const Exponent p = u.domain.exp;
    const Exponent q = u.codomain.exp;
    if (auto exact = detail::op_norm_exact_rule(a, p, q, cap)) return *exact;
    const double n = static_cast<double>(a.cols());
    const double m = static_cast<double>(a.rows());
    // ||x||_2 <= n^(1/2 - 1/p) ||x||_p for p >= 2, <= ||x||_p for p <= 2
    const double cin = (p.value() > 2.0)
        ? std::pow(n, 0.5 - (p.is_inf() ? 0.0 : 1.0 / p.value()))
        : 1.0;
    // ||y||_q <= m^(1/q - 1/2) ||y||_2 for q <= 2, <= ||y||_2 for q >= 2
    const double cout = (q.value() < 2.0) ? std::pow(m, 1.0 / q.value() - 0.5) : 1.0;
    double bound = cin * cout * svd(a).singular[0];
    if (a.cols() <= cap)
        bound = std::min(bound, cube_max_norm(a, q, cap)); // B_p subset B_inf
    return NormEstimate::upper(bound, "l2 / cube relaxation");
}

} // namespace summa
