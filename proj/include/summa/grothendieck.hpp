#pragma once

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <utility>

#include "summa/ideal.hpp"
#include "summa/opnorm.hpp"

namespace summa {

/// Literature sanity margin for the (real) Grothendieck constant; reported as
/// a sanity bound, not a derived value.
inline constexpr double kGrothendieckSanity = 1.8;

struct SignPair {
    double value = 0.0;
    Vector row_signs; // s, length rows
    Vector col_signs; // t, length cols
};

/// ||A||_{inf->1} = max over sign vectors s,t of sum a_ij s_i t_j, exact by
/// enumerating t only (the s-supremum is a column of absolute values).
/// Returns the maximizing pair as well.
inline SignPair inf_to_1_signs(const Matrix& a, int total_bits_cap = 22) {
    if (a.rows() + a.cols() > total_bits_cap)
        throw std::length_error("norm_inf_to_1: enumeration cap exceeded");
    // enumerate over the smaller side; the norm is transpose-invariant
    const bool flipped = a.cols() > a.rows();
    const Matrix b = flipped ? Matrix(a.transpose()) : a;
    SignPair best;
    best.value = -1.0;
    for_each_sign_pattern(b, [&](const Vector& t, const Vector& y) {
        const double v = y.cwiseAbs().sum();
        if (v > best.value) {
            best.value = v;
            best.col_signs = t;
            best.row_signs = y.unaryExpr([](double c) { return c >= 0.0 ? 1.0 : -1.0; });
        }
    }, total_bits_cap);
    if (flipped) std::swap(best.row_signs, best.col_signs);
    return best;
}

inline double norm_inf_to_1(const Matrix& a, int total_bits_cap = 22) {
    return inf_to_1_signs(a, total_bits_cap).value;
}

struct BilinearBudget {
    int restarts = 32;
    int iters = 500;
    double tol = 1e-10;
    std::uint64_t seed = 42;
};

/// sup |sum a_ij <x_i, y_j>| over unit vectors in dimension n+m (rank
/// sufficient for the SDP optimum), by multistart alternating maximization.
/// Certified lower bound.
inline NormEstimate bilinear_hilbert_sup(const Matrix& a, const BilinearBudget& budget = {}) {
    const int n = static_cast<int>(a.rows());
    const int m = static_cast<int>(a.cols());
    if (a.isZero(0.0)) return NormEstimate::lower(0.0, "zero matrix");
    const int d = n + m;
    double best = 0.0;
    for (int r = 0; r < budget.restarts; ++r) {
        Matrix x, y;
        if (r == 0 && n + m <= 22) {
            // rank-one start at the optimal inf->1 sign pair, so the result
            // always dominates the inf->1 norm
            const SignPair sp = inf_to_1_signs(a);
            x = Matrix::Zero(d, n);
            y = Matrix::Zero(d, m);
            for (int i = 0; i < n; ++i) x(0, i) = sp.row_signs[i];
            for (int j = 0; j < m; ++j) y(0, j) = sp.col_signs[j];
        } else {
            Rng rng(Rng::derive(budget.seed, static_cast<std::uint64_t>(r)));
            x = rng.gaussian_matrix(d, n);
            y = rng.gaussian_matrix(d, m);
            for (int j = 0; j < n; ++j) x.col(j).normalize();
            for (int j = 0; j < m; ++j) y.col(j).normalize();
        }
        double prev = -1.0;
        for (int it = 0; it < budget.iters; ++it) {
            // x_i maximizing sum_j a_ij <x_i, y_j> is the normalized y-moment
            for (int i = 0; i < n; ++i) {
                Vector v = y * a.row(i).transpose();
                const double nv = v.norm();
                if (nv > 0.0) x.col(i) = v / nv;
            }
            for (int j = 0; j < m; ++j) {
                Vector v = x * a.col(j);
                const double nv = v.norm();
                if (nv > 0.0) y.col(j) = v / nv;
            }
            const double val = (x.transpose() * y).cwiseProduct(a).sum();
            if (val - prev < budget.tol) {
                prev = val;
                break;
            }
            prev = val;
        }
        best = std::max(best, std::abs(prev));
    }
    return NormEstimate::lower(best, "alternating maximization, rank n+m");
}

/// bilinear_hilbert_sup / norm_inf_to_1 - an empirical lower bound on K_G.
inline double grothendieck_ratio(const Matrix& a, const BilinearBudget& budget = {}) {
    const double denom = norm_inf_to_1(a);
    if (denom <= 0.0) throw std::invalid_argument("grothendieck_ratio: zero inf->1 norm");
    return bilinear_hilbert_sup(a, budget).value / denom;
}

struct LittleGrothendieckReport {
    NormEstimate pi1_lower;
    NormEstimate operator_norm; // exact: max column 2-norm
    double ratio = 0.0;         // pi1_lower / operator_norm
    bool defined = false;
    bool pass = true; // ratio <= sanity margin
};

/// For u: l_1^n -> l_2^m, compares the absolutely-summing lower bound with
/// K_G times the operator norm (sanity margin 1.8).
inline LittleGrothendieckReport little_grothendieck_check(const Operator& u,
                                                          const WitnessBudget& budget = {}) {
    if (!u.domain.exp.is(1.0) || !u.codomain.exp.is(2.0))
        throw std::invalid_argument("little_grothendieck_check: expects l_1 -> l_2");
    LittleGrothendieckReport rep;
    rep.pi1_lower = pi_p_lower(u, 1.0, budget);
    rep.operator_norm = op_norm(u);
    if (rep.operator_norm.value > 0.0) {
        rep.defined = true;
        rep.ratio = rep.pi1_lower.value / rep.operator_norm.value;
        rep.pass = rep.ratio <= kGrothendieckSanity;
    }
    return rep;
}

} // namespace summa
