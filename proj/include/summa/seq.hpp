#pragma once

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <utility>

#include "summa/opnorm.hpp"
#include "summa/types.hpp"

namespace summa {

/// An ordered finite family x_1..x_N of vectors of a common space, stored as
/// the columns of a dim x N matrix.
struct VectorFamily {
    SpaceSpec space;
    Matrix vectors; // dim x N

    VectorFamily(SpaceSpec s, Matrix v) : space(s), vectors(std::move(v)) {
        if (vectors.size() > 0 && vectors.rows() != space.dim)
            throw std::invalid_argument("VectorFamily: vector dimension mismatch");
        if (vectors.size() == 0) vectors.resize(space.dim, 0);
    }

    int count() const { return static_cast<int>(vectors.cols()); }

    static VectorFamily basis(SpaceSpec s) {
        return VectorFamily(s, Matrix::Identity(s.dim, s.dim));
    }
};

/// (sum_n ||x_n||^p)^(1/p) in the family's own space norm.
inline double strong_lp_norm(const VectorFamily& fam, Exponent p) {
    const int n = fam.count();
    if (n == 0) return 0.0;
    Vector norms(n);
    for (int j = 0; j < n; ++j) norms[j] = p_norm(fam.vectors.col(j), fam.space.exp);
    return p_norm(norms, p);
}

namespace detail {

/// Best value of x* -> ||X^T x*||_p over a fixed net of dual-sphere points,
/// refined by ascent. Certified lower bound only.
inline double weak_net_lower(const Matrix& xt, Exponent dual_exp, Exponent p,
                             int net_size = 4096, std::uint64_t seed = 42) {
    const int d = static_cast<int>(xt.cols());
    double best = 0.0;
    Rng rng(Rng::derive(seed, 0x6e6574ULL));
    for (int k = 0; k < net_size; ++k) {
        Vector x = normalize_p(rng.gaussian_vector(d), dual_exp);
        best = std::max(best, p_norm(xt * x, p));
    }
    AscentConfig cfg;
    best = std::max(best, ascent_lower(xt, dual_exp, p, cfg, seed));
    return best;
}

} // namespace detail

/// Weak-lp norm: sup over the dual unit ball of (sum_n |<x_n, x*>|^p)^(1/p).
/// Exact when the dual ball has finitely many extreme points (host l_1^d:
/// sign vectors, host l_inf^d: +-e_k) or for p = 2 on an l_2 host (largest
/// singular value); otherwise a certified lower bound from a dual-sphere net.
inline NormEstimate weak_lp_norm(const VectorFamily& fam, Exponent p,
                                 int cap = kDefaultEnumCap) {
    if (fam.count() == 0) return NormEstimate::exact(0.0, "empty family");
    const Matrix xt = fam.vectors.transpose(); // N x dim
    const Exponent host = fam.space.exp;
    if (host.is(1.0)) {
        // dual ball is the cube; extreme points are sign vectors
        double best = 0.0;
        for_each_sign_pattern(xt, [&](const Vector&, const Vector& y) {
            best = std::max(best, p_norm(y, p));
        }, cap);
        return NormEstimate::exact(best, "dual sign-vector enumeration");
    }
    if (host.is_inf()) {
        // dual ball is the cross-polytope; extreme points are +-e_k
        double best = 0.0;
        for (int k = 0; k < fam.space.dim; ++k)
            best = std::max(best, p_norm(xt.col(k), p));
        return NormEstimate::exact(best, "dual basis enumeration");
    }
    if (p.is(2.0) && host.is(2.0))
        return NormEstimate::exact(svd(fam.vectors).singular[0],
                                   "2->2 norm of the column matrix");
    if (p.is(1.0) && fam.count() <= cap) {
        // weak-l1 = max over sign patterns of ||sum eps_n x_n||
        double best = 0.0;
        for_each_sign_pattern(fam.vectors, [&](const Vector&, const Vector& y) {
            best = std::max(best, p_norm(y, host));
        }, cap);
        return NormEstimate::exact(best, "sign-pattern enumeration");
    }
    return NormEstimate::lower(detail::weak_net_lower(xt, host.dual(), p),
                               "dual-sphere net + ascent");
}

/// A sound upper bound of the weak-lp norm (needed to normalize witness
/// families soundly). Exact when weak_lp_norm is exact; otherwise via the
/// cube relaxation of the dual ball or a factor-through-l2 bound.
inline NormEstimate weak_lp_upper(const VectorFamily& fam, Exponent p,
                                  int cap = kDefaultEnumCap) {
    NormEstimate w = weak_lp_norm(fam, p, cap);
    if (w.kind == EstimateKind::exact) return w;
    const Matrix xt = fam.vectors.transpose();
    Operator t(xt, SpaceSpec(fam.space.dim, fam.space.exp.dual()),
               SpaceSpec(std::max(1, fam.count()), p));
    return op_norm_upper(t, cap);
}

/// max over sign patterns eps of ||sum_n eps_n x_n|| by exhaustive
/// enumeration; coincides with the weak-l1 norm.
inline double sign_sup_norm(const VectorFamily& fam, int cap = kDefaultEnumCap) {
    if (fam.count() == 0) return 0.0;
    double best = 0.0;
    for_each_sign_pattern(fam.vectors, [&](const Vector&, const Vector& y) {
        best = std::max(best, p_norm(y, fam.space.exp));
    }, cap);
    return best;
}

} // namespace summa
