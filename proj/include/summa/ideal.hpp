#pragma once

#include <Eigen/Dense>
#include <Eigen/Eigenvalues>
#include <algorithm>
#include <cmath>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "summa/opnorm.hpp"
#include "summa/rand_sums.hpp"
#include "summa/seq.hpp"

namespace summa {

/// Frobenius norm of a Hilbert-to-Hilbert operator, cross-checked against the
/// l2 norm of its singular values.
inline double hs_norm(const Operator& u) {
    if (!u.domain.exp.is(2.0) || !u.codomain.exp.is(2.0))
        throw std::invalid_argument("hs_norm: both spaces must be l_2");
    const double frob = u.matrix.norm();
    const double via_sv = svd(u.matrix).singular.norm();
    if (std::abs(frob - via_sv) > 1e-10 * std::max(1.0, frob))
        throw std::logic_error("hs_norm: Frobenius / singular-value mismatch");
    return frob;
}

/// Probability weights mu on dual-ball points x*_k together with a constant c
/// such that u^T u <= c^2 sum_k mu_k x*_k x*_k^T as quadratic forms.
struct PietschCertificate {
    Matrix points;  // d x K, columns x*_k in the dual unit ball
    Vector weights; // K, nonnegative, sums to 1
    double constant = 0.0;
    bool extreme_exact = false; // K was the full extreme-point set of the dual ball

    /// Min-eigenvalue slack of c^2 G(mu) - u^T u; valid when >= -1e-8 c^2.
    double domination_slack(const Operator& u) const {
        const Matrix a = u.matrix.transpose() * u.matrix;
        Matrix g = Matrix::Zero(points.rows(), points.rows());
        for (int k = 0; k < points.cols(); ++k)
            g += weights[k] * points.col(k) * points.col(k).transpose();
        Eigen::SelfAdjointEigenSolver<Matrix> es(constant * constant * g - a);
        return es.eigenvalues().minCoeff();
    }

    bool valid_for(const Operator& u, double tol = 1e-8) const {
        if (std::abs(weights.sum() - 1.0) > 1e-10 || weights.minCoeff() < -1e-12)
            return false;
        const Exponent dual = u.domain.exp.dual();
        for (int k = 0; k < points.cols(); ++k)
            if (p_norm(points.col(k), dual) > 1.0 + 1e-10) return false;
        return domination_slack(u) >= -tol * constant * constant - 1e-14;
    }
};

/// Default finite dual subset for a domain space: the full extreme-point set
/// when the dual ball is a polytope, otherwise singular-aligned points plus a
/// seeded sphere net, all normalized into the dual ball.
inline std::pair<Matrix, bool> default_dual_set(const Operator& u, int net_size = 64,
                                                int cap = kDefaultEnumCap,
                                                std::uint64_t seed = 42) {
    const int d = u.domain.dim;
    const Exponent host = u.domain.exp;
    const Exponent dual = host.dual();
    if (host.is(1.0) && d <= cap) {
        // dual ball = cube, extreme points = sign vectors (one per antipodal pair)
        const std::uint64_t total = std::uint64_t(1) << (d - 1);
        Matrix pts(d, static_cast<Eigen::Index>(total));
        for (std::uint64_t k = 0; k < total; ++k)
            for (int i = 0; i < d; ++i)
                pts(i, static_cast<Eigen::Index>(k)) = ((k >> i) & 1) ? -1.0 : 1.0;
        return {pts, true};
    }
    if (host.is_inf()) {
        return {Matrix::Identity(d, d), true}; // +-e_k up to sign
    }
    SvdResult sv = svd(u.matrix);
    const int r = static_cast<int>(sv.singular.size());
    Matrix pts(d, r + net_size);
    for (int j = 0; j < r; ++j) {
        Vector v = sv.v.col(j);
        const double n = p_norm(v, dual);
        pts.col(j) = (n > 0.0) ? Vector(v / n) : v;
    }
    Rng rng(Rng::derive(seed, 0x647563ULL));
    for (int j = 0; j < net_size; ++j)
        pts.col(r + j) = detail::normalize_p(rng.gaussian_vector(d), dual);
    return {pts, false};
}

struct PietschResult {
    NormEstimate bound; // kind = upper
    PietschCertificate certificate;
};

namespace detail {

/// Frank-Wolfe maximization of mu -> lambda_min(c2 G(mu) - A) over the
/// simplex. Supergradient coordinates are c2 <x*_k, v>^2 for the bottom
/// eigenvector v. Returns (best value, maximizing mu).
inline std::pair<double, Vector> maximize_min_eig(const Matrix& pts, const Matrix& a,
                                                  double c2, Vector mu,
                                                  int max_iters = 400) {
    const int k = static_cast<int>(pts.cols());
    const int d = static_cast<int>(pts.rows());
    auto lambda_min = [&](const Vector& m, Vector* eigvec) {
        Matrix g = 1e-12 * Matrix::Identity(d, d); // keep the pencil nonsingular
        for (int j = 0; j < k; ++j) g += m[j] * pts.col(j) * pts.col(j).transpose();
        Eigen::SelfAdjointEigenSolver<Matrix> es(c2 * g - a);
        int imin = 0;
        es.eigenvalues().minCoeff(&imin);
        if (eigvec) *eigvec = es.eigenvectors().col(imin);
        return es.eigenvalues().minCoeff();
    };
    Vector v;
    double best = lambda_min(mu, &v);
    for (int t = 0; t < max_iters; ++t) {
        // linear oracle: vertex with the largest supergradient coordinate
        int jstar = 0;
        double gbest = -1.0;
        for (int j = 0; j < k; ++j) {
            const double gj = c2 * std::pow(pts.col(j).dot(v), 2);
            if (gj > gbest) {
                gbest = gj;
                jstar = j;
            }
        }
        const double gamma = 2.0 / double(t + 2);
        Vector cand = (1.0 - gamma) * mu;
        cand[jstar] += gamma;
        const double val = lambda_min(cand, &v);
        if (val > best) {
            mu = cand;
            if (val - best < 1e-10) {
                best = val;
                break;
            }
            best = val;
        } else {
            // recompute eigvec at the kept iterate
            lambda_min(mu, &v);
        }
    }
    return {best, mu};
}

} // namespace detail

/// Minimal c with u^T u <= c^2 sum mu_k x*_k x*_k^T over probability vectors
/// mu on K: bisection on c^2 with inner Frank-Wolfe maximization of the
/// minimum eigenvalue. Any feasible pair is a sound 2-summing upper bound;
/// tightness is only claimed when K is the full extreme-point set.
/// Returns nullopt when span(K) does not cover the row space of u.
inline std::optional<PietschResult> pi_2_upper(const Operator& u, const Matrix& points,
                                               bool extreme_exact = false,
                                               double rel_tol = 1e-6) {
    const int d = u.domain.dim;
    const int k = static_cast<int>(points.cols());
    if (k < 1) throw std::invalid_argument("pi_2_upper: empty dual set");
    const Matrix a = u.matrix.transpose() * u.matrix;
    if (u.matrix.isZero(0.0)) {
        PietschCertificate cert{points, Vector::Constant(k, 1.0 / k), 0.0, extreme_exact};
        return PietschResult{NormEstimate::upper(0.0, "zero operator"), cert};
    }
    // feasibility: row space of u must lie in span(K)
    {
        Eigen::CompleteOrthogonalDecomposition<Matrix> cod(points);
        SvdResult sv = svd(u.matrix);
        for (int j = 0; j < sv.singular.size(); ++j) {
            if (sv.singular[j] < 1e-12 * sv.singular[0]) break;
            Vector r = sv.v.col(j);
            Vector res = points * cod.solve(r) - r;
            if (res.norm() > 1e-8) return std::nullopt;
        }
    }
    Vector mu = Vector::Constant(k, 1.0 / k);
    // initial feasible c^2 from the uniform mixture
    Matrix g0 = 1e-12 * Matrix::Identity(d, d);
    for (int j = 0; j < k; ++j) g0 += mu[j] * points.col(j) * points.col(j).transpose();
    Eigen::GeneralizedSelfAdjointEigenSolver<Matrix> ges(a, g0);
    double hi = ges.eigenvalues().maxCoeff() * (1.0 + 1e-9);
    double lo = 0.0;
    Vector mu_hi = mu;
    while (hi - lo > rel_tol * hi) {
        const double mid = 0.5 * (lo + hi);
        auto [val, m] = detail::maximize_min_eig(points, a, mid, mu);
        if (val >= 0.0) {
            hi = mid;
            mu_hi = m;
        } else {
            lo = mid;
        }
        mu = m; // warm start
    }
    // tighten: at c^2 = hi the FW iterate may be slightly infeasible; scale up
    auto [slack, mfin] = detail::maximize_min_eig(points, a, hi, mu_hi, 800);
    double c2 = hi;
    if (slack < 0.0) {
        // smallest inflation that restores domination at mfin
        Matrix gf = 1e-12 * Matrix::Identity(d, d);
        for (int j = 0; j < k; ++j) gf += mfin[j] * points.col(j) * points.col(j).transpose();
        Eigen::GeneralizedSelfAdjointEigenSolver<Matrix> g2(a, gf);
        c2 = g2.eigenvalues().maxCoeff() * (1.0 + 1e-12);
    }
    PietschCertificate cert{points, mfin, std::sqrt(std::max(0.0, c2)), extreme_exact};
    std::string meta = extreme_exact ? "extreme-point dual set" : "net dual set";
    return PietschResult{NormEstimate::upper(cert.constant, meta), cert};
}

inline std::optional<PietschResult> pi_2_upper(const Operator& u, int net_size = 64,
                                               int cap = kDefaultEnumCap,
                                               std::uint64_t seed = 42) {
    auto [pts, exact] = default_dual_set(u, net_size, cap, seed);
    return pi_2_upper(u, pts, exact);
}

/// The explicit Pietsch factorization u = uhat o j through the mu-weighted
/// l2 space on the certificate points.
struct PietschFactorization {
    Matrix j;        // K x n, x -> (sqrt(mu_k) <x, x*_k>)_k
    Matrix uhat;     // m x K, ||uhat|| <= constant
    double residual; // || uhat j - u ||_F
};

inline PietschFactorization pietsch_factorize(const Operator& u,
                                              const PietschCertificate& cert) {
    if (!cert.valid_for(u))
        throw std::invalid_argument("pietsch_factorize: certificate not valid for u");
    const int k = static_cast<int>(cert.points.cols());
    Matrix j(k, u.domain.dim);
    for (int i = 0; i < k; ++i)
        j.row(i) = std::sqrt(std::max(0.0, cert.weights[i])) * cert.points.col(i).transpose();
    // least squares on the range of j; domination forces ker j subset ker u
    Matrix uhat = j.transpose()
                      .jacobiSvd(Eigen::ComputeThinU | Eigen::ComputeThinV)
                      .solve(u.matrix.transpose())
                      .transpose();
    const double residual = (uhat * j - u.matrix).norm();
    return {j, uhat, residual};
}

/// Witness-search budget shared by the lower-bound estimators.
struct WitnessBudget {
    int families = 64;
    int max_size = 8;
    int refine_steps = 200;
    std::uint64_t seed = 42;
};

namespace detail {

/// Enumerate candidate witness families for an operator: the canonical basis,
/// the right singular vectors, and seeded random families of varying size.
inline std::vector<VectorFamily> witness_families(const Operator& u,
                                                  const WitnessBudget& budget) {
    std::vector<VectorFamily> out;
    const SpaceSpec dom = u.domain;
    out.push_back(VectorFamily::basis(dom));
    SvdResult sv = svd(u.matrix);
    out.emplace_back(dom, sv.v);
    Rng rng(Rng::derive(budget.seed, 0x776974ULL));
    for (int f = 0; f < budget.families; ++f) {
        const int size = 1 + static_cast<int>(rng.next_u64() % std::uint64_t(budget.max_size));
        out.emplace_back(dom, rng.gaussian_matrix(dom.dim, size));
    }
    return out;
}

/// Ratio-style witness search: best of score(image family) / weak-upper over
/// candidates, with local perturbation refinement of the best family. The
/// denominator is always a sound (exact or upper) weak norm, so the ratio is
/// a certified lower bound.
template <typename Score>
std::pair<double, double> witness_search(const Operator& u, Exponent weak_p,
                                         const WitnessBudget& budget, Score&& score) {
    double best = 0.0, best_se = 0.0;
    Matrix best_fam;
    for (const VectorFamily& fam : witness_families(u, budget)) {
        const double denom = weak_lp_upper(fam, weak_p).value;
        if (denom <= 0.0) continue;
        auto [num, se] = score(VectorFamily(u.codomain, u.matrix * fam.vectors));
        if (num / denom > best) {
            best = num / denom;
            best_se = se / denom;
            best_fam = fam.vectors;
        }
    }
    if (best_fam.size() > 0 && budget.refine_steps > 0) {
        Rng rng(Rng::derive(budget.seed, 0x726566ULL));
        double scale = 0.25;
        for (int it = 0; it < budget.refine_steps; ++it) {
            Matrix cand = best_fam + scale * rng.gaussian_matrix(
                static_cast<int>(best_fam.rows()), static_cast<int>(best_fam.cols()));
            VectorFamily fam(u.domain, cand);
            const double denom = weak_lp_upper(fam, weak_p).value;
            if (denom > 0.0) {
                auto [num, se] = score(VectorFamily(u.codomain, u.matrix * cand));
                if (num / denom > best) {
                    best = num / denom;
                    best_se = se / denom;
                    best_fam = cand;
                } else {
                    scale *= 0.98;
                }
            }
        }
    }
    return {best, best_se};
}

} // namespace detail

/// Certified lower bound of the p-summing norm: best witness ratio
/// strong_lp(u fam) / weak_lp(fam).
inline NormEstimate pi_p_lower(const Operator& u, double p,
                               const WitnessBudget& budget = {}) {
    if (u.matrix.isZero(0.0)) return NormEstimate::lower(0.0, "zero operator");
    auto [best, se] = detail::witness_search(
        u, Exponent(p), budget,
        [&](const VectorFamily& img) { return std::pair{strong_lp_norm(img, p), 0.0}; });
    (void)se;
    return NormEstimate::lower(best, "witness search");
}

/// Certified lower bound of the gamma-summing norm: best witness ratio of
/// the Gaussian second moment of the image family over the weak-l2 norm.
/// Kind is montecarlo (with the best witness's stderr) unless every moment
/// involved was exact.
inline NormEstimate gamma_summing_lower(const Operator& u, const WitnessBudget& budget = {},
                                        const RandomPlan& plan = {}) {
    if (u.matrix.isZero(0.0)) return NormEstimate::lower(0.0, "zero operator");
    RandomPlan p2 = plan;
    p2.moment_p = 2.0;
    bool any_mc = false;
    auto [best, se] = detail::witness_search(
        u, Exponent(2.0), budget, [&](const VectorFamily& img) {
            NormEstimate m = gaussian_moment(img, p2);
            if (m.kind == EstimateKind::montecarlo) any_mc = true;
            return std::pair{m.value, m.stderr_};
        });
    if (any_mc) return NormEstimate::montecarlo(best, se, "witness search (mc lower)");
    return NormEstimate::lower(best, "witness search");
}

/// As gamma_summing_lower with exact Rademacher moments.
inline NormEstimate r_summing_lower(const Operator& u, const WitnessBudget& budget = {},
                                    int cap = kDefaultEnumCap) {
    if (u.matrix.isZero(0.0)) return NormEstimate::lower(0.0, "zero operator");
    WitnessBudget b = budget;
    b.max_size = std::min(b.max_size, cap);
    auto [best, se] = detail::witness_search(
        u, Exponent(2.0), b, [&](const VectorFamily& img) {
            return std::pair{rademacher_moment(img, 2.0, cap), 0.0};
        });
    (void)se;
    return NormEstimate::lower(best, "witness search");
}

/// (E || sum_k gamma_k u e_k ||^2)^(1/2) over the standard basis of a Hilbert
/// domain; equals the HS norm for an l_2 codomain, MC otherwise.
inline NormEstimate gamma_norm_hilbert_domain(const Operator& u, const RandomPlan& plan = {}) {
    if (!u.domain.exp.is(2.0))
        throw std::invalid_argument("gamma_norm_hilbert_domain: domain must be l_2");
    RandomPlan p2 = plan;
    p2.moment_p = 2.0;
    VectorFamily img(u.codomain, u.matrix);
    return gaussian_moment(img, p2);
}

/// Rank-expanded representation u = sum_n x*_n (x) y_n with (x*_n) weak*-l1
/// and (y_n) bounded, from the SVD.
struct NuclearRep {
    Matrix functionals; // n x r, columns x*_n = tau_n e_n
    Matrix vectors;     // m x r, columns y_n = f_n, unit norm
    Vector tau;         // singular values kept

    int terms() const { return static_cast<int>(tau.size()); }

    Matrix reconstruct(int n_rows_domain) const {
        if (terms() == 0) return Matrix::Zero(vectors.rows(), n_rows_domain);
        return vectors * functionals.transpose();
    }

    /// Exact weak-l1 norm of the functional family: ||tau||_2 for orthogonal
    /// directions (Cauchy-Schwarz with equality at x = tau-weighted mix).
    double weak_l1_norm() const { return tau.norm(); }
};

inline NuclearRep weak_star_nuclear_rep(const Operator& u) {
    if (!u.domain.exp.is(2.0) || !u.codomain.exp.is(2.0))
        throw std::invalid_argument("weak_star_nuclear_rep: both spaces must be l_2");
    SvdResult sv = svd(u.matrix);
    int r = 0;
    const double cutoff = (sv.singular.size() > 0) ? 1e-14 * sv.singular[0] : 0.0;
    while (r < sv.singular.size() && sv.singular[r] > cutoff) ++r;
    NuclearRep rep;
    rep.tau = sv.singular.head(r);
    rep.functionals.resize(u.domain.dim, r);
    rep.vectors = sv.u.leftCols(r);
    for (int j = 0; j < r; ++j) rep.functionals.col(j) = sv.singular[j] * sv.v.col(j);
    const double err = (rep.reconstruct(u.domain.dim) - u.matrix).norm();
    if (err > 1e-10 * std::max(1.0, u.matrix.norm()))
        throw std::logic_error("weak_star_nuclear_rep: reconstruction failed");
    return rep;
}

} // namespace summa
