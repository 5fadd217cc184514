#pragma once

#include <Eigen/Dense>
#include <cmath>
#include <stdexcept>
#include <string>
#include <utility>

#include "summa/exponent.hpp"

namespace summa {

inline constexpr const char* kVersion = "0.1.0";

using Matrix = Eigen::MatrixXd;
using Vector = Eigen::VectorXd;

/// A finite-dimensional sequence space l_p^n.
struct SpaceSpec {
    int dim;
    Exponent exp;

    SpaceSpec(int d, Exponent p) : dim(d), exp(p) {
        if (d < 1) throw std::invalid_argument("SpaceSpec: dim must be >= 1");
    }
};

/// p-norm of a vector expression; max-norm when p = inf, 0 for the empty vector.
template <typename Derived>
double p_norm(const Eigen::MatrixBase<Derived>& x, Exponent p) {
    if (x.size() == 0) return 0.0;
    if (p.is_inf()) return x.cwiseAbs().maxCoeff();
    if (p.is(1.0)) return x.cwiseAbs().sum();
    if (p.is(2.0)) return x.norm();
    return std::pow(x.cwiseAbs().array().pow(p.value()).sum(), 1.0 / p.value());
}

/// A dense real matrix together with its domain and codomain spaces.
struct Operator {
    Matrix matrix; // m x n, maps domain (dim n) to codomain (dim m)
    SpaceSpec domain;
    SpaceSpec codomain;

    Operator(Matrix a, SpaceSpec dom, SpaceSpec cod)
        : matrix(std::move(a)), domain(dom), codomain(cod) {
        if (matrix.rows() == 0 || matrix.cols() == 0)
            throw std::invalid_argument("Operator: empty matrix");
        if (matrix.cols() != domain.dim || matrix.rows() != codomain.dim)
            throw std::invalid_argument("Operator: matrix shape does not match spaces");
    }

    Vector apply(const Vector& x) const { return matrix * x; }
};

enum class EstimateKind { exact, lower, upper, montecarlo };

inline const char* kind_name(EstimateKind k) {
    switch (k) {
        case EstimateKind::exact: return "exact";
        case EstimateKind::lower: return "lower";
        case EstimateKind::upper: return "upper";
        case EstimateKind::montecarlo: return "montecarlo";
    }
    return "?";
}

/// A norm value tagged with its soundness kind. Tests may only compare
/// lower-kind values against upper/exact values (plus MC margins).
struct NormEstimate {
    double value = 0.0;
    EstimateKind kind = EstimateKind::exact;
    double stderr_ = 0.0; // 0 unless kind == montecarlo
    std::string meta;

    NormEstimate() = default;
    NormEstimate(double v, EstimateKind k, double se = 0.0, std::string m = {})
        : value(v), kind(k), stderr_(se), meta(std::move(m)) {
        if (v < 0.0) throw std::invalid_argument("NormEstimate: negative value");
        if (k != EstimateKind::montecarlo && se != 0.0)
            throw std::invalid_argument("NormEstimate: stderr only valid for montecarlo");
    }

    static NormEstimate exact(double v, std::string m = {}) {
        return NormEstimate(v, EstimateKind::exact, 0.0, std::move(m));
    }
    static NormEstimate lower(double v, std::string m = {}) {
        return NormEstimate(v, EstimateKind::lower, 0.0, std::move(m));
    }
    static NormEstimate upper(double v, std::string m = {}) {
        return NormEstimate(v, EstimateKind::upper, 0.0, std::move(m));
    }
    static NormEstimate montecarlo(double v, double se, std::string m = {}) {
        return NormEstimate(v, EstimateKind::montecarlo, se, std::move(m));
    }
};

} // namespace summa
