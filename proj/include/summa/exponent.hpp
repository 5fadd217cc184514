#pragma once

#include <cmath>
#include <limits>
#include <stdexcept>
#include <string>

namespace summa {

/// An extended-real exponent p in [1, inf], with dual-exponent arithmetic.
class Exponent {
public:
    static constexpr double inf = std::numeric_limits<double>::infinity();

    Exponent() : value_(2.0) {}
    /*implicit*/ Exponent(double v) : value_(v) {
        if (!(v >= 1.0))
            throw std::invalid_argument("Exponent must satisfy p >= 1, got " + std::to_string(v));
    }

    double value() const { return value_; }
    bool is_inf() const { return std::isinf(value_); }
    bool is(double v) const { return value_ == v; }

    /// Conjugate exponent: 1/p + 1/p* = 1, with dual(1) = inf.
    Exponent dual() const {
        if (value_ == 1.0) return Exponent(inf);
        if (is_inf()) return Exponent(1.0);
        return Exponent(value_ / (value_ - 1.0));
    }

    std::string str() const { return is_inf() ? "inf" : std::to_string(value_); }

    friend bool operator==(const Exponent& a, const Exponent& b) { return a.value_ == b.value_; }
    friend bool operator!=(const Exponent& a, const Exponent& b) { return !(a == b); }

private:
    double value_;
};

} // namespace summa
