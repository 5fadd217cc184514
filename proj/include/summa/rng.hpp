#pragma once

#include <cmath>
#include <cstdint>
#include <stdexcept>

#include "summa/types.hpp"

namespace summa {

// Deterministic 64-bit-seeded generator. xoshiro256++ seeded through
// splitmix64; Gaussian variates by the Marsaglia polar method. All outputs
// are bit-reproducible across platforms for a fixed seed, which is what the
// reproducibility guarantees of the Monte Carlo paths rest on.
class Rng {
public:
    explicit Rng(std::uint64_t seed) {
        std::uint64_t x = seed;
        for (auto& si : s_) si = splitmix64(x);
        have_spare_ = false;
    }

    std::uint64_t next_u64() {
        const std::uint64_t result = rotl(s_[0] + s_[3], 23) + s_[0];
        const std::uint64_t t = s_[1] << 17;
        s_[2] ^= s_[0];
        s_[3] ^= s_[1];
        s_[1] ^= s_[2];
        s_[0] ^= s_[3];
        s_[2] ^= t;
        s_[3] = rotl(s_[3], 45);
        return result;
    }

    /// Uniform double in [0,1) with 53 bits of precision.
    double uniform() { return static_cast<double>(next_u64() >> 11) * 0x1.0p-53; }

    /// Uniform in (-1,1), excluding exact 0 is not required.
    double uniform_sym() { return 2.0 * uniform() - 1.0; }

    /// Standard normal variate (polar method).
    double gaussian() {
        if (have_spare_) {
            have_spare_ = false;
            return spare_;
        }
        double u, v, s;
        do {
            u = uniform_sym();
            v = uniform_sym();
            s = u * u + v * v;
        } while (s >= 1.0 || s == 0.0);
        const double f = std::sqrt(-2.0 * std::log(s) / s);
        spare_ = v * f;
        have_spare_ = true;
        return u * f;
    }

    /// Rademacher sign.
    double sign() { return (next_u64() >> 63) ? 1.0 : -1.0; }

    Vector gaussian_vector(int n) {
        Vector x(n);
        for (int i = 0; i < n; ++i) x[i] = gaussian();
        return x;
    }

    Matrix gaussian_matrix(int rows, int cols) {
        Matrix a(rows, cols);
        for (int j = 0; j < cols; ++j)
            for (int i = 0; i < rows; ++i) a(i, j) = gaussian();
        return a;
    }

    /// Derive an independent stream, e.g. per MC block or per restart.
    static std::uint64_t derive(std::uint64_t seed, std::uint64_t stream) {
        std::uint64_t x = seed ^ (0x9e3779b97f4a7c15ULL * (stream + 1));
        return splitmix64(x);
    }

private:
    static std::uint64_t splitmix64(std::uint64_t& x) {
        std::uint64_t z = (x += 0x9e3779b97f4a7c15ULL);
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
        return z ^ (z >> 31);
    }
    static std::uint64_t rotl(std::uint64_t x, int k) { return (x << k) | (x >> (64 - k)); }

    std::uint64_t s_[4];
    bool have_spare_;
    double spare_ = 0.0;
};

/// Seed, sample count and moment order for a Monte Carlo run. Identical plans
/// reproduce bit-identical estimates.
struct RandomPlan {
    std::uint64_t seed = 42;
    long samples = 100000;
    double moment_p = 2.0;

    RandomPlan() = default;
    RandomPlan(std::uint64_t s, long n, double p = 2.0) : seed(s), samples(n), moment_p(p) {
        if (n < 1) throw std::invalid_argument("RandomPlan: samples must be >= 1");
        if (!(p >= 1.0)) throw std::invalid_argument("RandomPlan: moment_p must be >= 1");
    }
};

} // namespace summa
