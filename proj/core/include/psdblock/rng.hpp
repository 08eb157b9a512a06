#pragma once

#include <cmath>
#include <cstdint>
#include <numbers>
#include <random>

#include "psdblock/types.hpp"

namespace psdblock {

/// Seeded random stream with a fixed Box-Muller normal generator, so that
/// equal seeds give bitwise-identical output on every platform
/// (std::normal_distribution is implementation-defined).
class Rng {
public:
    explicit Rng(std::uint64_t seed) : engine_(seed) {}

    /// Deterministic per-trial substream derivation.
    static Rng for_trial(std::uint64_t base_seed, std::uint64_t trial) {
        // splitmix64 step over the combined value
        std::uint64_t z = base_seed + 0x9e3779b97f4a7c15ULL * (trial + 1);
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
        return Rng(z ^ (z >> 31));
    }

    double uniform() {
        // 53-bit mantissa in [0, 1)
        return static_cast<double>(engine_() >> 11) * 0x1.0p-53;
    }

    double gaussian() {
        double u = 0.0;
        do {
            u = uniform();
        } while (u <= 0.0);
        const double v = uniform();
        return std::sqrt(-2.0 * std::log(u)) * std::cos(2.0 * std::numbers::pi * v);
    }

    Complex complex_gaussian() {
        double u = 0.0;
        do {
            u = uniform();
        } while (u <= 0.0);
        const double v = uniform();
        const double r = std::sqrt(-2.0 * std::log(u));
        return {r * std::cos(2.0 * std::numbers::pi * v),
                r * std::sin(2.0 * std::numbers::pi * v)};
    }

    /// n x m matrix of independent complex standard normals.
    Matrix complex_gaussian_matrix(Eigen::Index rows, Eigen::Index cols) {
        Matrix g(rows, cols);
        for (Eigen::Index i = 0; i < rows; ++i)
            for (Eigen::Index j = 0; j < cols; ++j) g(i, j) = complex_gaussian();
        return g;
    }

    /// Integer in [lo, hi] inclusive.
    std::int64_t integer(std::int64_t lo, std::int64_t hi) {
        return lo + static_cast<std::int64_t>(uniform() * static_cast<double>(hi - lo + 1));
    }

private:
    std::mt19937_64 engine_;
};

}  // namespace psdblock
