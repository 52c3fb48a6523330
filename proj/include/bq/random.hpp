#pragma once

// Deterministic random inputs for property checks: mt19937_64 with an
// explicit Box-Muller normal, so identical seeds give identical streams
// across platforms and standard-library versions.

#include <cmath>
#include <cstdint>
#include <random>

#include "bq/dual.hpp"

namespace bq {

inline std::uint64_t mix_seed(std::uint64_t seed, std::uint64_t stream) {
    // splitmix64 finalizer over seed ^ rotated stream
    std::uint64_t z = seed + 0x9e3779b97f4a7c15ULL * (stream + 1);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
}

class Rng {
  public:
    explicit Rng(std::uint64_t seed) : eng_(seed) {}

    double uniform() {
        // 53-bit mantissa in [0,1)
        return static_cast<double>(eng_() >> 11) * 0x1.0p-53;
    }

    double normal() {
        double u1 = uniform(), u2 = uniform();
        while (u1 <= 0.0) u1 = uniform();
        return std::sqrt(-2.0 * std::log(u1)) * std::cos(2.0 * M_PI * u2);
    }

    Complex cnormal() {
        double u1 = uniform(), u2 = uniform();
        while (u1 <= 0.0) u1 = uniform();
        double r = std::sqrt(-2.0 * std::log(u1));
        return {r * std::cos(2.0 * M_PI * u2), r * std::sin(2.0 * M_PI * u2)};
    }

    Vector vector(int n) {
        Vector v(n);
        for (int i = 0; i < n; ++i) v(i) = cnormal();
        return v;
    }

    Vector unit_vector(int n) {
        Vector v = vector(n);
        double nrm = v.norm();
        while (nrm < 1e-8) {  // essentially impossible, but stay total
            v = vector(n);
            nrm = v.norm();
        }
        return v / nrm;
    }

    Matrix matrix(int rows, int cols) {
        Matrix m(rows, cols);
        for (int i = 0; i < rows; ++i)
            for (int j = 0; j < cols; ++j) m(i, j) = cnormal();
        return m;
    }

    Matrix hermitian(int n) {
        Matrix a = matrix(n, n);
        return (a + a.adjoint()) / 2.0;
    }

  private:
    std::mt19937_64 eng_;
};

} // namespace bq
