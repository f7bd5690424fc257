#ifndef JACOBI_TEST_SUPPORT_HPP
#define JACOBI_TEST_SUPPORT_HPP

#include <complex>
#include <random>

namespace jacobi::test {

// Deterministic generator for the property-style checks.
struct Rng {
    std::mt19937 gen;
    explicit Rng(unsigned seed = 0) : gen(seed) {}

    double uniform(double lo, double hi) {
        return std::uniform_real_distribution<double>(lo, hi)(gen);
    }

    std::complex<double> on_disk(double rmin, double rmax) {
        const double r = uniform(rmin, rmax);
        const double t = uniform(0.0, 2.0 * 3.14159265358979323846);
        return {r * std::cos(t), r * std::sin(t)};
    }
};

} // namespace jacobi::test

#endif
