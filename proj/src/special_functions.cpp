#include "jacobi/special_functions.hpp"

#include <cmath>

#include "jacobi/errors.hpp"

namespace jacobi {

double pochhammer(double x, int n) {
    if (n < 0) throw Error(Errc::invalid_argument, "pochhammer needs n >= 0");
    double p = 1.0;
    for (int j = 0; j < n; ++j) p *= x + j;
    return p;
}

namespace {

// Binomial coefficient C(a, b) for integer a >= b >= 0, multiplicative form.
double binomial(int a, int b) {
    if (b < 0 || b > a) return 0.0;
    double r = 1.0;
    for (int i = 1; i <= b; ++i) r *= static_cast<double>(a - b + i) / i;
    return r;
}

} // namespace

double laguerre(int n, int s, double x) {
    if (n < 0 || s < 0) throw Error(Errc::invalid_argument, "laguerre needs n, s >= 0");
    // The alternating series cancels heavily for x beyond a few units, so the
    // accumulation runs in quad precision; only +,*,/ are needed, which gcc
    // provides inline for __float128.
    __float128 sum = 0.0;
    __float128 term = binomial(n + s, n);  // j = 0
    const __float128 xq = x;
    for (int j = 0; j <= n; ++j) {
        if (j > 0) term *= -xq * static_cast<__float128>(n - j + 1) /
                           (static_cast<__float128>(j) * (s + j));
        sum += term;
    }
    return static_cast<double>(sum);
}

double hyp2f1_terminating(int n, double b, double c, double x) {
    if (n < 0) throw Error(Errc::invalid_argument, "hyp2f1_terminating needs n >= 0");
    double sum = 1.0;
    double term = 1.0;
    for (int j = 0; j < n; ++j) {
        if (c + j == 0.0)
            throw Error(Errc::domain_error, "hyp2f1_terminating: c hit a non-positive integer");
        term *= (static_cast<double>(-n + j) * (b + j)) / ((c + j) * (j + 1)) * x;
        sum += term;
    }
    return sum;
}

double lambda_coeff(double k, int c) {
    if (!(k > 0.5)) throw Error(Errc::domain_error, "lambda_coeff needs k > 1/2");
    if (c < 0) throw Error(Errc::invalid_argument, "lambda_coeff needs c >= 0");
    const HalfWeight hw(k);
    double fact = 1.0;
    for (int j = 2; j <= c; ++j) fact *= j;
    return 1.0 / std::sqrt(fact * pochhammer(2.0 * hw.h, c));
}

} // namespace jacobi
