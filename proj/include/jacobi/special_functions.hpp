#ifndef JACOBI_SPECIAL_FUNCTIONS_HPP
#define JACOBI_SPECIAL_FUNCTIONS_HPP

namespace jacobi {

// Half-weight bookkeeping: h = (2k - 1)/4, so k > 1/2 iff h > 0.
struct HalfWeight {
    double k;
    double h;
    explicit HalfWeight(double weight) : k(weight), h((2.0 * weight - 1.0) / 4.0) {}
};

// Rising factorial (x)_n as a direct product; returns 0 when a factor is 0.
double pochhammer(double x, int n);

// Generalized Laguerre polynomial L_n^{(s)}(x) by its finite series.
double laguerre(int n, int s, double x);

// Terminating Gauss series F(-n, b; c; x) summed by forward recurrence on
// the terms.  Throws if c hits a non-positive integer before termination.
double hyp2f1_terminating(int n, double b, double c, double x);

// [c! (2h)_c]^(-1/2) with the Gamma ratio reduced to a Pochhammer product;
// requires k > 1/2.
double lambda_coeff(double k, int c);

} // namespace jacobi

#endif
