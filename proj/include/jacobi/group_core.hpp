#ifndef JACOBI_GROUP_CORE_HPP
#define JACOBI_GROUP_CORE_HPP

#include <array>
#include <complex>

namespace jacobi {

// Small real 4x4 matrix for the concrete group/algebra realization.
struct Mat4 {
    std::array<std::array<double, 4>, 4> m{};

    static Mat4 identity();
    double& operator()(int i, int j) { return m[i][j]; }
    double operator()(int i, int j) const { return m[i][j]; }
};

Mat4 operator*(const Mat4& a, const Mat4& b);
Mat4 operator+(const Mat4& a, const Mat4& b);
Mat4 operator-(const Mat4& a, const Mat4& b);
Mat4 operator*(double s, const Mat4& a);
Mat4 bracket(const Mat4& a, const Mat4& b);   // AB - BA
double max_abs_diff(const Mat4& a, const Mat4& b);
double max_abs(const Mat4& a);

struct Mat2 {
    double a, b, c, d;
    double det() const { return a * d - b * c; }
};

// Group element ((lambda, mu_H, kappa), M) with det M = 1.  mu_H is the
// Heisenberg coordinate (named to avoid collision with the index mu = 2*pi*m).
struct GroupElement {
    double lambda = 0.0;
    double mu_H = 0.0;
    double kappa = 0.0;
    Mat2 M{1.0, 0.0, 0.0, 1.0};
};

// The 4x4 realization of a group element; throws unless det M = 1 (1e-12).
Mat4 embed(const GroupElement& g);

// Composition through the 4x4 embedding (the embedding is its own oracle);
// validates that the product has the embedded shape before extracting.
GroupElement compose(const GroupElement& g1, const GroupElement& g2);

enum class AlgebraGen { P, Q, R, F, G, H };

// Lie algebra element: coefficients over (P, Q, R, F, G, H) plus the
// realized 4x4 matrix.
struct AlgebraElement {
    std::array<double, 6> coeff{};
    Mat4 matrix;
};

AlgebraElement algebra_element(const std::array<double, 6>& coeff);
std::array<AlgebraElement, 6> algebra_basis();

struct StructureReport {
    double max_deviation;
    int pairs_checked;
};

// Evaluates all 15 basis brackets against the structure-constant table.
StructureReport check_structure_constants();

using cplx = std::complex<double>;

struct PointCH {
    cplx z;
    cplx tau;  // Im tau > 0
};

struct JacobiActionResult {
    PointCH point;
    cplx factor;
};

// Action of g on (z, tau) together with the weight-k, index-m automorphy
// factor (c tau + d)^(-k) exp(2 pi i m (kappa + theta)).  Non-integer k uses
// the principal branch of the power.
JacobiActionResult jacobi_action(const GroupElement& g, const PointCH& p, double m, double k);

} // namespace jacobi

#endif
