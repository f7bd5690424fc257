#ifndef JACOBI_CMATRIX_HPP
#define JACOBI_CMATRIX_HPP

#include <complex>
#include <vector>

namespace jacobi {

using cplx = std::complex<double>;
using CVector = std::vector<cplx>;

// Dense column-agnostic complex matrix, row-major storage.
// Dimensions stay small (a few hundred), so everything is plain loops.
class CMatrix {
public:
    CMatrix() : rows_(0), cols_(0) {}
    CMatrix(int rows, int cols) : rows_(rows), cols_(cols), data_(static_cast<size_t>(rows) * cols) {}

    static CMatrix identity(int n);

    int rows() const { return rows_; }
    int cols() const { return cols_; }

    cplx& operator()(int i, int j) { return data_[static_cast<size_t>(i) * cols_ + j]; }
    const cplx& operator()(int i, int j) const { return data_[static_cast<size_t>(i) * cols_ + j]; }

    CMatrix& operator+=(const CMatrix& o);
    CMatrix& operator-=(const CMatrix& o);
    CMatrix& operator*=(cplx s);

    CMatrix adjoint() const;
    CMatrix transpose() const;

    double frobenius_norm() const;
    double max_abs() const;
    bool all_finite() const;
    bool is_zero() const;          // exact, structural
    bool is_diagonal() const;      // exact, structural

    const CVector& data() const { return data_; }

private:
    int rows_, cols_;
    CVector data_;
};

CMatrix operator+(CMatrix a, const CMatrix& b);
CMatrix operator-(CMatrix a, const CMatrix& b);
CMatrix operator*(const CMatrix& a, const CMatrix& b);
CMatrix operator*(cplx s, CMatrix a);
CVector operator*(const CMatrix& a, const CVector& v);

double max_abs_diff(const CMatrix& a, const CMatrix& b);

// <a|b>, conjugate-linear in the first argument.
cplx dot(const CVector& a, const CVector& b);
double norm2(const CVector& v);  // squared Euclidean norm

} // namespace jacobi

#endif
