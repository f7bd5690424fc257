#include "jacobi/cmatrix.hpp"

#include <cmath>

namespace jacobi {

CMatrix CMatrix::identity(int n) {
    CMatrix m(n, n);
    for (int i = 0; i < n; ++i) m(i, i) = 1.0;
    return m;
}

CMatrix& CMatrix::operator+=(const CMatrix& o) {
    for (size_t i = 0; i < data_.size(); ++i) data_[i] += o.data_[i];
    return *this;
}

CMatrix& CMatrix::operator-=(const CMatrix& o) {
    for (size_t i = 0; i < data_.size(); ++i) data_[i] -= o.data_[i];
    return *this;
}

CMatrix& CMatrix::operator*=(cplx s) {
    for (auto& x : data_) x *= s;
    return *this;
}

CMatrix CMatrix::adjoint() const {
    CMatrix r(cols_, rows_);
    for (int i = 0; i < rows_; ++i)
        for (int j = 0; j < cols_; ++j) r(j, i) = std::conj((*this)(i, j));
    return r;
}

CMatrix CMatrix::transpose() const {
    CMatrix r(cols_, rows_);
    for (int i = 0; i < rows_; ++i)
        for (int j = 0; j < cols_; ++j) r(j, i) = (*this)(i, j);
    return r;
}

double CMatrix::frobenius_norm() const {
    double s = 0.0;
    for (const auto& x : data_) s += std::norm(x);
    return std::sqrt(s);
}

double CMatrix::max_abs() const {
    double m = 0.0;
    for (const auto& x : data_) m = std::max(m, std::abs(x));
    return m;
}

bool CMatrix::all_finite() const {
    for (const auto& x : data_)
        if (!std::isfinite(x.real()) || !std::isfinite(x.imag())) return false;
    return true;
}

bool CMatrix::is_zero() const {
    for (const auto& x : data_)
        if (x != 0.0) return false;
    return true;
}

bool CMatrix::is_diagonal() const {
    for (int i = 0; i < rows_; ++i)
        for (int j = 0; j < cols_; ++j)
            if (i != j && (*this)(i, j) != 0.0) return false;
    return true;
}

CMatrix operator+(CMatrix a, const CMatrix& b) { return a += b; }
CMatrix operator-(CMatrix a, const CMatrix& b) { return a -= b; }

CMatrix operator*(const CMatrix& a, const CMatrix& b) {
    CMatrix r(a.rows(), b.cols());
    // i-k-j order keeps the inner loop contiguous.
    for (int i = 0; i < a.rows(); ++i) {
        for (int k = 0; k < a.cols(); ++k) {
            const cplx aik = a(i, k);
            if (aik == 0.0) continue;
            for (int j = 0; j < b.cols(); ++j) r(i, j) += aik * b(k, j);
        }
    }
    return r;
}

CMatrix operator*(cplx s, CMatrix a) { return a *= s; }

CVector operator*(const CMatrix& a, const CVector& v) {
    CVector r(a.rows(), 0.0);
    for (int i = 0; i < a.rows(); ++i) {
        cplx s = 0.0;
        for (int j = 0; j < a.cols(); ++j) s += a(i, j) * v[j];
        r[i] = s;
    }
    return r;
}

double max_abs_diff(const CMatrix& a, const CMatrix& b) {
    double m = 0.0;
    for (int i = 0; i < a.rows(); ++i)
        for (int j = 0; j < a.cols(); ++j) m = std::max(m, std::abs(a(i, j) - b(i, j)));
    return m;
}

cplx dot(const CVector& a, const CVector& b) {
    cplx s = 0.0;
    for (size_t i = 0; i < a.size(); ++i) s += std::conj(a[i]) * b[i];
    return s;
}

double norm2(const CVector& v) {
    double s = 0.0;
    for (const auto& x : v) s += std::norm(x);
    return s;
}

} // namespace jacobi
