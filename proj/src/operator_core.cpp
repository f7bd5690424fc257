#include "jacobi/operator_core.hpp"

#include <algorithm>
#include <cmath>
#include <cstdlib>

#include "jacobi/errors.hpp"

namespace jacobi {

namespace {

void require_same_basis(const TruncatedOperator& a, const TruncatedOperator& b) {
    if (!a.basis.same_as(b.basis)) throw Error(Errc::basis_mismatch, "operator basis tags differ");
}

std::optional<int> combined_shift_sum(const TruncatedOperator& a, const TruncatedOperator& b) {
    if (a.grade_shift && b.grade_shift) return *a.grade_shift + *b.grade_shift;
    return std::nullopt;
}

std::optional<int> combined_shift_equal(const TruncatedOperator& a, const TruncatedOperator& b) {
    if (a.grade_shift && b.grade_shift && *a.grade_shift == *b.grade_shift) return a.grade_shift;
    return std::nullopt;
}

} // namespace

TruncatedOperator make_operator(const Basis& basis, CMatrix mat, std::optional<int> grade_shift) {
    if (mat.rows() != basis.dim() || mat.cols() != basis.dim())
        throw Error(Errc::invalid_argument, "operator matrix does not match basis dimension");
    if (!mat.all_finite()) throw Error(Errc::non_finite, "operator entries must be finite");
    if (grade_shift) {
        for (int i = 0; i < mat.rows(); ++i)
            for (int j = 0; j < mat.cols(); ++j)
                if (mat(i, j) != 0.0 && basis.grade(i) - basis.grade(j) != *grade_shift)
                    throw Error(Errc::invalid_argument,
                                "nonzero entry violates the declared grade shift");
    }
    return {basis, std::move(mat), grade_shift};
}

TruncatedOperator identity_op(const Basis& basis) {
    return {basis, CMatrix::identity(basis.dim()), 0};
}

TruncatedOperator zero_op(const Basis& basis) {
    return {basis, CMatrix(basis.dim(), basis.dim()), 0};
}

TruncatedOperator operator+(const TruncatedOperator& a, const TruncatedOperator& b) {
    require_same_basis(a, b);
    return {a.basis, a.mat + b.mat, combined_shift_equal(a, b)};
}

TruncatedOperator operator-(const TruncatedOperator& a, const TruncatedOperator& b) {
    require_same_basis(a, b);
    return {a.basis, a.mat - b.mat, combined_shift_equal(a, b)};
}

TruncatedOperator operator*(const TruncatedOperator& a, const TruncatedOperator& b) {
    require_same_basis(a, b);
    return {a.basis, a.mat * b.mat, combined_shift_sum(a, b)};
}

TruncatedOperator operator*(cplx s, const TruncatedOperator& a) {
    return {a.basis, s * a.mat, a.grade_shift};
}

TruncatedOperator adjoint(const TruncatedOperator& a) {
    std::optional<int> shift;
    if (a.grade_shift) shift = -*a.grade_shift;
    return {a.basis, a.mat.adjoint(), shift};
}

TruncatedOperator commutator(const TruncatedOperator& a, const TruncatedOperator& b) {
    require_same_basis(a, b);
    return {a.basis, a.mat * b.mat - b.mat * a.mat, combined_shift_sum(a, b)};
}

TruncatedOperator graded_exp(const TruncatedOperator& a, cplx t) {
    if (!a.grade_shift || *a.grade_shift == 0)
        throw Error(Errc::grade_shift_required,
                    "graded_exp needs a nonzero grade shift (use exp_diag or expm_dense)");
    const int dim = a.basis.dim();

    // Graded generators are stripe matrices; right-multiplying by the sparse
    // entry list keeps each series term at O(dim * nnz).
    struct Entry {
        int row, col;
        cplx val;
    };
    std::vector<Entry> entries;
    for (int i = 0; i < dim; ++i)
        for (int j = 0; j < dim; ++j)
            if (a.mat(i, j) != 0.0) entries.push_back({i, j, a.mat(i, j)});

    CMatrix result = CMatrix::identity(dim);
    CMatrix term = CMatrix::identity(dim);
    const int max_terms = a.basis.max_grade() / std::abs(*a.grade_shift) + 1;
    for (int j = 1; j <= max_terms; ++j) {
        CMatrix next(dim, dim);
        const cplx t_over_j = t / static_cast<double>(j);
        for (const auto& e : entries) {
            const cplx scale = e.val * t_over_j;
            for (int r = 0; r < dim; ++r) next(r, e.col) += term(r, e.row) * scale;
        }
        if (next.is_zero()) break;
        result += next;
        term = std::move(next);
    }
    return {a.basis, std::move(result), std::nullopt};
}

TruncatedOperator exp_diag(const TruncatedOperator& a, cplx t) {
    if (!a.mat.is_diagonal()) throw Error(Errc::diagonal_required, "exp_diag needs a diagonal matrix");
    const int dim = a.basis.dim();
    CMatrix result(dim, dim);
    for (int i = 0; i < dim; ++i) result(i, i) = std::exp(t * a.mat(i, i));
    return {a.basis, std::move(result), 0};
}

TruncatedOperator expm_dense(const TruncatedOperator& a, cplx t) {
    if (!a.mat.all_finite()) throw Error(Errc::non_finite, "expm_dense input has non-finite entries");
    const int dim = a.basis.dim();
    CMatrix b = t * a.mat;
    if (!b.all_finite()) throw Error(Errc::non_finite, "expm_dense scaled input has non-finite entries");

    // Scale so ||B/2^s||_F <= 1/4, run the Taylor series to round-off, square back.
    int squarings = 0;
    double nrm = b.frobenius_norm();
    while (nrm > 0.25 && squarings < 64) {
        b *= 0.5;
        nrm *= 0.5;
        ++squarings;
    }

    CMatrix result = CMatrix::identity(dim);
    CMatrix term = CMatrix::identity(dim);
    for (int j = 1; j <= 40; ++j) {
        term = (1.0 / static_cast<double>(j)) * (term * b);
        result += term;
        if (term.frobenius_norm() <= 1e-18 * result.frobenius_norm()) break;
    }
    for (int s = 0; s < squarings; ++s) result = result * result;
    return {a.basis, std::move(result), std::nullopt};
}

double max_abs_diff_interior(const TruncatedOperator& a, const TruncatedOperator& b,
                             int max_grade) {
    require_same_basis(a, b);
    double m = 0.0;
    const int dim = a.basis.dim();
    for (int i = 0; i < dim; ++i) {
        if (a.basis.grade(i) > max_grade) continue;
        for (int j = 0; j < dim; ++j) {
            if (a.basis.grade(j) > max_grade) continue;
            m = std::max(m, std::abs(a.mat(i, j) - b.mat(i, j)));
        }
    }
    return m;
}

StateVector basis_state(const Basis& basis, int index) {
    if (index < 0 || index >= basis.dim())
        throw Error(Errc::invalid_argument, "basis state index out of range");
    StateVector v{basis, CVector(basis.dim(), 0.0), 0.0};
    v.coeffs[index] = 1.0;
    return v;
}

namespace {

void require_same_basis(const TruncatedOperator& a, const StateVector& v) {
    if (!a.basis.same_as(v.basis)) throw Error(Errc::basis_mismatch, "operator/state basis tags differ");
}

} // namespace

StateVector apply(const TruncatedOperator& a, const StateVector& v) {
    require_same_basis(a, v);
    return {v.basis, a.mat * v.coeffs, v.leakage};
}

StateVector apply_graded_exp(const TruncatedOperator& a, cplx t, const StateVector& v) {
    require_same_basis(a, v);
    if (!a.grade_shift || *a.grade_shift == 0)
        throw Error(Errc::grade_shift_required, "apply_graded_exp needs a nonzero grade shift");
    const int dim = a.basis.dim();
    struct Entry {
        int row, col;
        cplx val;
    };
    std::vector<Entry> entries;
    for (int i = 0; i < dim; ++i)
        for (int j = 0; j < dim; ++j)
            if (a.mat(i, j) != 0.0) entries.push_back({i, j, a.mat(i, j)});

    CVector result = v.coeffs;
    CVector term = v.coeffs;
    CVector next(dim);
    const int max_terms = a.basis.max_grade() / std::abs(*a.grade_shift) + 1;
    for (int j = 1; j <= max_terms; ++j) {
        std::fill(next.begin(), next.end(), cplx(0.0));
        const cplx t_over_j = t / static_cast<double>(j);
        bool zero = true;
        for (const auto& e : entries) {
            if (term[e.col] == 0.0) continue;
            next[e.row] += e.val * t_over_j * term[e.col];
            zero = false;
        }
        if (zero) break;
        term = next;
        for (int i = 0; i < dim; ++i) result[i] += term[i];
    }
    return {v.basis, std::move(result), v.leakage};
}

StateVector apply_exp_diag(const TruncatedOperator& a, cplx t, const StateVector& v) {
    require_same_basis(a, v);
    if (!a.mat.is_diagonal()) throw Error(Errc::diagonal_required, "apply_exp_diag needs a diagonal matrix");
    CVector result(v.coeffs.size());
    for (size_t i = 0; i < result.size(); ++i)
        result[i] = std::exp(t * a.mat(static_cast<int>(i), static_cast<int>(i))) * v.coeffs[i];
    return {v.basis, std::move(result), v.leakage};
}

cplx inner(const StateVector& a, const StateVector& b) {
    if (!a.basis.same_as(b.basis)) throw Error(Errc::basis_mismatch, "state basis tags differ");
    return dot(a.coeffs, b.coeffs);
}

} // namespace jacobi
