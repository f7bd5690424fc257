#ifndef JACOBI_OPERATOR_CORE_HPP
#define JACOBI_OPERATOR_CORE_HPP

#include <optional>

#include "jacobi/basis.hpp"
#include "jacobi/cmatrix.hpp"

namespace jacobi {

// Dense operator over a tagged truncated basis.  grade_shift, when set,
// asserts that every nonzero entry connects labels whose grade difference
// equals the shift; graded (strictly raising or lowering) operators are
// nilpotent on the truncated space, which makes their exponentials finite
// sums with entrywise-exact retained entries.
struct TruncatedOperator {
    Basis basis;
    CMatrix mat;
    std::optional<int> grade_shift;
};

// Builds an operator and, if a shift is declared, verifies the grade
// structure of the nonzero entries.
TruncatedOperator make_operator(const Basis& basis, CMatrix mat,
                                std::optional<int> grade_shift = std::nullopt);
TruncatedOperator identity_op(const Basis& basis);
TruncatedOperator zero_op(const Basis& basis);

TruncatedOperator operator+(const TruncatedOperator& a, const TruncatedOperator& b);
TruncatedOperator operator-(const TruncatedOperator& a, const TruncatedOperator& b);
TruncatedOperator operator*(const TruncatedOperator& a, const TruncatedOperator& b);
TruncatedOperator operator*(cplx s, const TruncatedOperator& a);

TruncatedOperator adjoint(const TruncatedOperator& a);

// AB - BA; both operands must share the basis tag.
TruncatedOperator commutator(const TruncatedOperator& a, const TruncatedOperator& b);

// exp(t A) for a strictly graded operator: the power series terminates once
// A^j vanishes structurally.  Raising (or lowering) chains move through the
// grade window monotonically, so every retained entry equals the entry of
// the untruncated exponential.
TruncatedOperator graded_exp(const TruncatedOperator& a, cplx t);

// exp(t A) for a diagonal matrix; exact per entry.
TruncatedOperator exp_diag(const TruncatedOperator& a, cplx t);

// General matrix exponential by scaling and squaring of the Taylor series.
// Accuracy ~1e-13 relative in Frobenius norm for ||tA|| <= 64; used as the
// independent oracle against the factored unitaries.
TruncatedOperator expm_dense(const TruncatedOperator& a, cplx t = 1.0);

// Max |A - B| over entries whose row and column grades are both <= max_grade.
// Comparison convention for truncated identities: the edge of the grade
// window is analytically corrupted, so assertions stay on the interior block.
double max_abs_diff_interior(const TruncatedOperator& a, const TruncatedOperator& b,
                             int max_grade);

// Coefficient vector over a tagged basis.  leakage is an upper bound on the
// squared norm lost to truncation by the operations that produced the state.
struct StateVector {
    Basis basis;
    CVector coeffs;
    double leakage = 0.0;
};

StateVector basis_state(const Basis& basis, int index);
StateVector apply(const TruncatedOperator& a, const StateVector& v);
StateVector apply_graded_exp(const TruncatedOperator& a, cplx t, const StateVector& v);
StateVector apply_exp_diag(const TruncatedOperator& a, cplx t, const StateVector& v);

cplx inner(const StateVector& a, const StateVector& b);

} // namespace jacobi

#endif
