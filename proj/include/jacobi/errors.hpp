#ifndef JACOBI_ERRORS_HPP
#define JACOBI_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace jacobi {

enum class Errc {
    basis_mismatch,
    invalid_argument,
    domain_error,
    grade_shift_required,
    diagonal_required,
    non_finite,
    cutoff_exceeded,
    leakage_budget,
};

class Error : public std::runtime_error {
public:
    Error(Errc code, const std::string& what, int required_cutoff = -1)
        : std::runtime_error(what), code_(code), required_cutoff_(required_cutoff) {}

    Errc code() const noexcept { return code_; }

    // Meaningful only for Errc::cutoff_exceeded: the cutoff that would
    // have been large enough for the rejected request.
    int required_cutoff() const noexcept { return required_cutoff_; }

private:
    Errc code_;
    int required_cutoff_;
};

} // namespace jacobi

#endif
