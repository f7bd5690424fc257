#ifndef JACOBI_BASIS_HPP
#define JACOBI_BASIS_HPP

#include <memory>
#include <vector>

namespace jacobi {

enum class RepKind { SW, DS };

// Two-index label of a discrete-series basis vector: n_prime oscillator
// quanta on top of n metaplectic-free raising steps.  Grade is n' + 2n.
struct DsLabel {
    int n_prime;
    int n;
};

// Tagged, ordered, truncated basis.
//
// SW(N): number states n = 0..N, grade n.
// DS(k, D): all (n', n) with n' + 2n <= 2D, ordered by grade and then by
// ascending n'.  Grade equals twice the K0-eigenvalue offset in both cases,
// so every raising generator shifts the grade by a fixed positive amount.
class Basis {
public:
    static Basis sw(int cutoff);
    static Basis ds(double weight, int level);

    RepKind kind() const { return impl_->kind; }
    int dim() const { return static_cast<int>(impl_->grades.size()); }
    int grade(int index) const { return impl_->grades[index]; }
    int max_grade() const { return impl_->max_grade; }

    int sw_cutoff() const;      // SW only
    double ds_weight() const;   // DS only
    int ds_level() const;       // DS only

    DsLabel ds_label(int index) const;             // DS only
    int ds_index(int n_prime, int n) const;        // DS only; -1 if outside the basis

    bool same_as(const Basis& o) const;

private:
    struct Impl {
        RepKind kind;
        int cutoff;        // N for SW, D for DS
        double weight;     // k for DS, unused for SW
        int max_grade;
        std::vector<int> grades;
        std::vector<DsLabel> labels;  // empty for SW
    };
    explicit Basis(std::shared_ptr<const Impl> impl) : impl_(std::move(impl)) {}
    std::shared_ptr<const Impl> impl_;
};

} // namespace jacobi

#endif
