#include "jacobi/basis.hpp"

#include "jacobi/errors.hpp"

namespace jacobi {

Basis Basis::sw(int cutoff) {
    if (cutoff < 0) throw Error(Errc::invalid_argument, "SW cutoff must be non-negative");
    auto impl = std::make_shared<Impl>();
    impl->kind = RepKind::SW;
    impl->cutoff = cutoff;
    impl->weight = 0.0;
    impl->max_grade = cutoff;
    impl->grades.resize(cutoff + 1);
    for (int n = 0; n <= cutoff; ++n) impl->grades[n] = n;
    return Basis(std::move(impl));
}

Basis Basis::ds(double weight, int level) {
    if (!(weight > 0.5)) throw Error(Errc::invalid_argument, "DS weight must satisfy k > 1/2");
    if (level < 0) throw Error(Errc::invalid_argument, "DS level cutoff must be non-negative");
    auto impl = std::make_shared<Impl>();
    impl->kind = RepKind::DS;
    impl->cutoff = level;
    impl->weight = weight;
    impl->max_grade = 2 * level;
    for (int g = 0; g <= 2 * level; ++g) {
        // States of grade g, by ascending n': n' runs over g mod 2, g mod 2 + 2, ..., g.
        for (int n_prime = g % 2; n_prime <= g; n_prime += 2) {
            impl->grades.push_back(g);
            impl->labels.push_back({n_prime, (g - n_prime) / 2});
        }
    }
    return Basis(std::move(impl));
}

int Basis::sw_cutoff() const {
    if (impl_->kind != RepKind::SW) throw Error(Errc::invalid_argument, "not an SW basis");
    return impl_->cutoff;
}

double Basis::ds_weight() const {
    if (impl_->kind != RepKind::DS) throw Error(Errc::invalid_argument, "not a DS basis");
    return impl_->weight;
}

int Basis::ds_level() const {
    if (impl_->kind != RepKind::DS) throw Error(Errc::invalid_argument, "not a DS basis");
    return impl_->cutoff;
}

DsLabel Basis::ds_label(int index) const {
    if (impl_->kind != RepKind::DS) throw Error(Errc::invalid_argument, "not a DS basis");
    return impl_->labels[index];
}

int Basis::ds_index(int n_prime, int n) const {
    if (impl_->kind != RepKind::DS) throw Error(Errc::invalid_argument, "not a DS basis");
    if (n_prime < 0 || n < 0) return -1;
    const int g = n_prime + 2 * n;
    if (g > impl_->max_grade) return -1;
    // Offset of grade block g: t^2 + t for g = 2t, (t+1)^2 for g = 2t + 1.
    const int t = g / 2;
    const int offset = (g % 2 == 0) ? t * t + t : (t + 1) * (t + 1);
    return offset + n_prime / 2;
}

bool Basis::same_as(const Basis& o) const {
    if (impl_ == o.impl_) return true;
    return impl_->kind == o.impl_->kind && impl_->cutoff == o.impl_->cutoff &&
           impl_->weight == o.impl_->weight;
}

} // namespace jacobi
