#ifndef JACOBI_EXACT_POLY_HPP
#define JACOBI_EXACT_POLY_HPP

#include <map>
#include <utility>

namespace jacobi {

// Exact rational scalar over __int128, kept gcd-reduced with positive
// denominator.  Large enough for the coefficient arithmetic that appears in
// the polynomial models at desk scale (denominators up to ~20! * 2^10).
struct Rat {
    __int128 num = 0;
    __int128 den = 1;

    Rat() = default;
    Rat(long long n) : num(n), den(1) {}
    Rat(__int128 n, __int128 d);

    bool is_zero() const { return num == 0; }
    double to_double() const;
};

Rat operator+(const Rat& a, const Rat& b);
Rat operator-(const Rat& a, const Rat& b);
Rat operator*(const Rat& a, const Rat& b);
bool operator==(const Rat& a, const Rat& b);

// Bivariate polynomial with exact rational coefficients; used where an
// identity must cancel to literal zero rather than round-off.
class BivarPolyQ {
public:
    using Key = std::pair<int, int>;

    const std::map<Key, Rat>& terms() const { return terms_; }
    void add_term(int i, int j, const Rat& c);
    bool is_zero() const { return terms_.empty(); }

    BivarPolyQ d_var1() const;
    BivarPolyQ d_var2() const;
    BivarPolyQ& operator-=(const BivarPolyQ& o);

private:
    std::map<Key, Rat> terms_;
};

} // namespace jacobi

#endif
