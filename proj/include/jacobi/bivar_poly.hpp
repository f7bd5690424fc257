#ifndef JACOBI_BIVAR_POLY_HPP
#define JACOBI_BIVAR_POLY_HPP

#include <complex>
#include <map>
#include <utility>

namespace jacobi {

using cplx = std::complex<double>;

// Variable tags for the two holomorphic models.
enum class VarPair { AlphaW, ZZeta };

// Generator names shared by the differential-operator actions.
enum class GenName { A, ADag, K0, KPlus, KMinus };

// Finitely supported polynomial in two formal variables; zero coefficients
// are never stored.
class BivarPoly {
public:
    using Key = std::pair<int, int>;  // (power of var1, power of var2)

    explicit BivarPoly(VarPair vars) : vars_(vars) {}
    static BivarPoly constant(VarPair vars, cplx c);

    VarPair vars() const { return vars_; }
    const std::map<Key, cplx>& terms() const { return terms_; }

    void add_term(int i, int j, cplx c);
    cplx coeff(int i, int j) const;
    bool is_zero() const { return terms_.empty(); }
    double max_abs_coeff() const;

    BivarPoly d_var1() const;              // d/d(var1)
    BivarPoly d_var2() const;              // d/d(var2)
    BivarPoly shift_var1(int power) const; // multiply by var1^power
    BivarPoly shift_var2(int power) const;

    cplx eval(cplx v1, cplx v2) const;

    BivarPoly& operator+=(const BivarPoly& o);
    BivarPoly& operator-=(const BivarPoly& o);
    BivarPoly& operator*=(cplx s);

private:
    VarPair vars_;
    std::map<Key, cplx> terms_;
};

BivarPoly operator+(BivarPoly a, const BivarPoly& b);
BivarPoly operator-(BivarPoly a, const BivarPoly& b);
BivarPoly operator*(cplx s, BivarPoly a);

double max_abs_coeff_diff(const BivarPoly& a, const BivarPoly& b);

} // namespace jacobi

#endif
