#include "jacobi/bivar_poly.hpp"

#include <cmath>

#include "jacobi/errors.hpp"

namespace jacobi {

BivarPoly BivarPoly::constant(VarPair vars, cplx c) {
    BivarPoly p(vars);
    p.add_term(0, 0, c);
    return p;
}

void BivarPoly::add_term(int i, int j, cplx c) {
    if (i < 0 || j < 0) throw Error(Errc::invalid_argument, "negative exponent");
    if (c == 0.0) return;
    auto key = Key{i, j};
    auto it = terms_.find(key);
    if (it == terms_.end()) {
        terms_.emplace(key, c);
    } else {
        it->second += c;
        if (it->second == 0.0) terms_.erase(it);
    }
}

cplx BivarPoly::coeff(int i, int j) const {
    auto it = terms_.find(Key{i, j});
    return it == terms_.end() ? cplx(0.0) : it->second;
}

double BivarPoly::max_abs_coeff() const {
    double m = 0.0;
    for (const auto& [key, c] : terms_) m = std::max(m, std::abs(c));
    return m;
}

BivarPoly BivarPoly::d_var1() const {
    BivarPoly r(vars_);
    for (const auto& [key, c] : terms_)
        if (key.first > 0) r.add_term(key.first - 1, key.second, static_cast<double>(key.first) * c);
    return r;
}

BivarPoly BivarPoly::d_var2() const {
    BivarPoly r(vars_);
    for (const auto& [key, c] : terms_)
        if (key.second > 0) r.add_term(key.first, key.second - 1, static_cast<double>(key.second) * c);
    return r;
}

BivarPoly BivarPoly::shift_var1(int power) const {
    BivarPoly r(vars_);
    for (const auto& [key, c] : terms_) r.add_term(key.first + power, key.second, c);
    return r;
}

BivarPoly BivarPoly::shift_var2(int power) const {
    BivarPoly r(vars_);
    for (const auto& [key, c] : terms_) r.add_term(key.first, key.second + power, c);
    return r;
}

cplx BivarPoly::eval(cplx v1, cplx v2) const {
    cplx s = 0.0;
    for (const auto& [key, c] : terms_)
        s += c * std::pow(v1, key.first) * std::pow(v2, key.second);
    return s;
}

BivarPoly& BivarPoly::operator+=(const BivarPoly& o) {
    if (vars_ != o.vars_) throw Error(Errc::invalid_argument, "variable tags differ");
    for (const auto& [key, c] : o.terms_) add_term(key.first, key.second, c);
    return *this;
}

BivarPoly& BivarPoly::operator-=(const BivarPoly& o) {
    if (vars_ != o.vars_) throw Error(Errc::invalid_argument, "variable tags differ");
    for (const auto& [key, c] : o.terms_) add_term(key.first, key.second, -c);
    return *this;
}

BivarPoly& BivarPoly::operator*=(cplx s) {
    if (s == 0.0) {
        *this = BivarPoly(vars_);
        return *this;
    }
    for (auto& [key, c] : terms_) c *= s;
    return *this;
}

BivarPoly operator+(BivarPoly a, const BivarPoly& b) { return a += b; }
BivarPoly operator-(BivarPoly a, const BivarPoly& b) { return a -= b; }
BivarPoly operator*(cplx s, BivarPoly a) { return a *= s; }

double max_abs_coeff_diff(const BivarPoly& a, const BivarPoly& b) {
    return (a - b).max_abs_coeff();
}

} // namespace jacobi
