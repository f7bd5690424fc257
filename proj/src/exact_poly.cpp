#include "jacobi/exact_poly.hpp"

#include "jacobi/errors.hpp"

namespace jacobi {

namespace {

__int128 gcd128(__int128 a, __int128 b) {
    if (a < 0) a = -a;
    if (b < 0) b = -b;
    while (b != 0) {
        const __int128 t = a % b;
        a = b;
        b = t;
    }
    return a;
}

} // namespace

Rat::Rat(__int128 n, __int128 d) {
    if (d == 0) throw Error(Errc::invalid_argument, "rational with zero denominator");
    if (d < 0) {
        n = -n;
        d = -d;
    }
    const __int128 g = gcd128(n, d);
    num = (g == 0) ? 0 : n / g;
    den = (g == 0) ? 1 : d / g;
}

double Rat::to_double() const {
    return static_cast<double>(num) / static_cast<double>(den);
}

Rat operator+(const Rat& a, const Rat& b) { return Rat(a.num * b.den + b.num * a.den, a.den * b.den); }
Rat operator-(const Rat& a, const Rat& b) { return Rat(a.num * b.den - b.num * a.den, a.den * b.den); }
Rat operator*(const Rat& a, const Rat& b) { return Rat(a.num * b.num, a.den * b.den); }
bool operator==(const Rat& a, const Rat& b) { return a.num == b.num && a.den == b.den; }

void BivarPolyQ::add_term(int i, int j, const Rat& c) {
    if (i < 0 || j < 0) throw Error(Errc::invalid_argument, "negative exponent");
    if (c.is_zero()) return;
    auto key = Key{i, j};
    auto it = terms_.find(key);
    if (it == terms_.end()) {
        terms_.emplace(key, c);
    } else {
        it->second = it->second + c;
        if (it->second.is_zero()) terms_.erase(it);
    }
}

BivarPolyQ BivarPolyQ::d_var1() const {
    BivarPolyQ r;
    for (const auto& [key, c] : terms_)
        if (key.first > 0) r.add_term(key.first - 1, key.second, Rat(key.first) * c);
    return r;
}

BivarPolyQ BivarPolyQ::d_var2() const {
    BivarPolyQ r;
    for (const auto& [key, c] : terms_)
        if (key.second > 0) r.add_term(key.first, key.second - 1, Rat(key.second) * c);
    return r;
}

BivarPolyQ& BivarPolyQ::operator-=(const BivarPolyQ& o) {
    for (const auto& [key, c] : o.terms()) add_term(key.first, key.second, Rat(0) - c);
    return *this;
}

} // namespace jacobi
