// Iterated-integration oracle for monomial integrals over the standard
// simplex: integrate out the innermost variable symbolically, substitute the
// upper bound 1 - t_1 - ... - t_{k-1}, recurse. Shares nothing with the
// closed-form factorial path in the library.
#pragma once

#include <map>
#include <vector>

#include "pwforms/rational.hpp"

namespace oracle {

using pwf::Rational;

// exponent vector -> coefficient
using Poly = std::map<std::vector<int>, Rational>;

inline void poly_add(Poly& p, const std::vector<int>& mono, const Rational& c) {
    if (pwf::is_zero(c)) return;
    auto it = p.find(mono);
    if (it == p.end()) {
        p.emplace(mono, c);
    } else {
        it->second += c;
        if (pwf::is_zero(it->second)) p.erase(it);
    }
}

inline Poly poly_mul(const Poly& a, const Poly& b) {
    Poly out;
    for (const auto& [ma, ca] : a)
        for (const auto& [mb, cb] : b) {
            std::vector<int> m(ma.size());
            for (std::size_t i = 0; i < m.size(); ++i) m[i] = ma[i] + mb[i];
            poly_add(out, m, ca * cb);
        }
    return out;
}

inline Poly poly_pow(const Poly& a, int e, std::size_t nvars) {
    Poly out;
    poly_add(out, std::vector<int>(nvars, 0), Rational(1));
    for (int i = 0; i < e; ++i) out = poly_mul(out, a);
    return out;
}

// integral of t^a over the standard simplex of dimension a.size()
inline Rational integrate_monomial(const std::vector<int>& a) {
    if (a.empty()) return Rational(1);
    const std::size_t n = a.size();
    const int e = a.back();

    // antiderivative in t_n evaluated at U = 1 - t_1 - ... - t_{n-1}
    Poly upper;
    poly_add(upper, std::vector<int>(n - 1, 0), Rational(1));
    for (std::size_t i = 0; i < n - 1; ++i) {
        std::vector<int> m(n - 1, 0);
        m[i] = 1;
        poly_add(upper, m, Rational(-1));
    }
    Poly expanded = poly_pow(upper, e + 1, n - 1);

    Rational total(0);
    for (const auto& [mono, coeff] : expanded) {
        std::vector<int> rest(a.begin(), a.end() - 1);
        for (std::size_t i = 0; i < mono.size(); ++i) rest[i] += mono[i];
        total += coeff * integrate_monomial(rest);
    }
    return total / Rational(e + 1);
}

} // namespace oracle
