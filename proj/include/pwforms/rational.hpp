#pragma once

#include <gmpxx.h>

#include <string>

#include "pwforms/errors.hpp"

namespace pwf {

// The only scalar type in the library. mpq_class keeps the numerator and
// denominator canonical (den > 0, gcd = 1) after every operation.
using Rational = mpq_class;

inline bool is_zero(const Rational& r) { return sgn(r) == 0; }

// "p/q" or plain "p"; denominator 1 prints without the slash.
inline std::string rational_to_string(const Rational& r) {
    if (r.get_den() == 1) return r.get_num().get_str();
    return r.get_num().get_str() + "/" + r.get_den().get_str();
}

inline Rational parse_rational(const std::string& s) {
    try {
        Rational r(s, 10);
        if (r.get_den() == 0) throw input_error("zero denominator in '" + s + "'");
        r.canonicalize();
        return r;
    } catch (const std::invalid_argument&) {
        throw input_error("not a rational number: '" + s + "'");
    }
}

} // namespace pwf
