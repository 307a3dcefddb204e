#pragma once

#include <gmpxx.h>

#include <string>

#include "gradedroots/errors.hpp"

namespace gradedroots {

using Int = long long;
using Rational = mpq_class;

inline Rational rat(Int value) { return Rational(static_cast<long>(value)); }

inline Rational rat(Int num, Int den) {
    Rational r(static_cast<long>(num), static_cast<long>(den));
    r.canonicalize();
    return r;
}

/// Lowest-terms "p" or "p/q" string, the wire format for all rationals.
inline std::string rational_to_string(const Rational& r) {
    Rational c = r;
    c.canonicalize();
    return c.get_str();
}

inline Rational rational_from_string(const std::string& text) {
    try {
        Rational r(text);
        r.canonicalize();
        return r;
    } catch (const std::invalid_argument&) {
        throw Error(ErrorKind::ParseError, "bad rational literal '" + text + "'");
    }
}

inline bool is_integer(const Rational& r) { return r.get_den() == 1; }

inline Int to_int(const Rational& r) {
    if (!is_integer(r)) throw Error(ErrorKind::Internal, "rational is not an integer: " + rational_to_string(r));
    return static_cast<Int>(r.get_num().get_si());
}

}  // namespace gradedroots
