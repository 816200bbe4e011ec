#pragma once

#include <gmpxx.h>

#include <stdexcept>
#include <string>

namespace gzodd {

using Rational = mpq_class;
using Integer = mpz_class;

inline std::string to_string(const Rational& q) { return q.get_str(); }

// Accepts "p", "-p" or "p/q"; denominator must be positive after canonicalization.
inline Rational parse_rational(const std::string& s) {
    if (s.empty()) throw std::invalid_argument("parse_rational: empty string");
    Rational q;
    if (q.set_str(s, 10) != 0) throw std::invalid_argument("parse_rational: bad input '" + s + "'");
    q.canonicalize();
    return q;
}

inline double to_double(const Rational& q) { return q.get_d(); }

}  // namespace gzodd
