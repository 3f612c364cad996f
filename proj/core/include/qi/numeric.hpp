#pragma once

#include <gmpxx.h>

#include <string>

namespace qi {

// Exact scalars. Rationals are kept canonical by gmp (reduced, positive
// denominator); arithmetic never rounds.
using Integer = mpz_class;
using Rational = mpq_class;

inline Rational make_rational(Integer num, Integer den) {
    Rational q(std::move(num), std::move(den));
    q.canonicalize();
    return q;
}

inline bool is_integer(const Rational& q) { return q.get_den() == 1; }

// "a/b" when b != 1, otherwise just "a".
inline std::string to_string(const Rational& q) { return q.get_str(); }
inline std::string to_string(const Integer& z) { return z.get_str(); }

}  // namespace qi
