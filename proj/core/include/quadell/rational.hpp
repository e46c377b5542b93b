#ifndef QUADELL_RATIONAL_HPP
#define QUADELL_RATIONAL_HPP

#include <gmpxx.h>

#include <string>

namespace quadell {

// Arbitrary-precision integers and exact rationals. mpq_class keeps the
// canonical form we rely on throughout: denominator > 0, gcd(|num|, den) = 1.
using Int = mpz_class;
using Rational = mpq_class;

/// Canonicalized rational from an integer pair. Throws on zero denominator.
Rational make_rational(const Int& num, const Int& den);

inline const Int& num(const Rational& r) { return r.get_num(); }
inline const Int& den(const Rational& r) { return r.get_den(); }
inline bool is_integer(const Rational& r) { return r.get_den() == 1; }

/// "p/q" for non-integers, "p" otherwise.
std::string to_string(const Rational& r);
std::string to_string(const Int& n);

/// Parses "p", "-p" or "p/q". Throws Error(InvalidArgument) on junk.
Rational parse_rational(const std::string& text);
Int parse_int(const std::string& text);

}  // namespace quadell

#endif
