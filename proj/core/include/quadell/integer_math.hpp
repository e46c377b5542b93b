#ifndef QUADELL_INTEGER_MATH_HPP
#define QUADELL_INTEGER_MATH_HPP

#include <array>
#include <map>
#include <optional>
#include <vector>

#include "quadell/rational.hpp"

namespace quadell {

bool is_perfect_square(const Int& n);

/// Exact square root of a perfect square; nullopt otherwise.
std::optional<Int> exact_sqrt(const Int& n);

/// Exact square root of a rational (both num and den must be squares).
std::optional<Rational> exact_sqrt(const Rational& r);

/// Prime factorization of |n|, n != 0. Trial division for small factors,
/// Pollard-Brent rho for the rest.
std::map<Int, unsigned> factorize(const Int& n);

unsigned valuation(const Int& n, const Int& p);

/* Largest positive integer f with f^2 | n1, f^4 | n2, f^6 | n3.
 * A zero argument imposes no constraint (everything divides 0); at least
 * one argument must be nonzero. */
Int max_scaling_factor(const Int& n1, const Int& n2, const Int& n3);

/// All three roots of x^3 + a2 x^2 + a4 x + a6 when they are rational
/// (hence integral, the polynomial being monic); nullopt otherwise.
std::optional<std::array<Int, 3>> monic_cubic_integer_roots(const Int& a2, const Int& a4,
                                                            const Int& a6);

}  // namespace quadell

#endif
