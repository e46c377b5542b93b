#ifndef QUADELL_PROJECTIVE_HPP
#define QUADELL_PROJECTIVE_HPP

#include <array>
#include <span>
#include <string>

#include "quadell/rational.hpp"

namespace quadell {

/* Projective points carry primitive integer coordinates with a canonical
 * sign: gcd of the nonzero entries is 1 and the first nonzero entry is
 * positive. Two equal points therefore compare equal componentwise. */
template <std::size_t N>
class ProjectivePoint {
 public:
  explicit ProjectivePoint(const std::array<Int, N>& coords);
  explicit ProjectivePoint(const std::array<Rational, N>& coords);

  const Int& operator[](std::size_t i) const { return c_[i]; }
  const std::array<Int, N>& coords() const { return c_; }
  std::array<Rational, N> rational_coords() const;

  bool operator==(const ProjectivePoint&) const = default;

  std::string str() const;

 private:
  std::array<Int, N> c_;
};

using ProjectivePoint2 = ProjectivePoint<3>;  // plane, coordinates (X, Y, Z)
using ProjectivePoint3 = ProjectivePoint<4>;  // space, coordinates (X0..X3)

/// Primitive canonical-sign representative of a raw homogeneous vector.
/// Throws Error(ZeroVector) when every entry is zero.
ProjectivePoint2 normalize_point(const std::array<Rational, 3>& raw);
ProjectivePoint3 normalize_point(const std::array<Rational, 4>& raw);

}  // namespace quadell

#endif
