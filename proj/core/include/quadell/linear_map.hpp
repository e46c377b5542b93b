#ifndef QUADELL_LINEAR_MAP_HPP
#define QUADELL_LINEAR_MAP_HPP

#include <array>

#include "quadell/forms.hpp"
#include "quadell/projective.hpp"
#include "quadell/rational.hpp"

namespace quadell {

/// Invertible linear change of coordinates on P^{N-1}. Rows act on column
/// vectors: new_i = sum_j m[i][j] old_j.
template <std::size_t N>
class LinearMap {
 public:
  using Matrix = std::array<std::array<Rational, N>, N>;

  explicit LinearMap(const Matrix& m);  // throws on det == 0
  static LinearMap identity();
  static LinearMap permutation(const std::array<std::size_t, N>& target_of);

  const Matrix& matrix() const { return m_; }
  const Rational& det() const { return det_; }

  LinearMap inverse() const;
  LinearMap compose(const LinearMap& first) const;  // (*this) after `first`

  std::array<Rational, N> apply_raw(const std::array<Rational, N>& x) const;
  ProjectivePoint<N> apply(const ProjectivePoint<N>& p) const;

 private:
  Matrix m_;
  Rational det_;
};

using LinearMap3 = LinearMap<3>;
using LinearMap4 = LinearMap<4>;

/* Exact symbolic substitution: returns C(m . X), the cubic whose value at X
 * equals C at m.X. Pulling a curve through the forward map f uses
 * substitute(C, f.inverse()); substitute(C, f) o substitute(C, f^-1) is the
 * identity on tables. */
TernaryCubic substitute(const TernaryCubic& c, const LinearMap3& m);

}  // namespace quadell

#endif
