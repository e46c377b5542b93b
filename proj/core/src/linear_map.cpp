#include "quadell/linear_map.hpp"

#include "quadell/errors.hpp"

namespace quadell {

namespace {

Rational det3(const std::array<std::array<Rational, 3>, 3>& m) {
  return m[0][0] * (m[1][1] * m[2][2] - m[1][2] * m[2][1]) -
         m[0][1] * (m[1][0] * m[2][2] - m[1][2] * m[2][0]) +
         m[0][2] * (m[1][0] * m[2][1] - m[1][1] * m[2][0]);
}

Rational det4(const std::array<std::array<Rational, 4>, 4>& m) {
  Rational s = 0;
  for (std::size_t c = 0; c < 4; ++c) {
    std::array<std::array<Rational, 3>, 3> minor;
    for (std::size_t r = 1; r < 4; ++r) {
      std::size_t cc = 0;
      for (std::size_t k = 0; k < 4; ++k) {
        if (k == c) continue;
        minor[r - 1][cc++] = m[r][k];
      }
    }
    Rational term = m[0][c] * det3(minor);
    s += (c % 2 == 0) ? term : -term;
  }
  return s;
}

template <std::size_t N>
Rational det_of(const std::array<std::array<Rational, N>, N>& m) {
  if constexpr (N == 3)
    return det3(m);
  else
    return det4(m);
}

}  // namespace

template <std::size_t N>
LinearMap<N>::LinearMap(const Matrix& m) : m_(m), det_(det_of<N>(m)) {
  if (det_ == 0) throw Error(ErrorKind::InvalidArgument, "LinearMap", "singular matrix");
}

template <std::size_t N>
LinearMap<N> LinearMap<N>::identity() {
  Matrix m{};
  for (std::size_t i = 0; i < N; ++i) m[i][i] = 1;
  return LinearMap(m);
}

template <std::size_t N>
LinearMap<N> LinearMap<N>::permutation(const std::array<std::size_t, N>& target_of) {
  Matrix m{};
  for (std::size_t i = 0; i < N; ++i) m[target_of[i]][i] = 1;
  return LinearMap(m);
}

template <std::size_t N>
LinearMap<N> LinearMap<N>::inverse() const {
  // Gauss-Jordan over the rationals
  std::array<std::array<Rational, 2 * N>, N> w{};
  for (std::size_t r = 0; r < N; ++r) {
    for (std::size_t c = 0; c < N; ++c) w[r][c] = m_[r][c];
    w[r][N + r] = 1;
  }
  for (std::size_t col = 0; col < N; ++col) {
    std::size_t pivot = col;
    while (pivot < N && w[pivot][col] == 0) ++pivot;
    if (pivot == N) throw Error(ErrorKind::InvalidArgument, "LinearMap::inverse", "singular");
    std::swap(w[pivot], w[col]);
    Rational inv = 1 / w[col][col];
    for (auto& x : w[col]) x *= inv;
    for (std::size_t r = 0; r < N; ++r) {
      if (r == col || w[r][col] == 0) continue;
      Rational f = w[r][col];
      for (std::size_t c = 0; c < 2 * N; ++c) w[r][c] -= f * w[col][c];
    }
  }
  Matrix out;
  for (std::size_t r = 0; r < N; ++r)
    for (std::size_t c = 0; c < N; ++c) out[r][c] = w[r][N + c];
  return LinearMap(out);
}

template <std::size_t N>
LinearMap<N> LinearMap<N>::compose(const LinearMap& first) const {
  Matrix out{};
  for (std::size_t r = 0; r < N; ++r)
    for (std::size_t c = 0; c < N; ++c)
      for (std::size_t k = 0; k < N; ++k) out[r][c] += m_[r][k] * first.m_[k][c];
  return LinearMap(out);
}

template <std::size_t N>
std::array<Rational, N> LinearMap<N>::apply_raw(const std::array<Rational, N>& x) const {
  std::array<Rational, N> out{};
  for (std::size_t r = 0; r < N; ++r)
    for (std::size_t c = 0; c < N; ++c) out[r] += m_[r][c] * x[c];
  return out;
}

template <std::size_t N>
ProjectivePoint<N> LinearMap<N>::apply(const ProjectivePoint<N>& p) const {
  return ProjectivePoint<N>(apply_raw(p.rational_coords()));
}

template class LinearMap<3>;
template class LinearMap<4>;

TernaryCubic substitute(const TernaryCubic& c, const LinearMap3& m) {
  // expand C(m00 X + m01 Y + m02 Z, ...) monomial by monomial
  std::array<Rational, 10> acc{};
  const auto& rows = m.matrix();
  for (std::size_t t = 0; t < 10; ++t) {
    const Rational& coeff = c.coeffs()[t];
    if (coeff == 0) continue;
    auto [i, j, k] = kCubicMonomials[t];
    // terms: map exponent triple -> coefficient, built by repeated linear products
    // multiply out i copies of row0, j of row1, k of row2
    std::array<Rational, 10> deg3{};
    std::array<Rational, 6> deg2{};
    std::array<Rational, 3> deg1{};
    std::array<Rational, 1> deg0 = {Rational(1)};
    int total = 0;
    auto mul_row = [&](std::size_t row) {
      const auto& l = rows[row];
      if (total == 0) {
        for (std::size_t a = 0; a < 3; ++a) deg1[a] = deg0[0] * l[a];
      } else if (total == 1) {
        deg2 = {};
        for (std::size_t a = 0; a < 3; ++a) {
          if (deg1[a] == 0) continue;
          for (std::size_t b = 0; b < 3; ++b)
            deg2[QuadraticForm3::index(std::min(a, b), std::max(a, b))] += deg1[a] * l[b];
        }
      } else {
        deg3 = {};
        for (std::size_t a = 0; a < 3; ++a) {
          for (std::size_t b = a; b < 3; ++b) {
            const Rational& q = deg2[QuadraticForm3::index(a, b)];
            if (q == 0) continue;
            for (std::size_t d = 0; d < 3; ++d) {
              int e[3] = {0, 0, 0};
              e[a] += 1;
              e[b] += 1;
              e[d] += 1;
              deg3[cubic_index(e[0], e[1], e[2])] += q * l[d];
            }
          }
        }
      }
      ++total;
    };
    for (int t2 = 0; t2 < i; ++t2) mul_row(0);
    for (int t2 = 0; t2 < j; ++t2) mul_row(1);
    for (int t2 = 0; t2 < k; ++t2) mul_row(2);
    for (std::size_t a = 0; a < 10; ++a) acc[a] += coeff * deg3[a];
  }
  return TernaryCubic(acc);
}

}  // namespace quadell
