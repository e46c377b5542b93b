#ifndef QUADELL_FORMS_HPP
#define QUADELL_FORMS_HPP

#include <array>
#include <cstddef>
#include <string>

#include "quadell/projective.hpp"
#include "quadell/rational.hpp"

namespace quadell {

/* ---- ternary cubic --------------------------------------------------- */

struct Monomial {
  int i, j, k;  // exponents of X, Y, Z; i + j + k = 3
};

// storage order: lexicographic descending in (i, j, k)
inline constexpr std::array<Monomial, 10> kCubicMonomials = {{
    {3, 0, 0}, {2, 1, 0}, {2, 0, 1}, {1, 2, 0}, {1, 1, 1},
    {1, 0, 2}, {0, 3, 0}, {0, 2, 1}, {0, 1, 2}, {0, 0, 3},
}};

std::size_t cubic_index(int i, int j, int k);

/// Homogeneous degree-3 form in (X, Y, Z): sum of g_ijk X^i Y^j Z^k.
class TernaryCubic {
 public:
  TernaryCubic() = default;
  explicit TernaryCubic(std::array<Rational, 10> coeffs) : g_(std::move(coeffs)) {}

  const Rational& at(int i, int j, int k) const { return g_[cubic_index(i, j, k)]; }
  void set(int i, int j, int k, Rational v) { g_[cubic_index(i, j, k)] = std::move(v); }
  const std::array<Rational, 10>& coeffs() const { return g_; }

  Rational evaluate(const std::array<Rational, 3>& p) const;
  Rational evaluate(const ProjectivePoint2& p) const;
  bool is_zero() const;
  bool vanishes_at(const ProjectivePoint2& p) const { return evaluate(p) == 0; }

  /// Gradient at a raw point (exact partial derivatives).
  std::array<Rational, 3> gradient(const std::array<Rational, 3>& p) const;

  /// Same curve, primitive integer coefficients, sign of the table kept.
  /// This is the in-pipeline representative all steps work on.
  TernaryCubic primitive() const;

  /// primitive() with the canonical sign (first nonzero coefficient in
  /// storage order positive); the user-facing normal form.
  TernaryCubic normalized() const;

  TernaryCubic scaled(const Rational& s) const;

  /// True when the two forms differ by one global nonzero factor.
  bool proportional_to(const TernaryCubic& other) const;

  std::string str() const;

 private:
  std::array<Rational, 10> g_{};
};

/* ---- quadric in P^3 --------------------------------------------------- */

/// X^T A X with A symmetric 4x4. Construction rejects asymmetric input.
class QuadricForm {
 public:
  explicit QuadricForm(const std::array<std::array<Rational, 4>, 4>& m);
  static QuadricForm diagonal(const std::array<Rational, 4>& d);

  const Rational& at(std::size_t r, std::size_t c) const { return m_[r][c]; }
  const std::array<std::array<Rational, 4>, 4>& matrix() const { return m_; }

  Rational evaluate(const std::array<Rational, 4>& x) const;
  Rational evaluate(const ProjectivePoint3& p) const;

 private:
  std::array<std::array<Rational, 4>, 4> m_;
};

/* ---- small form helpers used by the pencil module -------------------- */

template <std::size_t N>
struct LinearForm {
  std::array<Rational, N> c{};
  Rational evaluate(const std::array<Rational, N>& x) const {
    Rational s = 0;
    for (std::size_t i = 0; i < N; ++i) s += c[i] * x[i];
    return s;
  }
};
using LinearForm3 = LinearForm<3>;
using LinearForm4 = LinearForm<4>;

/// Symmetric coefficients indexed by unordered pairs i <= j.
template <std::size_t N>
struct QuadraticForm {
  static constexpr std::size_t kTerms = N * (N + 1) / 2;
  std::array<Rational, kTerms> c{};

  static constexpr std::size_t index(std::size_t i, std::size_t j) {
    if (i > j) std::swap(i, j);
    return i * N - i * (i + 1) / 2 + j;
  }
  const Rational& at(std::size_t i, std::size_t j) const { return c[index(i, j)]; }
  void add(std::size_t i, std::size_t j, const Rational& v) { c[index(i, j)] += v; }

  Rational evaluate(const std::array<Rational, N>& x) const {
    Rational s = 0;
    for (std::size_t i = 0; i < N; ++i)
      for (std::size_t j = i; j < N; ++j) s += at(i, j) * x[i] * x[j];
    return s;
  }
};
using QuadraticForm3 = QuadraticForm<3>;
using QuadraticForm4 = QuadraticForm<4>;

/// Product of two linear forms as a QuadraticForm.
template <std::size_t N>
QuadraticForm<N> operator*(const LinearForm<N>& a, const LinearForm<N>& b) {
  QuadraticForm<N> q;
  for (std::size_t i = 0; i < N; ++i)
    for (std::size_t j = 0; j < N; ++j) q.add(i, j, a.c[i] * b.c[j]);
  return q;
}

/// q * l expanded into a TernaryCubic (N = 3 only).
TernaryCubic operator*(const QuadraticForm3& q, const LinearForm3& l);

}  // namespace quadell

#endif
