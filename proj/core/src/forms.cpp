#include "quadell/forms.hpp"

#include "quadell/errors.hpp"

namespace quadell {

std::size_t cubic_index(int i, int j, int k) {
  for (std::size_t t = 0; t < kCubicMonomials.size(); ++t)
    if (kCubicMonomials[t].i == i && kCubicMonomials[t].j == j && kCubicMonomials[t].k == k)
      return t;
  throw Error(ErrorKind::InvalidArgument, "cubic_index", "bad exponent triple");
}

namespace {

Rational pow_r(const Rational& b, int e) {
  Rational r = 1;
  for (int t = 0; t < e; ++t) r *= b;
  return r;
}

}  // namespace

Rational TernaryCubic::evaluate(const std::array<Rational, 3>& p) const {
  Rational s = 0;
  for (std::size_t t = 0; t < 10; ++t) {
    if (g_[t] == 0) continue;
    auto [i, j, k] = kCubicMonomials[t];
    s += g_[t] * pow_r(p[0], i) * pow_r(p[1], j) * pow_r(p[2], k);
  }
  return s;
}

Rational TernaryCubic::evaluate(const ProjectivePoint2& p) const {
  return evaluate(p.rational_coords());
}

bool TernaryCubic::is_zero() const {
  for (const auto& c : g_)
    if (c != 0) return false;
  return true;
}

std::array<Rational, 3> TernaryCubic::gradient(const std::array<Rational, 3>& p) const {
  std::array<Rational, 3> g = {Rational(0), Rational(0), Rational(0)};
  for (std::size_t t = 0; t < 10; ++t) {
    if (g_[t] == 0) continue;
    auto [i, j, k] = kCubicMonomials[t];
    if (i) g[0] += g_[t] * i * pow_r(p[0], i - 1) * pow_r(p[1], j) * pow_r(p[2], k);
    if (j) g[1] += g_[t] * j * pow_r(p[0], i) * pow_r(p[1], j - 1) * pow_r(p[2], k);
    if (k) g[2] += g_[t] * k * pow_r(p[0], i) * pow_r(p[1], j) * pow_r(p[2], k - 1);
  }
  return g;
}

TernaryCubic TernaryCubic::primitive() const {
  Int lcm = 1;
  for (const auto& c : g_) mpz_lcm(lcm.get_mpz_t(), lcm.get_mpz_t(), den(c).get_mpz_t());
  Int g = 0;
  for (const auto& c : g_) {
    Int scaled = num(c) * (lcm / den(c));
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), scaled.get_mpz_t());
  }
  if (g == 0) return *this;
  return scaled(make_rational(lcm, g));
}

TernaryCubic TernaryCubic::normalized() const {
  TernaryCubic p = primitive();
  for (const auto& c : p.g_) {
    if (c != 0) {
      if (c < 0) return p.scaled(Rational(-1));
      break;
    }
  }
  return p;
}

TernaryCubic TernaryCubic::scaled(const Rational& s) const {
  TernaryCubic out = *this;
  for (auto& c : out.g_) c *= s;
  return out;
}

bool TernaryCubic::proportional_to(const TernaryCubic& other) const {
  Rational ratio = 0;
  for (std::size_t t = 0; t < 10; ++t) {
    const bool za = g_[t] == 0, zb = other.g_[t] == 0;
    if (za != zb) return false;
    if (za) continue;
    Rational r = other.g_[t] / g_[t];
    if (ratio == 0)
      ratio = r;
    else if (r != ratio)
      return false;
  }
  return ratio != 0;
}

std::string TernaryCubic::str() const {
  std::string s = "[";
  for (std::size_t t = 0; t < 10; ++t) {
    if (t) s += ", ";
    s += to_string(g_[t]);
  }
  return s + "]";
}

QuadricForm::QuadricForm(const std::array<std::array<Rational, 4>, 4>& m) : m_(m) {
  for (std::size_t r = 0; r < 4; ++r)
    for (std::size_t c = r + 1; c < 4; ++c)
      if (m_[r][c] != m_[c][r])
        throw Error(ErrorKind::InvalidArgument, "QuadricForm", "matrix not symmetric");
}

QuadricForm QuadricForm::diagonal(const std::array<Rational, 4>& d) {
  std::array<std::array<Rational, 4>, 4> m{};
  for (std::size_t i = 0; i < 4; ++i) m[i][i] = d[i];
  return QuadricForm(m);
}

Rational QuadricForm::evaluate(const std::array<Rational, 4>& x) const {
  Rational s = 0;
  for (std::size_t r = 0; r < 4; ++r)
    for (std::size_t c = 0; c < 4; ++c) s += m_[r][c] * x[r] * x[c];
  return s;
}

Rational QuadricForm::evaluate(const ProjectivePoint3& p) const {
  return evaluate(p.rational_coords());
}

TernaryCubic operator*(const QuadraticForm3& q, const LinearForm3& l) {
  std::array<Rational, 10> acc{};
  for (std::size_t i = 0; i < 3; ++i) {
    for (std::size_t j = i; j < 3; ++j) {
      const Rational& qc = q.at(i, j);
      if (qc == 0) continue;
      for (std::size_t k = 0; k < 3; ++k) {
        if (l.c[k] == 0) continue;
        int e[3] = {0, 0, 0};
        e[i] += 1;
        e[j] += 1;
        e[k] += 1;
        acc[cubic_index(e[0], e[1], e[2])] += qc * l.c[k];
      }
    }
  }
  return TernaryCubic(acc);
}

}  // namespace quadell
