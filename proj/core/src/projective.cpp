#include "quadell/projective.hpp"

#include "quadell/errors.hpp"

namespace quadell {

namespace {

template <std::size_t N>
std::array<Int, N> canonicalize(std::array<Rational, N> v) {
  Int lcm = 1;
  for (auto& x : v) mpz_lcm(lcm.get_mpz_t(), lcm.get_mpz_t(), den(x).get_mpz_t());
  std::array<Int, N> ints;
  Int g = 0;
  for (std::size_t i = 0; i < N; ++i) {
    ints[i] = num(v[i]) * (lcm / den(v[i]));
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), ints[i].get_mpz_t());
  }
  if (g == 0) throw Error(ErrorKind::ZeroVector, "normalize_point");
  for (auto& x : ints) x /= g;
  for (auto& x : ints) {
    if (x != 0) {
      if (x < 0)
        for (auto& y : ints) y = -y;
      break;
    }
  }
  return ints;
}

}  // namespace

template <std::size_t N>
ProjectivePoint<N>::ProjectivePoint(const std::array<Int, N>& coords) {
  std::array<Rational, N> r;
  for (std::size_t i = 0; i < N; ++i) r[i] = Rational(coords[i]);
  c_ = canonicalize(r);
}

template <std::size_t N>
ProjectivePoint<N>::ProjectivePoint(const std::array<Rational, N>& coords) {
  c_ = canonicalize(coords);
}

template <std::size_t N>
std::array<Rational, N> ProjectivePoint<N>::rational_coords() const {
  std::array<Rational, N> r;
  for (std::size_t i = 0; i < N; ++i) r[i] = Rational(c_[i]);
  return r;
}

template <std::size_t N>
std::string ProjectivePoint<N>::str() const {
  std::string s = "(";
  for (std::size_t i = 0; i < N; ++i) {
    if (i) s += ", ";
    s += c_[i].get_str();
  }
  return s + ")";
}

template class ProjectivePoint<3>;
template class ProjectivePoint<4>;

ProjectivePoint2 normalize_point(const std::array<Rational, 3>& raw) {
  return ProjectivePoint2(raw);
}

ProjectivePoint3 normalize_point(const std::array<Rational, 4>& raw) {
  return ProjectivePoint3(raw);
}

}  // namespace quadell
