#include "quadell/sampling.hpp"

#include <algorithm>
#include <random>
#include <set>

#include "quadell/errors.hpp"
#include "quadell/integer_math.hpp"

namespace quadell {

namespace {

/* Coefficients of C(s*P + t*Q) as a binary cubic c3 s^3 + c2 s^2 t +
 * c1 s t^2 + c0 t^3. */
std::array<Rational, 4> restrict_to_line(const TernaryCubic& c, const std::array<Rational, 3>& p,
                                         const std::array<Rational, 3>& q) {
  std::array<Rational, 4> cs{};  // index = degree in s
  for (std::size_t t = 0; t < 10; ++t) {
    const Rational& coeff = c.coeffs()[t];
    if (coeff == 0) continue;
    auto [i, j, k] = kCubicMonomials[t];
    std::array<Rational, 4> acc{};
    acc[0] = 1;
    int deg = 0;
    auto mul = [&](const Rational& ps, const Rational& qt, int times) {
      for (int r = 0; r < times; ++r) {
        std::array<Rational, 4> next{};
        for (int d = 0; d <= deg; ++d) {
          next[d + 1] += acc[d] * ps;
          next[d] += acc[d] * qt;
        }
        acc = next;
        ++deg;
      }
    };
    mul(p[0], q[0], i);
    mul(p[1], q[1], j);
    mul(p[2], q[2], k);
    for (int d = 0; d <= 3; ++d) cs[d] += coeff * acc[d];
  }
  return cs;
}

std::optional<ProjectivePoint2> point_on_line(const std::array<Rational, 3>& p,
                                              const std::array<Rational, 3>& q, const Rational& s,
                                              const Rational& t) {
  std::array<Rational, 3> r = {p[0] * s + q[0] * t, p[1] * s + q[1] * t, p[2] * s + q[2] * t};
  if (r[0] == 0 && r[1] == 0 && r[2] == 0) return std::nullopt;
  return normalize_point(r);
}

unsigned point_bits(const ProjectivePoint2& p) {
  std::size_t best = 0;
  for (const auto& c : p.coords()) best = std::max(best, mpz_sizeinbase(c.get_mpz_t(), 2));
  return static_cast<unsigned>(best);
}

}  // namespace

std::optional<ProjectivePoint2> chord_third_point(const TernaryCubic& c,
                                                  const ProjectivePoint2& p,
                                                  const ProjectivePoint2& q) {
  if (p == q) return tangent_third_point(c, p);
  auto pv = p.rational_coords(), qv = q.rational_coords();
  auto cs = restrict_to_line(c, pv, qv);
  if (cs[3] != 0 || cs[0] != 0)
    throw Error(ErrorKind::NotOnCurve, "chord_third_point");
  // residual linear factor c2 s + c1 t
  if (cs[2] == 0 && cs[1] == 0) return std::nullopt;
  return point_on_line(pv, qv, -cs[1], cs[2]);
}

std::optional<ProjectivePoint2> tangent_third_point(const TernaryCubic& c,
                                                    const ProjectivePoint2& p) {
  auto pv = p.rational_coords();
  auto grad = c.gradient(pv);
  if (grad[0] == 0 && grad[1] == 0 && grad[2] == 0) return std::nullopt;
  // a second point of the tangent line grad . X = 0
  std::size_t i0 = (grad[0] != 0) ? 0 : (grad[1] != 0) ? 1 : 2;
  for (std::size_t j = 0; j < 3; ++j) {
    if (j == i0) continue;
    std::array<Rational, 3> q{};
    q[j] = grad[i0];
    q[i0] = -grad[j];
    ProjectivePoint2 qp = normalize_point(q);
    if (qp == p) continue;
    auto cs = restrict_to_line(c, pv, q);
    if (cs[3] != 0) throw Error(ErrorKind::NotOnCurve, "tangent_third_point");
    if (cs[2] != 0) continue;  // gradient.Q == 0 makes this vanish identically
    if (cs[1] == 0) return std::nullopt;  // flex: the tangent meets only p
    return point_on_line(pv, q, -cs[0], cs[1]);
  }
  return std::nullopt;
}

std::vector<ProjectivePoint2> sample_cubic_points(const TernaryCubic& c,
                                                  const std::vector<ProjectivePoint2>& seeds,
                                                  const SampleOptions& opts) {
  auto cmp = [](const ProjectivePoint2& a, const ProjectivePoint2& b) {
    return a.coords() < b.coords();
  };
  std::set<ProjectivePoint2, decltype(cmp)> known(cmp);
  std::vector<ProjectivePoint2> out;
  auto add = [&](const ProjectivePoint2& p) {
    if (out.size() >= opts.want) return false;
    if (point_bits(p) > opts.max_coordinate_bits) return false;
    if (!c.vanishes_at(p)) return false;
    if (!known.insert(p).second) return false;
    out.push_back(p);
    return true;
  };
  for (const auto& s : seeds) add(s);

  // tangent images of everything known, then chords of all pairs, repeated
  bool grew = true;
  while (grew && out.size() < opts.want) {
    grew = false;
    for (std::size_t i = 0; i < out.size() && out.size() < opts.want; ++i) {
      if (auto t = tangent_third_point(c, out[i]))
        if (add(*t)) grew = true;
    }
    for (std::size_t i = 0; i < out.size() && out.size() < opts.want; ++i)
      for (std::size_t j = i + 1; j < out.size() && out.size() < opts.want; ++j)
        if (auto t = chord_third_point(c, out[i], out[j]))
          if (add(*t)) grew = true;
  }

  // random rational lines through known points; kept when the residual
  // quadratic has a square discriminant
  std::mt19937_64 rng(opts.seed);
  std::uniform_int_distribution<long> coeff(-opts.direction_height, opts.direction_height);
  for (unsigned attempt = 0; attempt < opts.max_line_attempts && out.size() < opts.want;
       ++attempt) {
    if (out.empty()) break;
    const ProjectivePoint2& base = out[attempt % out.size()];
    std::array<Rational, 3> dir = {Rational(coeff(rng)), Rational(coeff(rng)),
                                   Rational(coeff(rng))};
    if (dir[0] == 0 && dir[1] == 0 && dir[2] == 0) continue;
    auto bv = base.rational_coords();
    auto cs = restrict_to_line(c, bv, dir);
    if (cs[3] != 0) continue;
    // residual quadratic c2 s^2 + c1 s t + c0 t^2
    if (cs[2] == 0) continue;
    Rational disc = cs[1] * cs[1] - 4 * cs[2] * cs[0];
    auto root = exact_sqrt(disc);
    if (!root) continue;
    for (int sign : {1, -1}) {
      Rational s = (-cs[1] + sign * *root);
      if (auto p = point_on_line(bv, dir, s, 2 * cs[2])) add(*p);
    }
  }
  return out;
}

}  // namespace quadell
