#include "quadell/pencil.hpp"

#include "quadell/errors.hpp"

namespace quadell {

Rational TranslatedPencil::quadric1_at(const std::array<Rational, 4>& y) const {
  std::array<Rational, 3> y3 = {y[0], y[1], y[2]};
  return q1.evaluate(y3) + l1.evaluate(y3) * y[3];
}

Rational TranslatedPencil::quadric2_at(const std::array<Rational, 4>& y) const {
  std::array<Rational, 3> y3 = {y[0], y[1], y[2]};
  return q2.evaluate(y3) + l2.evaluate(y3) * y[3];
}

bool TranslatedPencil::on_intersection(const ProjectivePoint3& p) const {
  auto y = p.rational_coords();
  return quadric1_at(y) == 0 && quadric2_at(y) == 0;
}

std::pair<LinearMap4, TranslatedPencil> translate_base_point(const QuadricForm& a,
                                                             const QuadricForm& b,
                                                             const ProjectivePoint3& x) {
  if (a.evaluate(x) != 0 || b.evaluate(x) != 0)
    throw Error(ErrorKind::PointNotOnIntersection, "translate_base_point", x.str());

  // re-index so the slot-3 coordinate is nonzero, then scale it to 1
  std::array<std::size_t, 4> target = {0, 1, 2, 3};
  if (x[3] == 0) {
    std::size_t j = 2;
    while (x[j] == 0) --j;  // some coordinate is nonzero by the point invariant
    std::swap(target[j], target[3]);
  }
  LinearMap4 perm = LinearMap4::permutation(target);
  auto xp = perm.apply_raw(x.rational_coords());
  for (auto& c : xp) c /= xp[3];

  LinearMap4::Matrix t{};
  for (std::size_t i = 0; i < 4; ++i) t[i][i] = 1;
  for (std::size_t i = 0; i < 3; ++i) t[i][3] = -xp[i];
  LinearMap4 forward = LinearMap4(t).compose(perm);

  // transformed matrices Q^T A Q with Q = forward^{-1}
  LinearMap4 back = forward.inverse();
  auto conjugate = [&](const QuadricForm& f) {
    std::array<std::array<Rational, 4>, 4> out{};
    const auto& q = back.matrix();
    for (std::size_t r = 0; r < 4; ++r)
      for (std::size_t c = 0; c < 4; ++c) {
        Rational s = 0;
        for (std::size_t i = 0; i < 4; ++i)
          for (std::size_t j = 0; j < 4; ++j) s += q[i][r] * f.at(i, j) * q[j][c];
        out[r][c] = s;
      }
    return out;
  };
  auto ma = conjugate(a), mb = conjugate(b);

  TranslatedPencil pencil;
  for (std::size_t i = 0; i < 3; ++i) {
    pencil.u[i] = ma[i][3];
    pencil.v[i] = mb[i][3];
    pencil.l1.c[i] = 2 * ma[i][3];
    pencil.l2.c[i] = 2 * mb[i][3];
    for (std::size_t j = i; j < 3; ++j) {
      pencil.q1.add(i, j, i == j ? ma[i][j] : 2 * ma[i][j]);
      pencil.q2.add(i, j, i == j ? mb[i][j] : 2 * mb[i][j]);
    }
  }
  return {forward, pencil};
}

TernaryCubic build_cubic(const TranslatedPencil& pencil) {
  TernaryCubic lhs = pencil.q2 * pencil.l1;
  TernaryCubic rhs = pencil.q1 * pencil.l2;
  std::array<Rational, 10> diff;
  for (std::size_t t = 0; t < 10; ++t) diff[t] = lhs.coeffs()[t] - rhs.coeffs()[t];
  TernaryCubic c{diff};
  if (c.is_zero()) throw Error(ErrorKind::DegenerateIntersection, "build_cubic");
  return c.primitive();
}

SplitData split_pencil(const TranslatedPencil& pencil) {
  SplitData s;
  auto fill = [](const QuadraticForm3& q, const std::array<Rational, 3>& w, LinearForm4& f1,
                 QuadraticForm4& f2, LinearForm4& g0, LinearForm4& g1) {
    // q + 2(w.Y) Y3 = f1 * Y2 + f2 with f2 free of Y2
    f1.c = {q.at(0, 2), q.at(1, 2), q.at(2, 2), 2 * w[2]};
    f2.add(0, 0, q.at(0, 0));
    f2.add(1, 1, q.at(1, 1));
    f2.add(0, 1, q.at(0, 1));
    f2.add(0, 3, 2 * w[0]);
    f2.add(1, 3, 2 * w[1]);
    // f2 = g0 * Y0 + g1 * Y1, the cross term split between the two
    g0.c = {q.at(0, 0), q.at(0, 1) / 2, Rational(0), 2 * w[0]};
    g1.c = {q.at(0, 1) / 2, q.at(1, 1), Rational(0), 2 * w[1]};
  };
  fill(pencil.q1, pencil.u, s.alpha1, s.alpha2, s.gamma0, s.gamma1);
  fill(pencil.q2, pencil.v, s.beta1, s.beta2, s.delta0, s.delta1);
  return s;
}

ProjectivePoint2 base_point_image(const TranslatedPencil& pencil) {
  const auto& u = pencil.u;
  const auto& v = pencil.v;
  std::array<Rational, 3> z = {u[1] * v[2] - u[2] * v[1], u[2] * v[0] - u[0] * v[2],
                               u[0] * v[1] - u[1] * v[0]};
  return normalize_point(z);
}

ProjectivePoint2 phi(const TranslatedPencil& pencil, const ProjectivePoint3& p) {
  if (!pencil.on_intersection(p))
    throw Error(ErrorKind::PointNotOnIntersection, "phi", p.str());
  auto y = p.rational_coords();
  if (y[0] != 0 || y[1] != 0 || y[2] != 0)
    return normalize_point(std::array<Rational, 3>{y[0], y[1], y[2]});
  // plain projection vanishes only at (0,0,0,1); use the split closed form
  SplitData s = split_pencil(pencil);
  Rational a1 = s.alpha1.evaluate(y), b1 = s.beta1.evaluate(y);
  Rational g0 = s.gamma0.evaluate(y), g1 = s.gamma1.evaluate(y);
  Rational d0 = s.delta0.evaluate(y), d1 = s.delta1.evaluate(y);
  std::array<Rational, 3> img = {a1 * d1 - b1 * g1, b1 * g0 - a1 * d0, g1 * d0 - d1 * g0};
  if (img[0] == 0 && img[1] == 0 && img[2] == 0)
    throw Error(ErrorKind::MapUndefined, "phi", "degenerate pencil at base point");
  return normalize_point(img);
}

ProjectivePoint3 psi(const TranslatedPencil& pencil, const ProjectivePoint2& p) {
  TernaryCubic c = build_cubic(pencil);
  if (!c.vanishes_at(p)) throw Error(ErrorKind::NotOnCurve, "psi", p.str());
  auto y = p.rational_coords();
  Rational l1 = pencil.l1.evaluate(y), q1 = pencil.q1.evaluate(y);
  Rational l2 = pencil.l2.evaluate(y), q2 = pencil.q2.evaluate(y);
  // representation via Q1 when it does not degenerate, else via Q2;
  // l_i = 0 forces p = z on the cubic, where -q_i still provides the lift
  if (l1 != 0 || q1 != 0)
    return normalize_point(std::array<Rational, 4>{l1 * y[0], l1 * y[1], l1 * y[2], -q1});
  if (l2 != 0 || q2 != 0)
    return normalize_point(std::array<Rational, 4>{l2 * y[0], l2 * y[1], l2 * y[2], -q2});
  // l1 = l2 = q1 = q2 = 0: the intersection contains the whole line over p
  throw Error(ErrorKind::DegenerateIntersection, "psi", p.str());
}

QuadricStage quadric_to_cubic(const QuadricForm& a, const QuadricForm& b,
                              const ProjectivePoint3& x) {
  auto [forward, pencil] = translate_base_point(a, b, x);
  TernaryCubic cubic = build_cubic(pencil);
  return QuadricStage{forward, pencil, cubic, base_point_image(pencil)};
}

}  // namespace quadell
