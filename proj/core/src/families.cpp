#include "quadell/families.hpp"

#include "quadell/errors.hpp"
#include "quadell/integer_math.hpp"

namespace quadell {

EulerInstance::EulerInstance(Int m, Int n) : M(std::move(m)), N(std::move(n)) {
  if (M == 0 || N == 0 || M == N)
    throw Error(ErrorKind::InvalidArgument, "EulerInstance", "need M != N, both nonzero");
}

KlmInstance::KlmInstance(Int k_, Int l_, Int m_)
    : k(std::move(k_)), l(std::move(l_)), m(std::move(m_)) {
  if (k < 1 || l < 1 || m < 1)
    throw Error(ErrorKind::InvalidArgument, "KlmInstance", "need k, l, m >= 1");
}

FamilyQuadrics euler_quadrics(const EulerInstance& inst) {
  QuadricForm a = QuadricForm::diagonal({Rational(inst.M), Rational(1), Rational(-1), Rational(0)});
  QuadricForm b = QuadricForm::diagonal({Rational(inst.N), Rational(1), Rational(0), Rational(-1)});
  return FamilyQuadrics{a, b, ProjectivePoint3(std::array<Int, 4>{0, 1, 1, 1})};
}

EulerCurve euler_curve(const EulerInstance& inst) {
  // y^2 = x(x - M)(x - (M - N))
  Int a2 = -(2 * inst.M - inst.N);
  Int a4 = inst.M * (inst.M - inst.N);
  ReducedCurve red = reduce_monic_curve(a2, a4, Int(0));
  WeierstrassCurve w;
  w.a2 = Rational(red.a2);
  w.a4 = Rational(red.a4);
  w.a6 = Rational(red.a6);
  return EulerCurve{w, red.u};
}

namespace {

ProjectivePoint2 affine_scaled(const Rational& x, const Rational& y, const Rational& s) {
  return normalize_point(std::array<Rational, 3>{x / (s * s), y / (s * s * s), Rational(1)});
}

}  // namespace

std::array<LabeledPoint, 4> euler_trivial_images(const EulerInstance& inst) {
  Rational s(euler_curve(inst).scale);
  const Int &M = inst.M, &N = inst.N;
  return {{
      {ProjectivePoint2(std::array<Int, 3>{0, 1, 0}), "infinity"},
      {affine_scaled(Rational(M - N), Rational(0), s), "2-torsion"},
      {ProjectivePoint2(std::array<Int, 3>{0, 0, 1}), "2-torsion"},
      {affine_scaled(Rational(M), Rational(0), s), "2-torsion"},
  }};
}

FamilyQuadrics klm_quadrics(const KlmInstance& inst) {
  const Int &k = inst.k, &l = inst.l, &m = inst.m;
  QuadricForm a = QuadricForm::diagonal({Rational(k + l), Rational(-k), Rational(-l), Rational(0)});
  QuadricForm b = QuadricForm::diagonal({Rational(-m), Rational(m + l), Rational(0), Rational(-l)});
  return FamilyQuadrics{a, b, ProjectivePoint3(std::array<Int, 4>{1, 1, 1, 1})};
}

ProjectivePoint2 klm_base_cubic_point(const KlmInstance& inst) {
  return ProjectivePoint2(std::array<Int, 3>{inst.l + inst.m, inst.m, inst.k + inst.l + inst.m});
}

KlmCurve klm_curve(const KlmInstance& inst) {
  const Int &k = inst.k, &l = inst.l, &m = inst.m;
  // normal form ahead of the root shift: roots -(k-m)^2, -(k+m)^2, -(k+2l+m)^2
  Int a2 = 3 * k * k + 4 * k * l + 4 * l * l + 2 * k * m + 4 * l * m + 3 * m * m;
  Int a4 = 3 * k * k * k * k + 8 * k * k * k * l + 8 * k * k * l * l + 4 * k * k * k * m +
           8 * k * k * l * m + 2 * k * k * m * m + 8 * k * l * m * m + 8 * l * l * m * m +
           4 * k * m * m * m + 8 * l * m * m * m + 3 * m * m * m * m;
  Int a6 = (k - m) * (k + m) * (k + 2 * l + m);
  a6 = a6 * a6;
  ReducedCurve red = reduce_monic_curve(a2, a4, a6);
  WeierstrassCurve w;
  w.a2 = Rational(red.a2);
  w.a4 = Rational(red.a4);
  w.a6 = Rational(red.a6);
  auto s8 = step8_shift_roots(w);
  if (!s8) throw Error(ErrorKind::SingularCurve, "klm_curve", "closed form failed to split");
  // net rescaling against the literal y^2 = x(x+km)(x+(k+l)(l+m))
  Rational s2 = Rational(k * m) / Rational(s8->split.A);
  auto s = exact_sqrt(s2);
  if (!s) throw Error(ErrorKind::SingularCurve, "klm_curve", "non-square model rescaling");
  return KlmCurve{s8->split, *s};
}

std::array<LabeledPoint, 8> klm_trivial_images(const KlmInstance& inst) {
  const Int &k = inst.k, &l = inst.l, &m = inst.m;
  Rational s = klm_curve(inst).scale;
  auto pt = [&](const Int& x, const Int& y) {
    return affine_scaled(Rational(x), Rational(y), s);
  };
  return {{
      {ProjectivePoint2(std::array<Int, 3>{0, 1, 0}), "infinity"},
      {pt(m * (l + m), m * (l + m) * (k + l + m)), ""},
      {pt(k * (k + l), -k * (k + l) * (k + l + m)), ""},
      {ProjectivePoint2(std::array<Int, 3>{0, 0, 1}), "2-torsion"},
      {pt(-m * (k + l), -m * l * (k + l)), ""},
      {pt(-(k + l) * (l + m), Int(0)), "2-torsion"},
      {pt(-k * m, Int(0)), "2-torsion"},
      {pt(-k * (l + m), k * l * (l + m)), ""},
  }};
}

QuadraticComposite klm_composite_map(const KlmInstance& inst) {
  const Int &k = inst.k, &l = inst.l, &m = inst.m;
  const Int kl = k + l, lm = l + m, klm = k + l + m, km_d = k - m, km_s = k + m;
  QuadraticComposite out;
  auto set = [](QuadraticForm4& f, std::size_t i, std::size_t j, const Int& v) {
    f.add(i, j, Rational(v));
  };
  set(out.x, 0, 0, -k * m * m * kl * kl * lm * klm * klm);
  set(out.x, 0, 1, k * m * kl * lm * klm * klm * (k * l + 2 * k * m + l * m));
  set(out.x, 0, 2, -k * l * m * m * kl * km_d * lm * klm);
  set(out.x, 0, 3, -k * l * m * km_d * kl * kl * lm * klm);
  set(out.x, 1, 1, -k * k * m * kl * lm * lm * klm * klm);
  set(out.x, 1, 2, k * l * m * kl * km_d * lm * lm * klm);
  set(out.x, 1, 3, k * k * m * l * kl * km_d * lm * klm);
  set(out.x, 2, 2, k * l * l * m * m * kl * lm * lm);
  set(out.x, 2, 3, -k * l * l * m * kl * lm * (k * k + k * l + l * m + m * m));
  set(out.x, 3, 3, k * k * l * l * m * kl * kl * lm);

  set(out.y, 0, 0, k * l * m * m * kl * kl * lm * klm * klm);
  set(out.y, 0, 1, k * l * l * m * kl * km_d * lm * klm * klm);
  set(out.y, 0, 2, -k * k * l * m * m * kl * lm * klm * (k + 2 * l + m));
  set(out.y, 0, 3, -k * l * m * kl * kl * km_s * lm * lm * klm);
  set(out.y, 1, 1, -k * k * l * m * kl * lm * lm * klm * klm);
  set(out.y, 1, 2, k * l * m * kl * kl * km_s * lm * lm * klm);
  set(out.y, 1, 3, k * k * l * m * m * kl * lm * klm * (k + 2 * l + m));
  set(out.y, 2, 2, -k * l * l * m * m * kl * lm * lm * klm);
  set(out.y, 2, 3, -k * l * l * m * kl * km_d * lm * klm * klm);
  set(out.y, 3, 3, k * k * l * l * m * kl * kl * lm * klm);

  set(out.z, 0, 0, m * m * kl * kl * klm * klm);
  set(out.z, 0, 1, -2 * k * m * kl * lm * klm * klm);
  set(out.z, 0, 2, -2 * l * m * m * kl * lm * klm);
  set(out.z, 0, 3, 2 * k * l * m * kl * kl * klm);
  set(out.z, 1, 1, k * k * lm * lm * klm * klm);
  set(out.z, 1, 2, 2 * k * l * m * lm * lm * klm);
  set(out.z, 1, 3, -2 * k * k * l * kl * lm * klm);
  set(out.z, 2, 2, l * l * m * m * lm * lm);
  set(out.z, 2, 3, -2 * k * l * l * m * kl * lm);
  set(out.z, 3, 3, k * k * l * l * kl * kl);
  return out;
}

Rational progression_step_size(const Rational& alpha, const Rational& beta,
                               const Rational& gamma, const Rational& delta, const Int& k,
                               const Int& l, const Int& m) {
  if (k < 1 || l < 1 || m < 1)
    throw Error(ErrorKind::InvalidArgument, "progression_step_size", "need k, l, m >= 1");
  Rational s1 = (beta * beta - alpha * alpha) / Rational(k);
  Rational s2 = (gamma * gamma - beta * beta) / Rational(l);
  Rational s3 = (delta * delta - gamma * gamma) / Rational(m);
  if (s1 != s2 || s2 != s3)
    throw Error(ErrorKind::NotAProgression, "progression_step_size");
  return s1;
}

}  // namespace quadell
