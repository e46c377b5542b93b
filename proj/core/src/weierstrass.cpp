#include "quadell/weierstrass.hpp"

#include <algorithm>

#include "quadell/errors.hpp"
#include "quadell/integer_math.hpp"

namespace quadell {

namespace {

const ProjectivePoint2 kP100{std::array<Int, 3>{1, 0, 0}};
const ProjectivePoint2 kP010{std::array<Int, 3>{0, 1, 0}};

/* Primitive integer pair with the sign pattern of the input kept. The
 * pair parametrizes a coordinate axis, so flipping its sign would flip an
 * axis and change every later table by a non-projective factor; preserving
 * the raw sign is what keeps the chain aligned with the worked tables. */
std::pair<Int, Int> primitive_pair(const Rational& a, const Rational& b) {
  Int lcm;
  mpz_lcm(lcm.get_mpz_t(), den(a).get_mpz_t(), den(b).get_mpz_t());
  Int x = num(a) * (lcm / den(a));
  Int y = num(b) * (lcm / den(b));
  Int g;
  mpz_gcd(g.get_mpz_t(), x.get_mpz_t(), y.get_mpz_t());
  if (g != 0) {
    x /= g;
    y /= g;
  }
  return {x, y};
}

StepRecord make_linear_record(std::string name, const TernaryCubic& before, LinearMap3 fwd,
                              const TernaryCubic& exact, const ProjectivePoint2& pt_before) {
  StepRecord r;
  r.name = std::move(name);
  r.kind = StepKind::Linear;
  r.cubic_before = before;
  r.forward = fwd;
  r.inverse = fwd.inverse();
  r.cubic_exact = exact;
  r.cubic_after = exact.primitive();
  r.point_after = fwd.apply(pt_before);
  if (!r.cubic_after.vanishes_at(r.point_after))
    throw Error(ErrorKind::NotOnCurve, r.name, "transported point left the curve");
  return r;
}

void require_shape(const TernaryCubic& c, std::initializer_list<std::size_t> allowed,
                   const std::string& where) {
  for (std::size_t t = 0; t < 10; ++t) {
    if (c.coeffs()[t] == 0) continue;
    if (std::find(allowed.begin(), allowed.end(), t) == allowed.end())
      throw Error(ErrorKind::InvalidArgument, where, "unexpected monomial in cubic");
  }
}

}  // namespace

Rational WeierstrassCurve::discriminant() const {
  return 18 * a2 * a4 * a6 - 4 * a2 * a2 * a2 * a6 + a2 * a2 * a4 * a4 - 4 * a4 * a4 * a4 -
         27 * a6 * a6;
}

TernaryCubic WeierstrassCurve::homogeneous() const {
  TernaryCubic c;
  c.set(3, 0, 0, Rational(-1));
  c.set(2, 0, 1, -a2);
  c.set(1, 0, 2, -a4);
  c.set(0, 0, 3, -a6);
  c.set(0, 2, 1, Rational(1));
  c.set(1, 1, 1, a1);
  c.set(0, 1, 2, a3);
  return c;
}

namespace {

std::string monomial_term(const Rational& coeff, const std::string& mono, bool lead) {
  if (coeff == 0) return "";
  std::string sign = (coeff < 0) ? (lead ? "-" : " - ") : (lead ? "" : " + ");
  Rational mag = abs(coeff);
  std::string c = (mag == 1 && !mono.empty()) ? "" : to_string(mag);
  if (!c.empty() && !mono.empty()) c += "*";
  return sign + c + mono;
}

}  // namespace

std::string WeierstrassCurve::equation_text() const {
  std::string lhs = "y^2";
  if (a1 != 0) lhs += monomial_term(a1, "x*y", false);
  if (a3 != 0) lhs += monomial_term(a3, "y", false);
  std::string rhs = "x^3";
  rhs += monomial_term(a2, "x^2", false);
  rhs += monomial_term(a4, "x", false);
  rhs += monomial_term(a6, "", false);
  return lhs + " = " + rhs;
}

WeierstrassCurve SplitForm::curve() const {
  WeierstrassCurve w;
  w.a2 = Rational(A + B);
  w.a4 = Rational(A * B);
  return w;
}

std::string SplitForm::equation_text() const {
  auto factor = [](const Int& r) {
    if (r == 0) return std::string("x");
    if (r > 0) return "(x+" + r.get_str() + ")";
    return "(x-" + Int(-r).get_str() + ")";
  };
  std::string s = "y^2 = ";
  s += factor(0);
  s += factor(A);
  s += factor(B);
  return s;
}

const StepRecord* CubicChain::find(const std::string& name) const {
  for (const auto& s : steps)
    if (s.name == name) return &s;
  return nullptr;
}

const TernaryCubic* CubicChain::stage(int r) const {
  static const char* names[] = {"",             "translate",       "tangent",
                                "second-intersection", "tangent-at-q",
                                "quadratic",    "complete-square", "normal-form",
                                "shift-roots"};
  if (r < 0 || r > 8) return nullptr;
  if (r == 0) return steps.empty() ? nullptr : &steps.front().cubic_before;
  if (r == 5 && inflection_shortcut) {
    const StepRecord* s = find("xy-swap");
    return s ? &s->cubic_after : nullptr;
  }
  const StepRecord* s = find(names[r]);
  return s ? &s->cubic_after : nullptr;
}

std::vector<StepRecord> step1_translate(const TernaryCubic& c0, const ProjectivePoint2& p) {
  if (!c0.vanishes_at(p)) throw Error(ErrorKind::PointNotOnCubic, "step1", p.str());
  std::vector<StepRecord> out;
  TernaryCubic c = c0;
  ProjectivePoint2 pt = p;
  if (pt[0] == 0) {
    // move the first nonzero coordinate into the X slot
    std::array<std::size_t, 3> target = {0, 1, 2};
    std::size_t j = (pt[1] != 0) ? 1 : 2;
    std::swap(target[0], target[j]);
    LinearMap3 perm = LinearMap3::permutation(target);
    out.push_back(make_linear_record("reindex", c, perm, substitute(c, perm.inverse()), pt));
    c = out.back().cubic_after;
    pt = out.back().point_after;
  }
  auto pr = pt.rational_coords();
  Rational py = pr[1] / pr[0], pz = pr[2] / pr[0];
  LinearMap3 fwd(LinearMap3::Matrix{{{Rational(1), Rational(0), Rational(0)},
                                     {-py, Rational(1), Rational(0)},
                                     {-pz, Rational(0), Rational(1)}}});
  out.push_back(make_linear_record("translate", c, fwd, substitute(c, fwd.inverse()), pt));
  if (out.back().point_after != kP100)
    throw Error(ErrorKind::MapUndefined, "step1", "translation missed (1,0,0)");
  return out;
}

Step2Result step2_align_tangent(const TernaryCubic& c1_in) {
  Step2Result res;
  TernaryCubic c1 = c1_in;
  if (c1.at(3, 0, 0) != 0) throw Error(ErrorKind::PointNotOnCubic, "step2", "(1,0,0)");
  if (c1.at(2, 1, 0) == 0 && c1.at(2, 0, 1) == 0)
    throw Error(ErrorKind::SingularPoint, "step2", "no tangent at (1,0,0)");
  if (c1.at(2, 0, 1) == 0) {
    LinearMap3 swap = LinearMap3::permutation({0, 2, 1});
    res.yz_swap = make_linear_record("yz-swap", c1, swap, substitute(c1, swap), kP100);
    c1 = res.yz_swap->cubic_after;
  }
  // tangent at (1,0,0): g_y Y + g_z Z = 0
  auto [gy, gz] = primitive_pair(c1.at(2, 1, 0), c1.at(2, 0, 1));
  LinearMap3 fwd(LinearMap3::Matrix{{{Rational(1), Rational(0), Rational(0)},
                                     {Rational(0), Rational(1), Rational(0)},
                                     {Rational(0), Rational(gy), Rational(gz)}}});
  // the g_z^3 factor keeps the exact table on the homogeneous form of the
  // coefficient formulas rather than on the raw substitution
  TernaryCubic exact = substitute(c1, fwd.inverse()).scaled(Rational(gz * gz * gz));
  res.align = make_linear_record("tangent", c1, fwd, exact, kP100);
  res.inflection_shortcut = (res.align.cubic_after.at(1, 2, 0) == 0);
  return res;
}

ProjectivePoint2 tangent_second_intersection(const TernaryCubic& c2) {
  // (Gamma_030, -Gamma_120, 0), kept with the table's own signs
  auto [qx, qy] = primitive_pair(c2.at(0, 3, 0), -c2.at(1, 2, 0));
  return ProjectivePoint2(std::array<Int, 3>{qx, qy, 0});
}

StepRecord step3_move_second_intersection(const TernaryCubic& c2) {
  if (c2.at(3, 0, 0) != 0 || c2.at(2, 1, 0) != 0)
    throw Error(ErrorKind::InvalidArgument, "step3", "input not in step-2 shape");
  if (c2.at(1, 2, 0) == 0)
    throw Error(ErrorKind::InflectionShouldHaveShortcut, "step3");
  auto [qx, qy] = primitive_pair(c2.at(0, 3, 0), -c2.at(1, 2, 0));
  if (qy == 0) throw Error(ErrorKind::NotOnCurve, "step3", "second intersection has q_y = 0");
  LinearMap3 fwd(LinearMap3::Matrix{{{Rational(-qy), Rational(qx), Rational(0)},
                                     {Rational(0), Rational(1), Rational(0)},
                                     {Rational(0), Rational(0), Rational(1)}}});
  TernaryCubic exact = substitute(c2, fwd.inverse()).scaled(Rational(qy * qy));
  StepRecord r = make_linear_record("second-intersection", c2, fwd, exact, kP100);
  // characterization of C3
  if (r.cubic_after.at(3, 0, 0) != 0 || r.cubic_after.at(0, 3, 0) != 0 ||
      r.cubic_after.at(2, 1, 0) != 0 || r.cubic_after.at(1, 2, 0) == 0)
    throw Error(ErrorKind::MapUndefined, "step3", "postcondition failed");
  return r;
}

StepRecord step4_align_tangent_at_q(const TernaryCubic& c3) {
  auto [hx, hz] = primitive_pair(c3.at(1, 2, 0), c3.at(0, 2, 1));
  if (hx == 0) throw Error(ErrorKind::InvalidArgument, "step4", "tangent at (0,1,0) missing");
  LinearMap3 fwd(LinearMap3::Matrix{{{Rational(hx), Rational(0), Rational(hz)},
                                     {Rational(0), Rational(1), Rational(0)},
                                     {Rational(0), Rational(0), Rational(1)}}});
  TernaryCubic exact = substitute(c3, fwd.inverse()).scaled(Rational(hx * hx));
  StepRecord r = make_linear_record("tangent-at-q", c3, fwd, exact, kP100);
  if (r.cubic_after.at(0, 2, 1) != 0)
    throw Error(ErrorKind::MapUndefined, "step4", "tangent at (0,1,0) not aligned");
  return r;
}

StepRecord step5_quadratic(const TernaryCubic& c4) {
  require_shape(c4,
                {cubic_index(2, 0, 1), cubic_index(1, 2, 0), cubic_index(1, 1, 1),
                 cubic_index(1, 0, 2), cubic_index(0, 1, 2), cubic_index(0, 0, 3)},
                "step5");
  // multiply by X Z^2 and substitute (X,Y,Z) = (X4 Z4, X4 Y4, Z4^2): pure relabeling
  TernaryCubic c5;
  c5.set(3, 0, 0, c4.at(2, 0, 1));
  c5.set(2, 0, 1, c4.at(1, 0, 2));
  c5.set(1, 1, 1, c4.at(1, 1, 1));
  c5.set(1, 0, 2, c4.at(0, 0, 3));
  c5.set(0, 2, 1, c4.at(1, 2, 0));
  c5.set(0, 1, 2, c4.at(0, 1, 2));
  if (c5.at(0, 2, 1) == 0) throw Error(ErrorKind::SingularCurve, "step5", "Y^2 Z term vanished");
  StepRecord r;
  r.name = "quadratic";
  r.kind = StepKind::Quadratic;
  r.cubic_before = c4;
  r.cubic_exact = c5;
  r.cubic_after = c5.primitive();
  r.point_after = rho_at(c4, kP100);
  if (!r.cubic_after.vanishes_at(r.point_after))
    throw Error(ErrorKind::NotOnCurve, "step5", "transported point left the curve");
  return r;
}

ProjectivePoint2 rho_at(const TernaryCubic& c4, const ProjectivePoint2& p) {
  if (!c4.vanishes_at(p)) throw Error(ErrorKind::NotOnCurve, "rho_at", p.str());
  auto v = p.rational_coords();
  const Rational &x = v[0], &y = v[1], &z = v[2];
  std::array<Rational, 3> img = {x * z, x * y, z * z};
  if (img[0] == 0 && img[1] == 0 && img[2] == 0) {
    Rational mu = c4.at(1, 2, 0) * y + c4.at(1, 1, 1) * z;
    img = {mu * x,
           -(c4.at(2, 0, 1) * x * x + c4.at(1, 0, 2) * x * z + c4.at(0, 1, 2) * y * z +
             c4.at(0, 0, 3) * z * z),
           mu * z};
  }
  if (img[0] == 0 && img[1] == 0 && img[2] == 0) {
    Rational lam = c4.at(1, 0, 2) * x + c4.at(0, 1, 2) * y + c4.at(0, 0, 3) * z;
    img = {lam * z, lam * y,
           -(c4.at(2, 0, 1) * x * z + c4.at(1, 2, 0) * y * y + c4.at(1, 1, 1) * y * z)};
  }
  if (img[0] == 0 && img[1] == 0 && img[2] == 0)
    throw Error(ErrorKind::MapUndefined, "rho_at", p.str());
  return normalize_point(img);
}

ProjectivePoint2 psi5_at(const TernaryCubic& c5, const ProjectivePoint2& p) {
  if (!c5.vanishes_at(p)) throw Error(ErrorKind::NotOnCurve, "psi5_at", p.str());
  auto v = p.rational_coords();
  const Rational &x = v[0], &y = v[1], &z = v[2];
  std::array<Rational, 3> img = {x * x, y * z, x * z};
  if (img[0] == 0 && img[1] == 0 && img[2] == 0) {
    Rational sigma = c5.at(3, 0, 0) * x + c5.at(2, 0, 1) * z;
    img = {-(c5.at(1, 1, 1) * x * y + c5.at(1, 0, 2) * x * z + c5.at(0, 2, 1) * y * y +
             c5.at(0, 1, 2) * y * z),
           sigma * y, sigma * x};
  }
  if (img[0] == 0 && img[1] == 0 && img[2] == 0) {
    Rational tau = c5.at(1, 1, 1) * x + c5.at(0, 2, 1) * y + c5.at(0, 1, 2) * z;
    img = {tau * x, -(c5.at(3, 0, 0) * x * x + c5.at(2, 0, 1) * x * z + c5.at(1, 0, 2) * z * z),
           tau * z};
  }
  if (img[0] == 0 && img[1] == 0 && img[2] == 0)
    throw Error(ErrorKind::MapUndefined, "psi5_at", p.str());
  return normalize_point(img);
}

StepRecord step6_complete_square(const TernaryCubic& c5) {
  require_shape(c5,
                {cubic_index(3, 0, 0), cubic_index(2, 0, 1), cubic_index(1, 1, 1),
                 cubic_index(1, 0, 2), cubic_index(0, 2, 1), cubic_index(0, 1, 2),
                 cubic_index(0, 0, 3)},
                "step6");
  const Rational g021 = c5.at(0, 2, 1);
  if (g021 == 0) throw Error(ErrorKind::SingularCurve, "step6", "no Y^2 Z term");
  LinearMap3 fwd(LinearMap3::Matrix{{{Rational(1), Rational(0), Rational(0)},
                                     {c5.at(1, 1, 1), 2 * g021, c5.at(0, 1, 2)},
                                     {Rational(0), Rational(0), Rational(1)}}});
  TernaryCubic exact = substitute(c5, fwd.inverse()).scaled(4 * g021);
  StepRecord r = make_linear_record("complete-square", c5, fwd, exact, kP010);
  if (r.cubic_exact.at(0, 2, 1) != 1)
    throw Error(ErrorKind::MapUndefined, "step6", "square not completed");
  return r;
}

Step7Result step7_normalize(const TernaryCubic& c6_in) {
  TernaryCubic c6 = c6_in;
  require_shape(c6,
                {cubic_index(3, 0, 0), cubic_index(2, 0, 1), cubic_index(1, 0, 2),
                 cubic_index(0, 2, 1), cubic_index(0, 0, 3)},
                "step7");
  if (c6.at(0, 2, 1) != 1)
    throw Error(ErrorKind::InvalidArgument, "step7", "Y^2 Z coefficient must be 1");
  for (const auto& c : c6.coeffs())
    if (!is_integer(c)) throw Error(ErrorKind::InvalidArgument, "step7", "table not integral");
  const Int g300 = num(c6.at(3, 0, 0));
  if (g300 == 0) throw Error(ErrorKind::DegenerateCubic, "step7", "no X^3 term");
  const Int g201 = num(c6.at(2, 0, 1));
  const Int g102 = num(c6.at(1, 0, 2));
  const Int g003 = num(c6.at(0, 0, 3));
  const Int delta = -g300;
  Int phi = 1;
  if (g201 != 0 || g300 * g102 != 0 || g300 * g300 * g003 != 0)
    phi = max_scaling_factor(g201, g300 * g102, g300 * g300 * g003);

  LinearMap3 fwd(LinearMap3::Matrix{{{Rational(delta * phi), Rational(0), Rational(0)},
                                     {Rational(0), Rational(delta), Rational(0)},
                                     {Rational(0), Rational(0), Rational(phi * phi * phi)}}});
  TernaryCubic c7;
  c7.set(3, 0, 0, Rational(-1));
  c7.set(0, 2, 1, Rational(1));
  c7.set(2, 0, 1, make_rational(g201, phi * phi));
  c7.set(1, 0, 2, make_rational(delta * g102, phi * phi * phi * phi));
  c7.set(0, 0, 3, make_rational(delta * delta * g003, phi * phi * phi * phi * phi * phi));

  Step7Result out{StepRecord{}, WeierstrassCurve{}, delta, phi};
  out.record.name = "normal-form";
  out.record.kind = StepKind::Linear;
  out.record.cubic_before = c6;
  out.record.forward = fwd;
  out.record.inverse = fwd.inverse();
  out.record.cubic_exact = c7;
  out.record.cubic_after = c7;  // already primitive: the X^3 coefficient is -1
  out.record.point_after = kP010;
  out.curve.a2 = -c7.at(2, 0, 1);
  out.curve.a4 = -c7.at(1, 0, 2);
  out.curve.a6 = -c7.at(0, 0, 3);
  if (out.curve.discriminant() == 0)
    throw Error(ErrorKind::SingularCurve, "step7", "vanishing discriminant");
  return out;
}

std::optional<Step8Result> step8_shift_roots(const WeierstrassCurve& w) {
  if (!w.is_special() || !is_integer(w.a2) || !is_integer(w.a4) || !is_integer(w.a6))
    throw Error(ErrorKind::InvalidArgument, "step8", "expects an integral special form");
  auto roots = monic_cubic_integer_roots(num(w.a2), num(w.a4), num(w.a6));
  if (!roots) return std::nullopt;
  const Int shift = (*roots)[2];  // largest root goes to the origin
  SplitForm split;
  split.shift = shift;
  split.A = shift - (*roots)[1];
  split.B = shift - (*roots)[0];
  LinearMap3 fwd(LinearMap3::Matrix{{{Rational(1), Rational(0), Rational(-shift)},
                                     {Rational(0), Rational(1), Rational(0)},
                                     {Rational(0), Rational(0), Rational(1)}}});
  split.quartered = mpz_divisible_ui_p(split.A.get_mpz_t(), 4) &&
                    mpz_divisible_ui_p(split.B.get_mpz_t(), 4);
  if (split.quartered) {
    split.A /= 4;
    split.B /= 4;
    LinearMap3 quarter(LinearMap3::Matrix{{{Rational(2), Rational(0), Rational(0)},
                                           {Rational(0), Rational(1), Rational(0)},
                                           {Rational(0), Rational(0), Rational(8)}}});
    fwd = quarter.compose(fwd);
  }
  Step8Result out{StepRecord{}, split};
  out.record.name = "shift-roots";
  out.record.kind = StepKind::Linear;
  out.record.cubic_before = w.homogeneous();
  out.record.forward = fwd;
  out.record.inverse = fwd.inverse();
  out.record.cubic_exact = split.curve().homogeneous();
  out.record.cubic_after = out.record.cubic_exact;
  out.record.point_after = kP010;
  return out;
}

CubicChain run_cubic_chain(const TernaryCubic& c0_in, const ProjectivePoint2& p) {
  CubicChain chain;
  TernaryCubic c0 = c0_in.primitive();
  for (auto& rec : step1_translate(c0, p)) chain.steps.push_back(std::move(rec));

  Step2Result s2 = step2_align_tangent(chain.steps.back().cubic_after);
  if (s2.yz_swap) {
    chain.yz_swapped = true;
    chain.steps.push_back(std::move(*s2.yz_swap));
  }
  chain.steps.push_back(std::move(s2.align));
  chain.inflection_shortcut = s2.inflection_shortcut;

  if (chain.inflection_shortcut) {
    // (1,0,0) is a flex: exchanging X and Y lands directly on a general
    // Weierstrass equation, so stages 3-5 are skipped
    const TernaryCubic& c2 = chain.steps.back().cubic_after;
    LinearMap3 swap = LinearMap3::permutation({1, 0, 2});
    chain.steps.push_back(make_linear_record("xy-swap", c2, swap, substitute(c2, swap), kP100));
  } else {
    chain.steps.push_back(step3_move_second_intersection(chain.steps.back().cubic_after));
    chain.steps.push_back(step4_align_tangent_at_q(chain.steps.back().cubic_after));
    chain.steps.push_back(step5_quadratic(chain.steps.back().cubic_after));
  }

  chain.steps.push_back(step6_complete_square(chain.steps.back().cubic_after));

  Step7Result s7 = step7_normalize(chain.steps.back().cubic_after);
  chain.steps.push_back(std::move(s7.record));
  chain.curve = s7.curve;
  chain.delta = s7.delta;
  chain.phi = s7.phi;

  if (auto s8 = step8_shift_roots(chain.curve)) {
    chain.split = s8->split;
    chain.split_forward = s8->record.forward;
    chain.split_inverse = s8->record.inverse;
    chain.steps.push_back(std::move(s8->record));
  }
  chain.final_point = kP010;
  return chain;
}

ReducedCurve reduce_monic_curve(const Int& a2, const Int& a4, const Int& a6) {
  if (a2 == 0 && a4 == 0 && a6 == 0)
    throw Error(ErrorKind::SingularCurve, "reduce_monic_curve", "triple root at the origin");
  Int u = max_scaling_factor(a2, a4, a6);
  Int u2 = u * u;
  return ReducedCurve{a2 / u2, a4 / (u2 * u2), a6 / (u2 * u2 * u2), u};
}

}  // namespace quadell
