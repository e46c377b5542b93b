#include "doctest.h"
#include "quadell/errors.hpp"
#include "quadell/integer_math.hpp"
#include "quadell/sampling.hpp"
#include "quadell/weierstrass.hpp"
#include "test_util.hpp"

using namespace quadell;
using namespace quadell::testutil;

namespace {

void check_table(const TernaryCubic& got, std::array<long, 10> expect) {
  CHECK(got.proportional_to(cubic10(expect)));
}

/* Pullback of each linear step must reproduce a rational multiple of its
 * input; the quadratic step satisfies C5(XZ, XY, Z^2) = X Z^2 * C4 as a
 * polynomial identity, checked here by expanding both sides. */
void check_chain_invariants(const CubicChain& chain) {
  for (const auto& rec : chain.steps) {
    CHECK(rec.cubic_after.vanishes_at(rec.point_after));
    if (rec.kind == StepKind::Linear) {
      CHECK(substitute(rec.cubic_after, *rec.forward).proportional_to(rec.cubic_before));
    } else {
      // degree-6 expansion of both sides over the 28 monomials
      const TernaryCubic &c4 = rec.cubic_before, &c5 = rec.cubic_exact;
      std::array<std::array<std::array<Rational, 7>, 7>, 7> lhs{}, rhs{};
      for (std::size_t t = 0; t < 10; ++t) {
        auto [i, j, k] = kCubicMonomials[t];
        // C5 monomial (XZ)^i (XY)^j (Z^2)^k -> X^{i+j} Y^j Z^{i+2k}
        if (c5.coeffs()[t] != 0) lhs[i + j][j][i + 2 * k] += c5.coeffs()[t];
        // X Z^2 * C4 monomial
        if (c4.coeffs()[t] != 0) rhs[i + 1][j][k + 2] += c4.coeffs()[t];
      }
      CHECK(lhs == rhs);
    }
  }
  CHECK(chain.final_point == pt2(0, 1, 0));
  CHECK(chain.curve.discriminant() != 0);
}

}  // namespace

TEST_CASE("worked example: every printed table reappears") {
  CubicChain chain = run_cubic_chain(worked_example_cubic(), pt2(2, 2, 1));
  CHECK(!chain.yz_swapped);
  CHECK(!chain.inflection_shortcut);

  check_table(*chain.stage(1), {0, -2, -2, -3, -8, 4, -2, -2, 12, -8});
  check_table(*chain.stage(2), {0, 0, -2, -9, -16, -4, -20, -50, -36, -8});
  check_table(*chain.stage(3), {0, 0, -2, 81, 64, 36, 0, -1970, -2196, -648});
  check_table(*chain.stage(4), {0, 0, -2, 6561, 5184, -4964, 0, 0, -4195476, -6268808});
  check_table(*chain.stage(5), {-2, 0, -4964, 0, 5184, -6268808, 0, 6561, -4195476, 0});
  check_table(*chain.stage(6),
              {-52488, 0, -157149072, 0, 0, -121019901984, 0, 1, 0, -17602018866576});
  check_table(*chain.stage(7), {-1, 0, -5988, 0, 0, -9222672, 0, 1, 0, -2682825616});

  CHECK(chain.curve.a2 == 5988);
  CHECK(chain.curve.a4 == 9222672);
  CHECK(chain.curve.a6 == Rational(Int("2682825616")));
  CHECK(chain.phi == 162);
  CHECK(tangent_second_intersection(*chain.stage(2)) == pt2(-20, 9, 0));
  check_chain_invariants(chain);
}

TEST_CASE("step 1 is the identity when the point already sits at (1,0,0)") {
  TernaryCubic c = cubic({{2, 1, 0, -1}, {2, 0, 1, -2}, {0, 2, 1, -1}, {0, 1, 2, 1}});
  auto recs = step1_translate(c, pt2(1, 0, 0));
  REQUIRE(recs.size() == 1);
  CHECK(recs[0].cubic_after.coeffs() == c.coeffs());
  CHECK(recs[0].point_after == pt2(1, 0, 0));
}

TEST_CASE("step 1 re-indexes when the X coordinate vanishes") {
  // (0,1,1) lies on the (2,3,5) family cubic; the first nonzero coordinate
  // moves into the X slot before translating
  TernaryCubic c = cubic10({0, -10, 5, 10, 0, -5, 0, -8, 8, 0});
  REQUIRE(c.vanishes_at(pt2(0, 1, 1)));
  auto recs = step1_translate(c, pt2(0, 1, 1));
  REQUIRE(recs.size() == 2);
  CHECK(recs[0].name == "reindex");
  CHECK(recs[1].point_after == pt2(1, 0, 0));
  CHECK(recs[1].cubic_after.vanishes_at(pt2(1, 0, 0)));
  CHECK(recs[1].cubic_after.at(3, 0, 0) == 0);

  // the whole chain still runs from the alternative distinguished point
  CubicChain chain = run_cubic_chain(c, pt2(0, 1, 1));
  check_chain_invariants(chain);
}

TEST_CASE("step 1 rejects points off the cubic") {
  CHECK_THROWS_AS(step1_translate(worked_example_cubic(), pt2(1, 1, 1)), Error);
}

TEST_CASE("step 2 singular distinguished point") {
  // Y^3 + Z^3 + XYZ has vanishing tangent data at (1,0,0)
  TernaryCubic c = cubic({{0, 3, 0, 1}, {0, 0, 3, 1}, {1, 1, 1, 1}});
  try {
    step2_align_tangent(c);
    CHECK(false);
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::SingularPoint);
  }
}

TEST_CASE("Y/Z swap branch runs to completion") {
  // X^2 Y + X Z^2 + Y^3 + Z^3: tangent at (1,0,0) is Y = 0, so the X^2 Z
  // coefficient vanishes and the coordinates must be exchanged first
  TernaryCubic c = cubic({{2, 1, 0, 1}, {1, 0, 2, 1}, {0, 3, 0, 1}, {0, 0, 3, 1}});
  CubicChain chain = run_cubic_chain(c, pt2(1, 0, 0));
  CHECK(chain.yz_swapped);
  CHECK(!chain.inflection_shortcut);
  CHECK(chain.find("yz-swap") != nullptr);
  check_table(chain.find("yz-swap")->cubic_after, {0, 0, 1, 1, 0, 0, 1, 0, 0, 1});
  check_table(*chain.stage(3), {0, 0, 1, 1, -2, 0, 0, 1, 0, 1});
  check_table(*chain.stage(4), {0, 0, 1, 1, -2, -2, 0, 0, 2, 2});
  check_table(*chain.stage(5), {1, 0, -2, 0, -2, 2, 0, 1, 2, 0});
  check_table(*chain.stage(6), {4, 0, -12, 0, 0, 16, 0, 1, 0, -4});
  check_table(*chain.stage(7), {-1, 0, -3, 0, 0, -4, 0, 1, 0, -1});
  CHECK(chain.curve.a2 == 3);
  CHECK(chain.curve.a4 == 4);
  CHECK(chain.curve.a6 == 1);
  CHECK(chain.curve.discriminant() == -31);
  CHECK(!chain.split.has_value());
  check_chain_invariants(chain);
}

TEST_CASE("step 3 refuses a missed inflection shortcut") {
  // a C2-shaped table with no XY^2 term
  TernaryCubic c = cubic({{2, 0, 1, -4}, {0, 3, 0, -3}, {0, 2, 1, -4}, {0, 1, 2, -1}});
  try {
    step3_move_second_intersection(c);
    CHECK(false);
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::InflectionShouldHaveShortcut);
  }
}

TEST_CASE("quadratic step maps and redefinitions") {
  CubicChain chain = run_cubic_chain(worked_example_cubic(), pt2(2, 2, 1));
  const TernaryCubic& c4 = *chain.stage(4);
  const TernaryCubic& c5 = *chain.stage(5);

  // rho at its two undefined-looking points
  CHECK(rho_at(c4, pt2(1, 0, 0)) == pt2(0, 1, 0));  // (0, -Gamma201, 0)
  auto q = rho_at(c4, pt2(0, 1, 0));
  CHECK(q == normalize_point(std::array<Rational, 3>{0, c4.at(0, 1, 2), -c4.at(1, 2, 0)}));

  // psi at its two
  CHECK(psi5_at(c5, pt2(0, 1, 0)) == pt2(1, 0, 0));
  auto r = psi5_at(c5, pt2(0, 0, 1));
  CHECK(r == normalize_point(std::array<Rational, 3>{0, -c5.at(1, 0, 2), c5.at(0, 1, 2)}));
}

TEST_CASE("psi o rho is the identity away from the contracted points") {
  // the (2,3,5) family stage-4 curve has plenty of small rational points
  CubicChain chain = run_cubic_chain(cubic10({0, -10, 5, 10, 0, -5, 0, -8, 8, 0}),
                                     pt2(8, 5, 10));
  const TernaryCubic& c4 = *chain.stage(4);
  const TernaryCubic& c5 = *chain.stage(5);
  auto pts = sample_cubic_points(c4, {pt2(1, 0, 0), pt2(0, 1, 0)}, {.want = 24});
  std::size_t used = 0;
  for (const auto& p : pts) {
    if (p[0] == 0 || p[2] == 0) continue;
    ++used;
    ProjectivePoint2 fwd = rho_at(c4, p);
    CHECK(c5.vanishes_at(fwd));
    CHECK(psi5_at(c5, fwd) == p);
  }
  CHECK(used >= 10);
}

TEST_CASE("step 7 maximality") {
  CubicChain chain = run_cubic_chain(worked_example_cubic(), pt2(2, 2, 1));
  const TernaryCubic& c6 = *chain.stage(6);
  Int n1 = num(c6.at(2, 0, 1));
  Int n2 = num(c6.at(3, 0, 0)) * num(c6.at(1, 0, 2));
  Int n3 = num(c6.at(3, 0, 0)) * num(c6.at(3, 0, 0)) * num(c6.at(0, 0, 3));
  const Int& phi = chain.phi;
  auto divides = [](const Int& d, const Int& n) {
    return n == 0 || mpz_divisible_p(n.get_mpz_t(), d.get_mpz_t());
  };
  CHECK(divides(phi * phi, n1));
  CHECK(divides(phi * phi * phi * phi, n2));
  CHECK(divides(phi * phi * phi * phi * phi * phi, n3));
  // any prime extension breaks at least one divisibility; a prime that
  // could extend phi must divide every nonzero n_i, so the candidates
  // below are exhaustive
  std::map<Int, unsigned> candidates;
  for (const Int* n : {&n1, &n2, &n3})
    if (*n != 0)
      for (auto& [p, e] : factorize(*n)) candidates[p] += e;
  for (auto& [p, e] : candidates) {
    Int ext = phi * p;
    bool ok = divides(ext * ext, n1) && divides(ext * ext * ext * ext, n2) &&
              divides(ext * ext * ext * ext * ext * ext, n3);
    CHECK(!ok);
  }
}

TEST_CASE("step 7 rejects a vanishing X^3 term") {
  TernaryCubic c = cubic({{2, 0, 1, 1}, {0, 2, 1, 1}, {0, 0, 3, 1}});
  try {
    step7_normalize(c);
    CHECK(false);
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::DegenerateCubic);
  }
}

TEST_CASE("step 8 splits and quarters") {
  WeierstrassCurve w;
  w.a2 = 227;
  w.a4 = 10243;
  w.a6 = 74529;
  auto s8 = step8_shift_roots(w);
  REQUIRE(s8.has_value());
  CHECK(s8->split.shift == -9);
  CHECK(s8->split.quartered);
  CHECK(s8->split.A == 10);
  CHECK(s8->split.B == 40);
  check_table(s8->record.cubic_after, {-1, 0, -50, 0, 0, -400, 0, 1, 0, 0});

  WeierstrassCurve nosplit;
  nosplit.a4 = -2;
  CHECK(!step8_shift_roots(nosplit).has_value());
}

TEST_CASE("reduce_monic_curve strips square scalings") {
  // y^2 = x(x-8)(x-4) carries a residual factor 2
  ReducedCurve r = reduce_monic_curve(Int(-12), Int(32), Int(0));
  CHECK(r.u == 2);
  CHECK(r.a2 == -3);
  CHECK(r.a4 == 2);
  CHECK(r.a6 == 0);
}
