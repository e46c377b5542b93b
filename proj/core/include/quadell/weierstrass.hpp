#ifndef QUADELL_WEIERSTRASS_HPP
#define QUADELL_WEIERSTRASS_HPP

#include <optional>
#include <string>
#include <vector>

#include "quadell/forms.hpp"
#include "quadell/linear_map.hpp"
#include "quadell/projective.hpp"

namespace quadell {

/* y^2 + a1 xy + a3 y = x^3 + a2 x^2 + a4 x + a6. The chain always ends in
 * the special form (a1 = a3 = 0); the general fields exist for the
 * intermediate curve the inflection shortcut produces. */
struct WeierstrassCurve {
  Rational a1 = 0, a2 = 0, a3 = 0, a4 = 0, a6 = 0;

  bool is_special() const { return a1 == 0 && a3 == 0; }
  Rational discriminant() const;  // of x^3 + a2 x^2 + a4 x + a6 (special form)
  TernaryCubic homogeneous() const;
  std::string equation_text() const;
};

/// y^2 = x(x + A)(x + B), the fully split shape step 8 produces.
struct SplitForm {
  Int shift;        // root moved to the origin (x -> x - shift)
  bool quartered;   // whether the common factor 4 was scaled out
  Int A, B;         // 0 < A <= B

  WeierstrassCurve curve() const;
  std::string equation_text() const;
};

enum class StepKind { Linear, Quadratic };

/* One transformation of the chain. Linear steps carry their matrix pair;
 * the quadratic step keeps the neighbour tables instead (they define the
 * monomial maps and all their redefinitions). cubic_exact is the raw image
 * of the substitution before the table is scaled back to primitive form. */
struct StepRecord {
  std::string name;
  StepKind kind = StepKind::Linear;
  std::optional<LinearMap3> forward, inverse;
  TernaryCubic cubic_before;
  TernaryCubic cubic_exact;
  TernaryCubic cubic_after;  // primitive representative, used downstream
  ProjectivePoint2 point_after{std::array<Int, 3>{1, 0, 0}};
};

struct CubicChain {
  std::vector<StepRecord> steps;
  bool yz_swapped = false;
  bool inflection_shortcut = false;
  WeierstrassCurve curve;                // step-7 normal form
  Int delta = 0, phi = 0;                // step-7 reduction data
  std::optional<SplitForm> split;        // step-8 result when the cubic splits
  std::optional<LinearMap3> split_forward, split_inverse;
  ProjectivePoint2 final_point{std::array<Int, 3>{0, 1, 0}};

  const StepRecord* find(const std::string& name) const;
  /// C_(r) for r in 0..8; nullptr when the branch taken skips stage r.
  const TernaryCubic* stage(int r) const;
};

/* ---- individual steps -------------------------------------------------
 * Each step consumes the primitive table of its predecessor and returns a
 * record holding the exact substituted table plus its primitive form. */

/// Step 1: translate the distinguished point to (1,0,0). Re-indexes first
/// when the X-coordinate vanishes (recorded as its own permutation step).
std::vector<StepRecord> step1_translate(const TernaryCubic& c0, const ProjectivePoint2& p);

struct Step2Result {
  std::optional<StepRecord> yz_swap;  // taken when the X^2 Z coefficient vanishes
  StepRecord align;
  bool inflection_shortcut = false;   // (1,0,0) is a flex of C2
};
Step2Result step2_align_tangent(const TernaryCubic& c1);

/// Second intersection of the tangent at (1,0,0) with the cubic.
ProjectivePoint2 tangent_second_intersection(const TernaryCubic& c2);

StepRecord step3_move_second_intersection(const TernaryCubic& c2);
StepRecord step4_align_tangent_at_q(const TernaryCubic& c3);

/// Step 5: the quadratic transformation (X,Y,Z) -> (XZ, XY, Z^2).
StepRecord step5_quadratic(const TernaryCubic& c4);

/// The quadratic map and its inverse with their redefinitions; defined for
/// every point of the respective curve.
ProjectivePoint2 rho_at(const TernaryCubic& c4, const ProjectivePoint2& p);
ProjectivePoint2 psi5_at(const TernaryCubic& c5, const ProjectivePoint2& p);

StepRecord step6_complete_square(const TernaryCubic& c5);

struct Step7Result {
  StepRecord record;
  WeierstrassCurve curve;
  Int delta, phi;
};
Step7Result step7_normalize(const TernaryCubic& c6);

struct Step8Result {
  StepRecord record;
  SplitForm split;
};
/// nullopt when x^3 + a2 x^2 + a4 x + a6 has no three rational roots.
std::optional<Step8Result> step8_shift_roots(const WeierstrassCurve& w);

/// Steps 1-7 plus the step-8 attempt, transporting p throughout.
CubicChain run_cubic_chain(const TernaryCubic& c0, const ProjectivePoint2& p);

/* Scaling reduction shared by step 7 and the closed-form families: the
 * largest x-rescaling u with u^2 | a2, u^4 | a4, u^6 | a6 applied to a
 * monic integral curve. */
struct ReducedCurve {
  Int a2, a4, a6;
  Int u;  // points map by (x, y) -> (x/u^2, y/u^3)
};
ReducedCurve reduce_monic_curve(const Int& a2, const Int& a4, const Int& a6);

}  // namespace quadell

#endif
