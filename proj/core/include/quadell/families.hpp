#ifndef QUADELL_FAMILIES_HPP
#define QUADELL_FAMILIES_HPP

#include <array>
#include <string>

#include "quadell/forms.hpp"
#include "quadell/transport.hpp"
#include "quadell/weierstrass.hpp"

namespace quadell {

/* Euler's concordant forms: X^2 + M Y^2 = Z^2, X^2 + N Y^2 = W^2. In the
 * pipeline's coordinates (X0..X3) = (Y, X, Z, W) the quadrics are the
 * diagonal forms diag(M,1,-1,0) and diag(N,1,0,-1). */
struct EulerInstance {
  Int M, N;
  EulerInstance(Int m, Int n);  // requires M != N, both nonzero
};

/* Four rational squares in arithmetic progression with gap pattern
 * (k, l, m): the intersection of (k+l)X0^2 - kX1^2 - lX2^2 = 0 and
 * -mX0^2 + (m+l)X1^2 - lX3^2 = 0 with base point (1,1,1,1). */
struct KlmInstance {
  Int k, l, m;
  KlmInstance(Int k_, Int l_, Int m_);  // requires all >= 1
};

struct FamilyQuadrics {
  QuadricForm a, b;
  ProjectivePoint3 base;
};

struct LabeledPoint {
  ProjectivePoint2 point;
  std::string label;  // "infinity", "2-torsion" or ""
};

FamilyQuadrics euler_quadrics(const EulerInstance& inst);

/* Closed form of the final curve: y^2 = x(x-M)(x-(M-N)) put through the
 * same x-rescaling reduction the pipeline's normal-form step applies, so it
 * matches run_pipeline coefficient for coefficient. `scale` records the
 * extra factor (1 for generic instances, where the curve is the literal
 * closed form); points of the literal model map by (x,y) -> (x/s^2, y/s^3). */
struct EulerCurve {
  WeierstrassCurve curve;
  Int scale;
};
EulerCurve euler_curve(const EulerInstance& inst);

/// Images of the four trivial points (0,1,+-1,+-1), on euler_curve's model.
std::array<LabeledPoint, 4> euler_trivial_images(const EulerInstance& inst);

FamilyQuadrics klm_quadrics(const KlmInstance& inst);

/// Distinguished point of the plane cubic: (l+m, m, k+l+m).
ProjectivePoint2 klm_base_cubic_point(const KlmInstance& inst);

/* Closed form after the root shift: y^2 = x(x+km)(x+(k+l)(l+m)) carried
 * through the pipeline's reduction and quartering conventions. `scale` is
 * rational: points of the literal split model map by (x/s^2, y/s^3). */
struct KlmCurve {
  SplitForm split;
  Rational scale;
};
KlmCurve klm_curve(const KlmInstance& inst);

/// Images of the eight trivial points (1,+-1,+-1,+-1), on klm_curve's model.
std::array<LabeledPoint, 8> klm_trivial_images(const KlmInstance& inst);

/// The closed-form quadratic map onto the literal split model
/// y^2 = x(x+km)(x+(k+l)(l+m)) (the published coefficient tables).
QuadraticComposite klm_composite_map(const KlmInstance& inst);

/// Step size s with beta^2 - alpha^2 = k s, gamma^2 - beta^2 = l s,
/// delta^2 - gamma^2 = m s. Throws NotAProgression when the three disagree.
Rational progression_step_size(const Rational& alpha, const Rational& beta,
                               const Rational& gamma, const Rational& delta, const Int& k,
                               const Int& l, const Int& m);

}  // namespace quadell

#endif
