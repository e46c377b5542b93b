#ifndef QUADELL_TRANSPORT_HPP
#define QUADELL_TRANSPORT_HPP

#include <optional>
#include <variant>

#include "quadell/pencil.hpp"
#include "quadell/weierstrass.hpp"

namespace quadell {

/* The full record of one transformation run: the quadric stage, every cubic
 * step, and the final curve. Immutable once built; all transports read it. */
struct PipelineTrace {
  QuadricStage quadric;
  CubicChain chain;

  const WeierstrassCurve& curve() const { return chain.curve; }
  const std::optional<SplitForm>& split() const { return chain.split; }
};

PipelineTrace run_pipeline(const QuadricForm& a, const QuadricForm& b,
                           const ProjectivePoint3& x);

/// Which plane model a transported point should live on.
enum class CurveFrame { NormalForm, SplitForm };

/// Carries a point of Q1 cap Q2 to the final curve. The distinguished point
/// lands on (0,1,0). Throws PointNotOnIntersection.
ProjectivePoint2 transport_forward(const PipelineTrace& trace, const ProjectivePoint3& p,
                                   CurveFrame frame = CurveFrame::NormalForm);

/// Inverse of transport_forward. Throws PointNotOnCurve.
ProjectivePoint3 transport_backward(const PipelineTrace& trace, const ProjectivePoint2& p,
                                    CurveFrame frame = CurveFrame::NormalForm);

/// Same carries restricted to the plane-cubic chain (C0 coordinates).
ProjectivePoint2 chain_forward(const CubicChain& chain, const ProjectivePoint2& p,
                               CurveFrame frame = CurveFrame::NormalForm);
ProjectivePoint2 chain_backward(const CubicChain& chain, const ProjectivePoint2& p,
                                CurveFrame frame = CurveFrame::NormalForm);

/* ---- closed forms of the whole composition --------------------------- */

/// 3x4 matrix: the concatenation when every step is linear.
struct LinearComposite {
  std::array<std::array<Rational, 4>, 3> m;
  ProjectivePoint2 apply(const ProjectivePoint3& p) const;
};

/// Three quadratic forms in (x0..x3): the concatenation through the
/// quadratic step, X = sum X_ij x_i x_j and likewise Y, Z.
struct QuadraticComposite {
  QuadraticForm4 x, y, z;
  ProjectivePoint2 apply(const ProjectivePoint3& p) const;
};

using CompositeMap = std::variant<LinearComposite, QuadraticComposite>;

/// Symbolic composition of the entire trace. Linear when no quadratic step
/// ran (the inflection-shortcut branch), quadratic otherwise.
CompositeMap extract_composite(const PipelineTrace& trace,
                               CurveFrame frame = CurveFrame::NormalForm);

}  // namespace quadell

#endif
