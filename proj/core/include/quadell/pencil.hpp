#ifndef QUADELL_PENCIL_HPP
#define QUADELL_PENCIL_HPP

#include <array>
#include <utility>

#include "quadell/forms.hpp"
#include "quadell/linear_map.hpp"
#include "quadell/projective.hpp"

namespace quadell {

/* After moving the base point to (0,0,0,1), each quadric of the pencil reads
 *     q_i(Y0,Y1,Y2) + l_i(Y0,Y1,Y2) * Y3 = 0,
 * i.e. Y3 occurs only linearly. q_i collects the top-left 3x3 block of the
 * transformed matrix, l_i = 2 * (u resp. v), where u_i = sum_j a_ij x_j. */
struct TranslatedPencil {
  QuadraticForm3 q1, q2;
  LinearForm3 l1, l2;
  std::array<Rational, 3> u, v;

  Rational quadric1_at(const std::array<Rational, 4>& y) const;
  Rational quadric2_at(const std::array<Rational, 4>& y) const;
  bool on_intersection(const ProjectivePoint3& p) const;
};

/* The split of the two defining polynomials along Y2 and then Y0/Y1:
 *   q_i + l_i Y3 = alpha1 * Y2 + alpha2   (resp. beta),
 *   alpha2 = gamma0 * Y0 + gamma1 * Y1    (resp. delta),
 * with the cross term Y0*Y1 split as the construction prescribes. Feeds the
 * projection's closed form at the base point. */
struct SplitData {
  LinearForm4 alpha1, beta1;
  QuadraticForm4 alpha2, beta2;
  LinearForm4 gamma0, gamma1, delta0, delta1;
};

/// Moves the distinguished point to (0,0,0,1). Re-indexes coordinates when
/// x3 = 0 (largest nonzero index is swapped into slot 3; the permutation is
/// part of the returned map). Throws PointNotOnIntersection.
std::pair<LinearMap4, TranslatedPencil> translate_base_point(const QuadricForm& a,
                                                             const QuadricForm& b,
                                                             const ProjectivePoint3& x);

/// The plane cubic cut out by the pencil, primitive integer coefficients.
/// Orientation fixed as q2*l1 - q1*l2. Throws DegenerateIntersection when
/// the form vanishes identically.
TernaryCubic build_cubic(const TranslatedPencil& pencil);

SplitData split_pencil(const TranslatedPencil& pencil);

/// Image of the base point under the projection: the common zero of l1 and l2.
ProjectivePoint2 base_point_image(const TranslatedPencil& pencil);

/// Projection (Y0,Y1,Y2,Y3) -> (Y0,Y1,Y2), redefined at (0,0,0,1) through
/// the split data. P must lie on both transformed quadrics.
ProjectivePoint2 phi(const TranslatedPencil& pencil, const ProjectivePoint3& p);

/// Inverse of phi: lifts a point of the cubic back onto the intersection.
/// Throws DegenerateIntersection when the input pencil is reducible.
ProjectivePoint3 psi(const TranslatedPencil& pencil, const ProjectivePoint2& p);

/// Whole first stage bundled: forward 4x4 map, pencil, cubic and the image
/// of the distinguished point.
struct QuadricStage {
  LinearMap4 forward;
  TranslatedPencil pencil;
  TernaryCubic cubic;
  ProjectivePoint2 base_image;
};

QuadricStage quadric_to_cubic(const QuadricForm& a, const QuadricForm& b,
                              const ProjectivePoint3& x);

}  // namespace quadell

#endif
