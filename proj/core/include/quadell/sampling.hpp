#ifndef QUADELL_SAMPLING_HPP
#define QUADELL_SAMPLING_HPP

#include <cstdint>
#include <optional>
#include <vector>

#include "quadell/forms.hpp"
#include "quadell/projective.hpp"

namespace quadell {

/// Third intersection of the line through two distinct rational points of
/// the cubic. nullopt when the residual root degenerates (line inside the
/// curve or intersection at the given points only).
std::optional<ProjectivePoint2> chord_third_point(const TernaryCubic& c,
                                                  const ProjectivePoint2& p,
                                                  const ProjectivePoint2& q);

/// Third intersection of the tangent line at p. nullopt at flexes and
/// singular points.
std::optional<ProjectivePoint2> tangent_third_point(const TernaryCubic& c,
                                                    const ProjectivePoint2& p);

struct SampleOptions {
  std::size_t want = 20;
  std::uint64_t seed = 1;
  unsigned max_coordinate_bits = 700;  // skip points beyond this height
  unsigned max_line_attempts = 1000;   // random chords through known points
  long direction_height = 20;          // coefficient bound for random lines
};

/* Rational points on a cubic grown from seed points: closure under chords
 * and tangents, plus random rational lines through known points kept when
 * the residual quadratic has a square discriminant. Returns at most
 * opts.want distinct points (the seeds included); fewer when the curve has
 * too few rational points below the height cap. */
std::vector<ProjectivePoint2> sample_cubic_points(const TernaryCubic& c,
                                                  const std::vector<ProjectivePoint2>& seeds,
                                                  const SampleOptions& opts = {});

}  // namespace quadell

#endif
