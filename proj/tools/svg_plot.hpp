#ifndef QUADELL_TOOLS_SVG_PLOT_HPP
#define QUADELL_TOOLS_SVG_PLOT_HPP

#include <array>
#include <optional>
#include <string>
#include <vector>

#include "quadell/forms.hpp"
#include "quadell/projective.hpp"

namespace quadell::cli {

struct PlotWindow {
  double x0, x1, y0, y1;
};

/* Affine chart Z = 1 of the curve, traced by scanning the defining
 * polynomial for sign changes on a pixel grid. Marked points render as red
 * dots carrying a data-point attribute with their projective coordinates. */
std::string svg_affine(const TernaryCubic& curve, const std::vector<ProjectivePoint2>& marked,
                       std::optional<PlotWindow> window, unsigned samples = 800);

/* Projective view: the plane drawn inside (and around) the reference
 * triangle with vertices (0,0,1) left, (1,0,0) right, (0,1,0) top. */
std::string svg_projective(const TernaryCubic& curve,
                           const std::vector<ProjectivePoint2>& marked, unsigned samples = 800);

/// Window fitted to the marked points, padded by a quarter of the extent.
PlotWindow autofit_window(const std::vector<ProjectivePoint2>& marked);

}  // namespace quadell::cli

#endif
