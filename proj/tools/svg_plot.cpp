#include "svg_plot.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <functional>
#include <sstream>

namespace quadell::cli {

namespace {

constexpr double kCanvas = 840.0;
constexpr double kMargin = 20.0;

std::array<double, 10> as_doubles(const TernaryCubic& c) {
  std::array<double, 10> out;
  for (std::size_t t = 0; t < 10; ++t) out[t] = c.coeffs()[t].get_d();
  return out;
}

double eval3(const std::array<double, 10>& g, double x, double y, double z) {
  double s = 0;
  for (std::size_t t = 0; t < 10; ++t) {
    if (g[t] == 0.0) continue;
    auto [i, j, k] = kCubicMonomials[t];
    s += g[t] * std::pow(x, i) * std::pow(y, j) * std::pow(z, k);
  }
  return s;
}

std::string fmt(double v) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.2f", v);
  return buf;
}

std::string svg_open(double w, double h) {
  std::ostringstream s;
  s << "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n"
    << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << fmt(w) << "\" height=\""
    << fmt(h) << "\" viewBox=\"0 0 " << fmt(w) << " " << fmt(h) << "\">\n"
    << "<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n";
  return s.str();
}

/* Scan a sample grid for sign changes of `value` and accumulate one path of
 * short strokes. Sign changes against the right and lower neighbours place
 * a dot at the midpoint of the crossing cell edge. */
template <typename F>
std::string scan_path(unsigned samples, F&& value,
                      const std::function<std::pair<double, double>(unsigned, unsigned)>& to_px) {
  std::vector<double> prev(samples + 1), cur(samples + 1);
  std::ostringstream d;
  for (unsigned iy = 0; iy <= samples; ++iy) {
    for (unsigned ix = 0; ix <= samples; ++ix) cur[ix] = value(ix, iy);
    for (unsigned ix = 0; ix <= samples; ++ix) {
      bool hit = false;
      if (ix > 0 && std::isfinite(cur[ix - 1]) && std::isfinite(cur[ix]) &&
          ((cur[ix - 1] < 0) != (cur[ix] < 0)))
        hit = true;
      if (iy > 0 && std::isfinite(prev[ix]) && std::isfinite(cur[ix]) &&
          ((prev[ix] < 0) != (cur[ix] < 0)))
        hit = true;
      if (hit) {
        auto [px, py] = to_px(ix, iy);
        d << "M" << fmt(px) << " " << fmt(py) << "h0.9";
      }
    }
    std::swap(prev, cur);
  }
  std::string path = d.str();
  if (path.empty()) return "";
  return "<path class=\"curve\" stroke=\"black\" stroke-width=\"0.9\" fill=\"none\" d=\"" +
         path + "\"/>\n";
}

std::string marked_circle(double px, double py, const ProjectivePoint2& p) {
  std::string coords;
  for (std::size_t i = 0; i < 3; ++i) {
    if (i) coords += ",";
    coords += p.coords()[i].get_str();
  }
  return "<circle class=\"marked-point\" data-point=\"" + coords + "\" cx=\"" + fmt(px) +
         "\" cy=\"" + fmt(py) + "\" r=\"5\" fill=\"red\"/>\n";
}

}  // namespace

PlotWindow autofit_window(const std::vector<ProjectivePoint2>& marked) {
  std::vector<std::pair<double, double>> affine;
  for (const auto& p : marked) {
    double z = p.coords()[2].get_d();
    if (z == 0.0) continue;  // points at infinity cannot steer the window
    affine.push_back({p.coords()[0].get_d() / z, p.coords()[1].get_d() / z});
  }
  if (affine.empty()) return PlotWindow{-5, 5, -5, 5};
  double x0 = affine[0].first, x1 = x0, y0 = affine[0].second, y1 = y0;
  for (auto [x, y] : affine) {
    x0 = std::min(x0, x);
    x1 = std::max(x1, x);
    y0 = std::min(y0, y);
    y1 = std::max(y1, y);
  }
  double w = std::max({x1 - x0, 1.0, 0.25 * (std::abs(x0) + std::abs(x1))});
  double h = std::max({y1 - y0, 1.0, 0.25 * (std::abs(y0) + std::abs(y1))});
  double ext = std::max(w, h);
  return PlotWindow{x0 - 0.25 * ext - (ext - (x1 - x0)) / 2, x1 + 0.25 * ext + (ext - (x1 - x0)) / 2,
                    y0 - 0.25 * ext - (ext - (y1 - y0)) / 2, y1 + 0.25 * ext + (ext - (y1 - y0)) / 2};
}

std::string svg_affine(const TernaryCubic& curve, const std::vector<ProjectivePoint2>& marked,
                       std::optional<PlotWindow> window, unsigned samples) {
  PlotWindow win = window ? *window : autofit_window(marked);
  auto g = as_doubles(curve);
  double side = kCanvas - 2 * kMargin;
  auto x_of = [&](unsigned ix) { return win.x0 + (win.x1 - win.x0) * ix / double(samples); };
  auto y_of = [&](unsigned iy) { return win.y1 - (win.y1 - win.y0) * iy / double(samples); };
  auto px_of = [&](double x) { return kMargin + (x - win.x0) / (win.x1 - win.x0) * side; };
  auto py_of = [&](double y) { return kMargin + (win.y1 - y) / (win.y1 - win.y0) * side; };

  std::ostringstream out;
  out << svg_open(kCanvas, kCanvas);
  // axes, when visible
  if (win.x0 < 0 && win.x1 > 0)
    out << "<line x1=\"" << fmt(px_of(0)) << "\" y1=\"" << fmt(kMargin) << "\" x2=\""
        << fmt(px_of(0)) << "\" y2=\"" << fmt(kCanvas - kMargin)
        << "\" stroke=\"#cccccc\" stroke-width=\"1\"/>\n";
  if (win.y0 < 0 && win.y1 > 0)
    out << "<line x1=\"" << fmt(kMargin) << "\" y1=\"" << fmt(py_of(0)) << "\" x2=\""
        << fmt(kCanvas - kMargin) << "\" y2=\"" << fmt(py_of(0))
        << "\" stroke=\"#cccccc\" stroke-width=\"1\"/>\n";

  out << scan_path(
      samples, [&](unsigned ix, unsigned iy) { return eval3(g, x_of(ix), y_of(iy), 1.0); },
      [&](unsigned ix, unsigned iy) {
        return std::pair<double, double>{px_of(x_of(ix)), py_of(y_of(iy))};
      });

  for (const auto& p : marked) {
    double z = p.coords()[2].get_d();
    if (z == 0.0) continue;
    double x = p.coords()[0].get_d() / z, y = p.coords()[1].get_d() / z;
    if (x < win.x0 || x > win.x1 || y < win.y0 || y > win.y1) continue;
    out << marked_circle(px_of(x), py_of(y), p);
  }
  out << "</svg>\n";
  return out.str();
}

std::string svg_projective(const TernaryCubic& curve,
                           const std::vector<ProjectivePoint2>& marked, unsigned samples) {
  auto g = as_doubles(curve);
  // reference triangle: (0,0,1) left, (1,0,0) right, (0,1,0) top middle
  const double side = kCanvas - 2 * kMargin;
  const double base_y = kCanvas - kMargin - 60.0;
  const double v001[2] = {kMargin, base_y};
  const double v100[2] = {kMargin + side, base_y};
  const double v010[2] = {kMargin + side / 2, base_y - side * 0.8660254037844386};

  // barycentric coordinates of a pixel against the triangle
  double det = (v100[0] - v001[0]) * (v010[1] - v001[1]) -
               (v010[0] - v001[0]) * (v100[1] - v001[1]);
  auto barycentric = [&](double px, double py) {
    double bx = ((px - v001[0]) * (v010[1] - v001[1]) - (v010[0] - v001[0]) * (py - v001[1])) / det;
    double by = ((v100[0] - v001[0]) * (py - v001[1]) - (px - v001[0]) * (v100[1] - v001[1])) / det;
    return std::array<double, 3>{bx, by, 1.0 - bx - by};  // weights of (1,0,0),(0,1,0),(0,0,1)
  };

  std::ostringstream out;
  out << svg_open(kCanvas, kCanvas);
  out << "<polygon points=\"" << fmt(v001[0]) << "," << fmt(v001[1]) << " " << fmt(v100[0]) << ","
      << fmt(v100[1]) << " " << fmt(v010[0]) << "," << fmt(v010[1])
      << "\" fill=\"none\" stroke=\"#999999\" stroke-width=\"1\"/>\n";

  auto to_px = [&](unsigned ix, unsigned iy) {
    return std::pair<double, double>{kCanvas * ix / double(samples),
                                     kCanvas * iy / double(samples)};
  };
  out << scan_path(
      samples,
      [&](unsigned ix, unsigned iy) {
        auto [px, py] = to_px(ix, iy);
        auto b = barycentric(px, py);
        return eval3(g, b[0], b[1], b[2]);
      },
      [&](unsigned ix, unsigned iy) { return to_px(ix, iy); });

  for (const auto& p : marked) {
    double sx = p.coords()[0].get_d(), sy = p.coords()[1].get_d(), sz = p.coords()[2].get_d();
    double sum = sx + sy + sz;
    if (sum == 0.0) continue;
    double px = (sx * v100[0] + sy * v010[0] + sz * v001[0]) / sum;
    double py = (sx * v100[1] + sy * v010[1] + sz * v001[1]) / sum;
    if (px < 0 || px > kCanvas || py < 0 || py > kCanvas) continue;
    out << marked_circle(px, py, p);
  }
  out << "</svg>\n";
  return out.str();
}

}  // namespace quadell::cli
