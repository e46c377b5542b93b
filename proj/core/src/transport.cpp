#include "quadell/transport.hpp"

#include "quadell/errors.hpp"

namespace quadell {

PipelineTrace run_pipeline(const QuadricForm& a, const QuadricForm& b,
                           const ProjectivePoint3& x) {
  QuadricStage stage = quadric_to_cubic(a, b, x);
  CubicChain chain = run_cubic_chain(stage.cubic, stage.base_image);
  return PipelineTrace{std::move(stage), std::move(chain)};
}

namespace {

bool wants_record(const StepRecord& rec, CurveFrame frame) {
  return frame == CurveFrame::SplitForm || rec.name != "shift-roots";
}

}  // namespace

ProjectivePoint2 chain_forward(const CubicChain& chain, const ProjectivePoint2& p,
                               CurveFrame frame) {
  if (frame == CurveFrame::SplitForm && !chain.split)
    throw Error(ErrorKind::InvalidArgument, "chain_forward", "no split form in this trace");
  if (chain.steps.empty() || !chain.steps.front().cubic_before.vanishes_at(p))
    throw Error(ErrorKind::PointNotOnCubic, "chain_forward", p.str());
  ProjectivePoint2 pt = p;
  for (const auto& rec : chain.steps) {
    if (!wants_record(rec, frame)) continue;
    pt = (rec.kind == StepKind::Quadratic) ? rho_at(rec.cubic_before, pt)
                                           : rec.forward->apply(pt);
  }
  return pt;
}

ProjectivePoint2 chain_backward(const CubicChain& chain, const ProjectivePoint2& p,
                                CurveFrame frame) {
  if (frame == CurveFrame::SplitForm && !chain.split)
    throw Error(ErrorKind::InvalidArgument, "chain_backward", "no split form in this trace");
  const TernaryCubic target = (frame == CurveFrame::SplitForm)
                                  ? chain.split->curve().homogeneous()
                                  : chain.curve.homogeneous();
  if (!target.vanishes_at(p)) throw Error(ErrorKind::NotOnCurve, "chain_backward", p.str());
  ProjectivePoint2 pt = p;
  for (auto it = chain.steps.rbegin(); it != chain.steps.rend(); ++it) {
    const auto& rec = *it;
    if (!wants_record(rec, frame)) continue;
    pt = (rec.kind == StepKind::Quadratic) ? psi5_at(rec.cubic_after, pt)
                                           : rec.inverse->apply(pt);
  }
  return pt;
}

ProjectivePoint2 transport_forward(const PipelineTrace& trace, const ProjectivePoint3& p,
                                   CurveFrame frame) {
  ProjectivePoint3 moved = trace.quadric.forward.apply(p);
  if (!trace.quadric.pencil.on_intersection(moved))
    throw Error(ErrorKind::PointNotOnIntersection, "transport_forward", p.str());
  ProjectivePoint2 plane = phi(trace.quadric.pencil, moved);
  return chain_forward(trace.chain, plane, frame);
}

ProjectivePoint3 transport_backward(const PipelineTrace& trace, const ProjectivePoint2& p,
                                    CurveFrame frame) {
  ProjectivePoint2 plane = chain_backward(trace.chain, p, frame);
  ProjectivePoint3 lifted = psi(trace.quadric.pencil, plane);
  return trace.quadric.forward.inverse().apply(lifted);
}

namespace {

/* Both closed-form composites inherit the projection's base locus: they
 * vanish at the distinguished point (and only there on the curve), where
 * the stepwise transport with its redefinitions must be used instead. */
ProjectivePoint2 composite_value(std::array<Rational, 3> raw) {
  if (raw[0] == 0 && raw[1] == 0 && raw[2] == 0)
    throw Error(ErrorKind::MapUndefined, "composite_map", "point on the base locus");
  return normalize_point(raw);
}

}  // namespace

ProjectivePoint2 LinearComposite::apply(const ProjectivePoint3& p) const {
  auto v = p.rational_coords();
  std::array<Rational, 3> out{};
  for (std::size_t r = 0; r < 3; ++r)
    for (std::size_t c = 0; c < 4; ++c) out[r] += m[r][c] * v[c];
  return composite_value(out);
}

ProjectivePoint2 QuadraticComposite::apply(const ProjectivePoint3& p) const {
  auto v = p.rational_coords();
  return composite_value({x.evaluate(v), y.evaluate(v), z.evaluate(v)});
}

namespace {

using Mat34 = std::array<std::array<Rational, 4>, 3>;

Mat34 compose_3x3_with_3x4(const LinearMap3& a, const Mat34& b) {
  Mat34 out{};
  for (std::size_t r = 0; r < 3; ++r)
    for (std::size_t c = 0; c < 4; ++c)
      for (std::size_t k = 0; k < 3; ++k) out[r][c] += a.matrix()[r][k] * b[k][c];
  return out;
}

LinearForm4 row_as_form(const Mat34& m, std::size_t r) {
  LinearForm4 f;
  f.c = m[r];
  return f;
}

QuadraticForm4 combine(const Rational& cx, const QuadraticForm4& qx, const Rational& cy,
                       const QuadraticForm4& qy, const Rational& cz, const QuadraticForm4& qz) {
  QuadraticForm4 out;
  for (std::size_t t = 0; t < QuadraticForm4::kTerms; ++t)
    out.c[t] = cx * qx.c[t] + cy * qy.c[t] + cz * qz.c[t];
  return out;
}

}  // namespace

CompositeMap extract_composite(const PipelineTrace& trace, CurveFrame frame) {
  // The plane projection after the 4x4 translation is linear: its rows are
  // the first three rows of the forward matrix.
  Mat34 acc{};
  for (std::size_t r = 0; r < 3; ++r) acc[r] = trace.quadric.forward.matrix()[r];

  bool quadratic_seen = false;
  QuadraticForm4 qx, qy, qz;
  for (const auto& rec : trace.chain.steps) {
    if (!wants_record(rec, frame)) continue;
    if (rec.kind == StepKind::Quadratic) {
      // (X,Y,Z) -> (XZ, XY, Z^2) applied to the accumulated linear forms
      LinearForm4 lx = row_as_form(acc, 0), ly = row_as_form(acc, 1), lz = row_as_form(acc, 2);
      qx = lx * lz;
      qy = lx * ly;
      qz = lz * lz;
      quadratic_seen = true;
      continue;
    }
    if (!quadratic_seen) {
      acc = compose_3x3_with_3x4(*rec.forward, acc);
    } else {
      const auto& m = rec.forward->matrix();
      QuadraticForm4 nx = combine(m[0][0], qx, m[0][1], qy, m[0][2], qz);
      QuadraticForm4 ny = combine(m[1][0], qx, m[1][1], qy, m[1][2], qz);
      QuadraticForm4 nz = combine(m[2][0], qx, m[2][1], qy, m[2][2], qz);
      qx = nx;
      qy = ny;
      qz = nz;
    }
  }
  if (!quadratic_seen) return LinearComposite{acc};
  return QuadraticComposite{qx, qy, qz};
}

}  // namespace quadell
