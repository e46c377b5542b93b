#include <benchmark/benchmark.h>

#include "quadell/families.hpp"
#include "quadell/sampling.hpp"
#include "quadell/transport.hpp"

namespace {

using namespace quadell;

const QuadricForm& section2_q1() {
  static const QuadricForm q = [] {
    std::array<std::array<Rational, 4>, 4> m{};
    auto set = [&](int r, int c, long v) {
      m[r][c] = Rational(v);
      m[c][r] = Rational(v);
    };
    set(0, 0, 1);
    set(0, 1, 1);
    set(1, 1, 2);
    set(1, 2, -3);
    set(2, 3, -1);
    set(3, 3, 3);
    return QuadricForm(m);
  }();
  return q;
}

const QuadricForm& section2_q2() {
  static const QuadricForm q =
      QuadricForm::diagonal({Rational(-2), Rational(1), Rational(2), Rational(-1)});
  return q;
}

void BM_pipeline_section2(benchmark::State& state) {
  ProjectivePoint3 x(std::array<Int, 4>{1, 1, 1, 1});
  for (auto _ : state) {
    PipelineTrace trace = run_pipeline(section2_q1(), section2_q2(), x);
    benchmark::DoNotOptimize(trace.curve().a6);
  }
}
BENCHMARK(BM_pipeline_section2);

void BM_pipeline_klm(benchmark::State& state) {
  auto q = klm_quadrics(KlmInstance(state.range(0), state.range(0) + 1, state.range(0) + 3));
  for (auto _ : state) {
    PipelineTrace trace = run_pipeline(q.a, q.b, q.base);
    benchmark::DoNotOptimize(trace.split()->A);
  }
}
BENCHMARK(BM_pipeline_klm)->Arg(2)->Arg(11)->Arg(17);

void BM_transport_roundtrip(benchmark::State& state) {
  auto q = klm_quadrics(KlmInstance(2, 3, 5));
  PipelineTrace trace = run_pipeline(q.a, q.b, q.base);
  ProjectivePoint3 p(std::array<Int, 4>{1, 1, 1, -1});
  for (auto _ : state) {
    ProjectivePoint2 image = transport_forward(trace, p, CurveFrame::SplitForm);
    benchmark::DoNotOptimize(transport_backward(trace, image, CurveFrame::SplitForm));
  }
}
BENCHMARK(BM_transport_roundtrip);

void BM_sample_points(benchmark::State& state) {
  auto q = klm_quadrics(KlmInstance(1, 1, 5));
  auto stage = quadric_to_cubic(q.a, q.b, q.base);
  for (auto _ : state) {
    auto pts = sample_cubic_points(stage.cubic, {stage.base_image},
                                   {.want = static_cast<std::size_t>(state.range(0))});
    benchmark::DoNotOptimize(pts.size());
  }
}
BENCHMARK(BM_sample_points)->Arg(10)->Arg(20);

void BM_composite_extraction(benchmark::State& state) {
  auto q = klm_quadrics(KlmInstance(2, 3, 5));
  PipelineTrace trace = run_pipeline(q.a, q.b, q.base);
  for (auto _ : state) {
    auto composite = extract_composite(trace, CurveFrame::SplitForm);
    benchmark::DoNotOptimize(std::get<QuadraticComposite>(composite).x.c[0]);
  }
}
BENCHMARK(BM_composite_extraction);

}  // namespace

BENCHMARK_MAIN();
