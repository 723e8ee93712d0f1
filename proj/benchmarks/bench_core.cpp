#include <benchmark/benchmark.h>

#include <random>

#include "htype/geometry.hpp"
#include "htype/group.hpp"
#include "htype/radial.hpp"

using namespace htype;

namespace {

Eigen::VectorXd unit_vector(int n, unsigned seed) {
  std::mt19937_64 rng(seed);
  std::normal_distribution<double> g;
  Eigen::VectorXd v(n);
  for (int i = 0; i < n; ++i) v(i) = g(rng);
  return v.normalized();
}

void BM_curvature(benchmark::State& state, CliffordSpec spec) {
  Space s = make_space(spec);
  for (auto _ : state) {
    CurvatureData c = compute_curvature(s);
    benchmark::DoNotOptimize(c.norm_nabla_R);
  }
}

void BM_metric_at(benchmark::State& state) {
  Space s = make_space({2, 1, 0});
  BallMetric bm(s);
  BallPoint b = s.unpack_ball(0.6 * unit_vector(s.dim(), 7));
  for (auto _ : state) {
    Eigen::MatrixXd g = bm.metric_at(b);
    benchmark::DoNotOptimize(g.data());
  }
}

void BM_christoffels(benchmark::State& state) {
  Space s = make_space({2, 1, 0});
  BallMetric bm(s);
  BallPoint b = s.unpack_ball(0.6 * unit_vector(s.dim(), 7));
  for (auto _ : state) {
    auto gamma = bm.christoffels_at(b);
    benchmark::DoNotOptimize(gamma.data());
  }
}

void BM_geodesic(benchmark::State& state) {
  Space s = make_space({2, 1, 0});
  BallMetric bm(s);
  Eigen::VectorXd w = unit_vector(s.dim(), 11);
  for (auto _ : state) {
    GeodesicPath p = geodesic_integrate(bm, w, 1.0, 1e-2);
    benchmark::DoNotOptimize(p.points.size());
  }
}

void BM_heat(benchmark::State& state) {
  Space s = make_space({2, 1, 0});
  RadialProfile init = gaussian_bump(s, 6.0, 200, 1.0, 0.25);
  for (auto _ : state) {
    HeatSolution sol = heat_solve(s, 6.0, 200, 0.5, 100, init);
    benchmark::DoNotOptimize(sol.mass.back());
  }
}

}  // namespace

BENCHMARK_CAPTURE(BM_curvature, dim7, CliffordSpec{2, 1, 0});
BENCHMARK_CAPTURE(BM_curvature, dim13, CliffordSpec{4, 1, 0});
BENCHMARK_CAPTURE(BM_curvature, dim25, CliffordSpec{8, 1, 0});
BENCHMARK(BM_metric_at);
BENCHMARK(BM_christoffels);
BENCHMARK(BM_geodesic);
BENCHMARK(BM_heat);

BENCHMARK_MAIN();
