#include <benchmark/benchmark.h>

#include "sidewinder/backbone.hpp"
#include "sidewinder/gait.hpp"
#include "sidewinder/locomotion.hpp"

using namespace sidewinder;

namespace {

ModelConfig config_with_links(int n) {
  ModelConfig cfg;
  cfg.n_links = n;
  cfg.delta_s = 2.0 * M_PI / n;
  return cfg;
}

}  // namespace

static void BM_BuildBackbone(benchmark::State& state) {
  const ModelConfig cfg = config_with_links(static_cast<int>(state.range(0)));
  const ShapeState a{0.8, 0.6, 0.0};
  for (auto _ : state) {
    benchmark::DoNotOptimize(build_backbone(a, cfg));
  }
  state.SetItemsProcessed(state.iterations() * state.range(0));
}
BENCHMARK(BM_BuildBackbone)->Arg(30)->Arg(120)->Arg(480);

static void BM_ShapeJacobianFull(benchmark::State& state) {
  const ModelConfig cfg = config_with_links(static_cast<int>(state.range(0)));
  const BackboneShape shape = build_backbone({0.8, 0.6, 0.0}, cfg);
  for (auto _ : state) {
    for (int i = 0; i < cfg.n_links; ++i) {
      benchmark::DoNotOptimize(shape_jacobian(shape, i));
    }
  }
  state.SetItemsProcessed(state.iterations() * state.range(0));
}
BENCHMARK(BM_ShapeJacobianFull)->Arg(30)->Arg(120);

static void BM_ConstraintSolve(benchmark::State& state) {
  const ModelConfig cfg = config_with_links(30);
  const BackboneShape shape = build_backbone({1.0, 0.0, 0.0}, cfg);
  const ContactSet contacts = find_contacts(shape, WorldPose{}, cfg.contact_tol);
  const ActuationRate rate{0.3, -0.7};
  for (auto _ : state) {
    benchmark::DoNotOptimize(solve_body_velocity(contacts, shape, rate));
  }
}
BENCHMARK(BM_ConstraintSolve);

static void BM_ExactPressures(benchmark::State& state) {
  const GaitParams g;
  const double t = 20.0 * g.wave_period();
  for (auto _ : state) {
    benchmark::DoNotOptimize(exact_pressures(t, g));
  }
}
BENCHMARK(BM_ExactPressures);
