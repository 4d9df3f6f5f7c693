#include <benchmark/benchmark.h>

#include <cmath>

#include "wavecgh/fringe_lut.hpp"
#include "wavecgh/saliency.hpp"
#include "wavecgh/synthesis.hpp"

namespace {

wavecgh::RealImage test_object(int n) {
  wavecgh::RealImage image(n, n);
  for (int y = 0; y < n; ++y) {
    for (int x = 0; x < n; ++x) {
      image.at(x, y) = 0.5 + 0.4 * std::sin(0.21 * x + 0.11 * y);
    }
  }
  return image;
}

}  // namespace

static void BM_BuildBlockLut(benchmark::State& state) {
  const wavecgh::SceneParams scene = wavecgh::make_scene(532e-9, 8e-6, 0.1, 256);
  const int block = int(state.range(0));
  for (auto _ : state) {
    benchmark::DoNotOptimize(wavecgh::build_block_lut(scene, block));
  }
}
BENCHMARK(BM_BuildBlockLut)->Arg(1)->Arg(8);

static void BM_ApplyBlock(benchmark::State& state) {
  const int n = int(state.range(0));
  const wavecgh::SceneParams scene = wavecgh::make_scene(532e-9, 8e-6, 0.1, n);
  const wavecgh::FringeLut lut = wavecgh::build_block_lut(scene, 8);
  wavecgh::ComplexField plane(n, n);
  wavecgh::OpCounter counter;
  for (auto _ : state) {
    wavecgh::apply_block(plane, lut, {1, 1}, 0.75, counter, wavecgh::OpLevel::kBaseLll);
    benchmark::DoNotOptimize(plane.data().data());
  }
  state.SetItemsProcessed(state.iterations() * n * n);
}
BENCHMARK(BM_ApplyBlock)->Arg(256)->Arg(512);

static void BM_PointwiseOracle(benchmark::State& state) {
  const int n = int(state.range(0));
  const wavecgh::SceneParams scene = wavecgh::make_scene(532e-9, 8e-6, 0.1, n);
  const wavecgh::FringeLut unit = wavecgh::build_block_lut(scene, 1);
  const wavecgh::RealImage object = test_object(n);
  for (auto _ : state) {
    wavecgh::OpCounter counter;
    benchmark::DoNotOptimize(
        wavecgh::synthesize_pointwise_oracle(object, scene, counter, unit));
  }
}
BENCHMARK(BM_PointwiseOracle)->Arg(64)->Arg(128);

static void BM_ProgressiveUniform(benchmark::State& state) {
  const int n = int(state.range(0));
  const wavecgh::SceneParams scene = wavecgh::make_scene(532e-9, 8e-6, 0.1, n);
  const wavecgh::LutSet luts = wavecgh::LutSet::build(scene);
  const wavecgh::RealImage object = test_object(n);
  const wavecgh::RealImage saliency = wavecgh::uniform_saliency(n);
  wavecgh::RefinementPlan plan;
  plan.t_ll = plan.t_l = plan.t_full = 0.0;
  for (auto _ : state) {
    benchmark::DoNotOptimize(
        wavecgh::synthesize_progressive(object, saliency, scene, plan, luts));
  }
}
BENCHMARK(BM_ProgressiveUniform)->Arg(64)->Arg(128);
