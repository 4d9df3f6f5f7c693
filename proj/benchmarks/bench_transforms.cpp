#include <benchmark/benchmark.h>

#include <cmath>

#include "wavecgh/angular_spectrum.hpp"
#include "wavecgh/fft.hpp"
#include "wavecgh/haar.hpp"
#include "wavecgh/metrics.hpp"

namespace {

wavecgh::RealImage test_image(int n) {
  wavecgh::RealImage image(n, n);
  for (int y = 0; y < n; ++y) {
    for (int x = 0; x < n; ++x) {
      image.at(x, y) = 0.5 + 0.5 * std::sin(0.13 * x) * std::cos(0.07 * y);
    }
  }
  return image;
}

wavecgh::ComplexField test_field(int n) {
  const wavecgh::RealImage image = test_image(n);
  wavecgh::ComplexField field(n, n);
  for (std::size_t i = 0; i < field.size(); ++i) {
    field.data()[i] = {image.data()[i], -0.25 * image.data()[i]};
  }
  return field;
}

}  // namespace

static void BM_HaarAnalyze(benchmark::State& state) {
  const int n = int(state.range(0));
  const wavecgh::RealImage image = test_image(n);
  for (auto _ : state) {
    benchmark::DoNotOptimize(wavecgh::haar_analyze(image, 3));
  }
  state.SetItemsProcessed(state.iterations() * n * n);
}
BENCHMARK(BM_HaarAnalyze)->Arg(64)->Arg(256)->Arg(1024);

static void BM_HaarSynthesize(benchmark::State& state) {
  const int n = int(state.range(0));
  const wavecgh::HaarPyramid pyramid = wavecgh::haar_analyze(test_image(n), 3);
  for (auto _ : state) {
    benchmark::DoNotOptimize(wavecgh::haar_synthesize(pyramid));
  }
  state.SetItemsProcessed(state.iterations() * n * n);
}
BENCHMARK(BM_HaarSynthesize)->Arg(64)->Arg(256)->Arg(1024);

static void BM_Fft2d(benchmark::State& state) {
  const int n = int(state.range(0));
  const wavecgh::ComplexField field = test_field(n);
  for (auto _ : state) {
    benchmark::DoNotOptimize(wavecgh::fft_2d(field, false));
  }
  state.SetItemsProcessed(state.iterations() * n * n);
}
BENCHMARK(BM_Fft2d)->Arg(64)->Arg(256)->Arg(1024);

static void BM_Propagate(benchmark::State& state) {
  const int n = int(state.range(0));
  const wavecgh::SceneParams scene = wavecgh::make_scene(532e-9, 8e-6, 0.1, n);
  const wavecgh::PropagationKernel kernel = wavecgh::build_kernel(scene, scene.z());
  const wavecgh::ComplexField field = test_field(n);
  for (auto _ : state) {
    benchmark::DoNotOptimize(wavecgh::propagate(field, kernel));
  }
  state.SetItemsProcessed(state.iterations() * n * n);
}
BENCHMARK(BM_Propagate)->Arg(256)->Arg(512);

static void BM_Ssim(benchmark::State& state) {
  const int n = int(state.range(0));
  const wavecgh::RealImage a = test_image(n);
  wavecgh::RealImage b = a;
  for (auto& v : b.data()) v = 1.0 - v;
  for (auto _ : state) {
    benchmark::DoNotOptimize(wavecgh::ssim(a, b, 8, 0.01, 0.03, 1.0));
  }
  state.SetItemsProcessed(state.iterations() * n * n);
}
BENCHMARK(BM_Ssim)->Arg(256)->Arg(512);
