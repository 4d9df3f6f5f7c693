#include "wavecgh/synthesis.hpp"

#include <numbers>
#include <random>
#include <string>
#include <utility>

#include "wavecgh/errors.hpp"
#include "wavecgh/parallel.hpp"

namespace wavecgh {

namespace {

// plane += weight * crop(support anchored at (ax, ay)). The crop never
// leaves the support: offsets span [-(N-1), N-1] for any anchor on the
// plane. A zero weight adds exactly zero, so it can return early.
void apply_block_unchecked(ComplexField& plane, const FringeLut& lut, int ax, int ay,
                           std::complex<double> weight) {
  if (weight.real() == 0.0 && weight.imag() == 0.0) return;
  const int n = plane.width();
  const int sw = 2 * n - 1;
  const auto* support = lut.support().data().data();
  auto* dst = plane.data().data();

  if (weight.imag() == 0.0) {
    // Real coefficient: stream the interleaved (re, im) doubles directly.
    const double wr = weight.real();
    for (int y = 0; y < n; ++y) {
      const double* s = reinterpret_cast<const double*>(
          support + std::size_t(y - ay + n - 1) * sw + (n - 1 - ax));
      double* p = reinterpret_cast<double*>(dst + std::size_t(y) * n);
      for (int i = 0; i < 2 * n; ++i) p[i] += wr * s[i];
    }
    return;
  }
  for (int y = 0; y < n; ++y) {
    const auto* s = support + std::size_t(y - ay + n - 1) * sw + (n - 1 - ax);
    auto* p = dst + std::size_t(y) * n;
    for (int x = 0; x < n; ++x) p[x] += weight * s[x];
  }
}

void require_plane_matches(const ComplexField& plane, const FringeLut& lut,
                           const char* where) {
  const int n = lut.scene().plane_size();
  if (plane.width() != n || plane.height() != n) {
    throw ValidationError(std::string(where) + ": plane size does not match the LUT scene");
  }
}

// Shared body of the base and refinement stages: applies the LUT block on
// the listed cells of an m x m coefficient grid, accumulating with a
// worker-count-independent reduction and counting one operator per cell.
void apply_cells(ComplexField& plane, const FringeLut& lut, int grid_size,
                 const std::vector<std::uint32_t>& cells, const RealImage& coeff_re,
                 const RealImage* coeff_im, OpCounter& counter, OpLevel level, int workers) {
  const int b = lut.block_size();
  accumulate_deterministic(
      plane, cells.size(), workers, [&](std::size_t item, ComplexField& partial) {
        const int cell = int(cells[item]);
        const int x = cell % grid_size;
        const int y = cell / grid_size;
        const std::complex<double> w{coeff_re.at(x, y),
                                     coeff_im ? coeff_im->at(x, y) : 0.0};
        apply_block_unchecked(partial, lut, x * b, y * b, w);
      });
  counter.add(level, cells.size());
}

std::vector<std::uint32_t> all_cells(int grid_size) {
  std::vector<std::uint32_t> cells(std::size_t(grid_size) * grid_size);
  for (std::size_t i = 0; i < cells.size(); ++i) cells[i] = std::uint32_t(i);
  return cells;
}

ComplexField base_stage(const RealImage& approx_re, const RealImage* approx_im,
                        const FringeLut& lut, OpCounter& counter, int workers) {
  const int n = lut.scene().plane_size();
  const int m = approx_re.width();
  if (m * lut.block_size() != n) {
    throw ValidationError("synthesize_base: approximation grid does not tile the plane");
  }
  ComplexField plane(n, n);
  apply_cells(plane, lut, m, all_cells(m), approx_re, approx_im, counter,
              OpLevel::kBaseLll, workers);
  return plane;
}

void refine_stage(ComplexField& plane, const RealImage& residual_re,
                  const RealImage* residual_im, const RealImage& saliency_finer,
                  const FringeLut& lut, double threshold, OpCounter& counter, OpLevel level,
                  GateMask* mask, int workers) {
  require_plane_matches(plane, lut, "refine");
  const int m = residual_re.width();
  if (residual_re.height() != m) throw ValidationError("refine: residual must be square");
  if (residual_im && !residual_re.same_size(*residual_im)) {
    throw ValidationError("refine: residual components differ in size");
  }
  if (!saliency_finer.same_size(residual_re)) {
    throw ValidationError("refine: saliency level does not match the residual resolution");
  }
  if (m * lut.block_size() != plane.width()) {
    throw ValidationError("refine: LUT block size does not match the residual level");
  }

  GateMask gate;
  gate.width = m;
  gate.height = m;
  gate.on.assign(std::size_t(m) * m, 0);
  std::vector<std::uint32_t> gated;
  for (int y = 0; y < m; ++y) {
    for (int x = 0; x < m; ++x) {
      if (saliency_finer.at(x, y) > threshold) {
        gate.on[std::size_t(y) * m + x] = 1;
        gated.push_back(std::uint32_t(y * m + x));
      }
    }
  }

  apply_cells(plane, lut, m, gated, residual_re, residual_im, counter, level, workers);
  if (mask) *mask = std::move(gate);
}

}  // namespace

void RefinementPlan::validate() const {
  if (!(kBaseThreshold <= t_ll && t_ll <= t_l && t_l <= t_full && t_full <= 1.0)) {
    throw ValidationError("thresholds: need 0 <= t_ll <= t_l <= t_full <= 1");
  }
}

std::uint64_t GateMask::count() const {
  std::uint64_t n = 0;
  for (auto v : on) n += v != 0;
  return n;
}

const ComplexField& ProgressiveResult::stage(int index) const {
  switch (index) {
    case 0: return base_lll;
    case 1: return after_ll;
    case 2: return after_l;
    case 3: return after_full;
    default: throw ValidationError("ProgressiveResult: stage index out of range");
  }
}

void apply_block(ComplexField& plane, const FringeLut& lut, GridCell cell,
                 std::complex<double> weight, OpCounter& counter, OpLevel level) {
  require_plane_matches(plane, lut, "apply_block");
  const int cells = plane.width() / lut.block_size();
  if (cell.x < 0 || cell.y < 0 || cell.x >= cells || cell.y >= cells) {
    throw ValidationError("apply_block: cell (" + std::to_string(cell.x) + "," +
                          std::to_string(cell.y) + ") out of range");
  }
  apply_block_unchecked(plane, lut, cell.x * lut.block_size(), cell.y * lut.block_size(),
                        weight);
  counter.add(level, 1);
}

ComplexField synthesize_base(const HaarPyramid& pyramid, const SaliencyPyramid& saliency,
                             const LutSet& luts, OpCounter& counter, int workers) {
  if (saliency.full_size() != pyramid.original_size) {
    throw ValidationError("synthesize_base: saliency and pyramid sizes differ");
  }
  const int block = pyramid.original_size / pyramid.approx.width();
  return base_stage(pyramid.approx, nullptr, luts.of(block), counter, workers);
}

void refine(ComplexField& plane, const RealImage& detail_h, const RealImage& detail_v,
            const RealImage& detail_d, const RealImage& saliency_finer, const FringeLut& lut,
            double threshold, OpCounter& counter, OpLevel level, GateMask* mask,
            int workers) {
  const RealImage residual = expand_residual(detail_h, detail_v, detail_d);
  refine_stage(plane, residual, nullptr, saliency_finer, lut, threshold, counter, level,
               mask, workers);
}

ProgressiveResult synthesize_progressive(const RealImage& object, const RealImage& saliency,
                                         const SceneParams& scene, const RefinementPlan& plan,
                                         const LutSet& luts, int workers,
                                         std::optional<std::uint64_t> random_phase_seed) {
  plan.validate();
  const int n = scene.plane_size();
  if (n < 8) throw ValidationError("synthesize_progressive: plane_size must be >= 8");
  if (object.width() != n || object.height() != n) {
    throw ValidationError("synthesize_progressive: object size does not match the scene");
  }
  if (!saliency.same_size(object)) {
    throw ValidationError("synthesize_progressive: saliency size does not match the object");
  }
  require_finite(object, "object");
  for (int b : kLutBlockSizes) {
    if (!luts.has(b)) {
      throw ValidationError("synthesize_progressive: missing LUT for block size " +
                            std::to_string(b));
    }
  }
  if (!(luts.of(1).scene() == scene)) {
    throw ValidationError("synthesize_progressive: LUTs built for a different scene");
  }

  constexpr int kLevels = 3;
  RealImage amp_re = object;
  std::optional<RealImage> amp_im;
  if (random_phase_seed) {
    const ComplexField rotated = random_phase_field(object, *random_phase_seed);
    amp_im = RealImage(n, n);
    for (std::size_t i = 0; i < rotated.size(); ++i) {
      amp_re.data()[i] = rotated.data()[i].real();
      amp_im->data()[i] = rotated.data()[i].imag();
    }
  }

  const HaarPyramid pyr_re = haar_analyze(amp_re, kLevels);
  std::optional<HaarPyramid> pyr_im;
  if (amp_im) pyr_im = haar_analyze(*amp_im, kLevels);
  const SaliencyPyramid sal = quantize_saliency(saliency);

  ProgressiveResult result;
  ComplexField plane = base_stage(pyr_re.approx, pyr_im ? &pyr_im->approx : nullptr,
                                  luts.of(1 << kLevels), result.ops, workers);
  result.base_lll = plane;

  auto run_refine = [&](int detail_index, double threshold, bool enabled, OpLevel level,
                        GateMask& mask_out) {
    const DetailBands& bands = pyr_re.details[detail_index];
    const RealImage residual_re = expand_residual(bands.h, bands.v, bands.d);
    const int m = residual_re.width();
    if (!enabled) {
      mask_out = GateMask{m, m, std::vector<std::uint8_t>(std::size_t(m) * m, 0)};
      return;
    }
    std::optional<RealImage> residual_im;
    if (pyr_im) {
      const DetailBands& ibands = pyr_im->details[detail_index];
      residual_im = expand_residual(ibands.h, ibands.v, ibands.d);
    }
    const int factor = n / m;
    refine_stage(plane, residual_re, residual_im ? &*residual_im : nullptr,
                 sal.by_factor(factor), luts.of(factor), threshold, result.ops, level,
                 &mask_out, workers);
  };

  run_refine(2, plan.t_ll, plan.enable_ll, OpLevel::kRefineLl, result.mask_ll);
  result.after_ll = plane;
  run_refine(1, plan.t_l, plan.enable_l, OpLevel::kRefineL, result.mask_l);
  result.after_l = plane;
  run_refine(0, plan.t_full, plan.enable_full, OpLevel::kRefineFull, result.mask_full);
  result.after_full = std::move(plane);
  return result;
}

ComplexField synthesize_pointwise_oracle(const RealImage& object, const SceneParams& scene,
                                         OpCounter& counter, const FringeLut& unit_lut,
                                         int workers,
                                         std::optional<std::uint64_t> random_phase_seed) {
  const int n = scene.plane_size();
  if (object.width() != n || object.height() != n) {
    throw ValidationError("pointwise oracle: object size does not match the scene");
  }
  if (unit_lut.block_size() != 1) {
    throw ValidationError("pointwise oracle: needs the 1x1 LUT");
  }
  if (!(unit_lut.scene() == scene)) {
    throw ValidationError("pointwise oracle: LUT built for a different scene");
  }
  require_finite(object, "object");

  RealImage amp_re = object;
  std::optional<RealImage> amp_im;
  if (random_phase_seed) {
    const ComplexField rotated = random_phase_field(object, *random_phase_seed);
    amp_im = RealImage(n, n);
    for (std::size_t i = 0; i < rotated.size(); ++i) {
      amp_re.data()[i] = rotated.data()[i].real();
      amp_im->data()[i] = rotated.data()[i].imag();
    }
  }

  ComplexField plane(n, n);
  apply_cells(plane, unit_lut, n, all_cells(n), amp_re, amp_im ? &*amp_im : nullptr,
              counter, OpLevel::kPointwiseOracle, workers);
  return plane;
}

ComplexField random_phase_field(const RealImage& amplitude, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> angle(0.0, 2.0 * std::numbers::pi);
  ComplexField out(amplitude.width(), amplitude.height());
  for (std::size_t i = 0; i < out.size(); ++i) {
    out.data()[i] = std::polar(amplitude.data()[i], angle(rng));
  }
  return out;
}

}  // namespace wavecgh
