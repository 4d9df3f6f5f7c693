#pragma once

#include <complex>
#include <cstdint>
#include <optional>
#include <vector>

#include "wavecgh/field.hpp"
#include "wavecgh/fringe_lut.hpp"
#include "wavecgh/haar.hpp"
#include "wavecgh/saliency.hpp"

namespace wavecgh {

// Saliency thresholds gating each refinement stage. The base level always
// covers the whole grid; finer stages demand strictly higher saliency, so
// the thresholds must be monotone.
struct RefinementPlan {
  static constexpr double kBaseThreshold = 0.0;

  double t_ll = 0.5;
  double t_l = 0.7;
  double t_full = 0.9;
  bool enable_ll = true;
  bool enable_l = true;
  bool enable_full = true;

  void validate() const;
};

// Which cells of a refinement stage passed its saliency gate.
struct GateMask {
  int width = 0;
  int height = 0;
  std::vector<std::uint8_t> on;

  bool at(int x, int y) const { return on[std::size_t(y) * width + x] != 0; }
  std::uint64_t count() const;
};

// Hologram snapshot after each stage, the operator tally, and the gate
// masks of the three refinement stages.
struct ProgressiveResult {
  ComplexField base_lll;
  ComplexField after_ll;
  ComplexField after_l;
  ComplexField after_full;
  GateMask mask_ll;
  GateMask mask_l;
  GateMask mask_full;
  OpCounter ops;

  const ComplexField& stage(int index) const;
};

inline constexpr std::array<std::string_view, 4> kStageNames = {
    "base_LLL", "after_LL", "after_L", "after_full"};

// Counter level that produced each stage snapshot.
inline constexpr std::array<OpLevel, 4> kStageOpLevels = {
    OpLevel::kBaseLll, OpLevel::kRefineLl, OpLevel::kRefineL, OpLevel::kRefineFull};

struct GridCell {
  int x = 0;
  int y = 0;
};

// plane += weight * crop(lut.support anchored at cell * block_size). Counts
// one operator at `level` even when the weight is zero.
void apply_block(ComplexField& plane, const FringeLut& lut, GridCell cell,
                 std::complex<double> weight, OpCounter& counter, OpLevel level);

// Applies the coarse-approximation LUT block on every approximation cell,
// whatever its saliency, so every reconstruction shows the full silhouette.
ComplexField synthesize_base(const HaarPyramid& pyramid, const SaliencyPyramid& saliency,
                             const LutSet& luts, OpCounter& counter, int workers = 1);

// Expands (h, v, d) into the residual between this level and the next finer
// one, then applies the lut block for every residual cell whose saliency at
// the finer factor strictly exceeds the threshold.
void refine(ComplexField& plane, const RealImage& detail_h, const RealImage& detail_v,
            const RealImage& detail_d, const RealImage& saliency_finer, const FringeLut& lut,
            double threshold, OpCounter& counter, OpLevel level, GateMask* mask = nullptr,
            int workers = 1);

// The full pipeline: 3-level Haar analysis, saliency quantization, base
// synthesis, then the three gated refinements, snapshotting the plane after
// each stage. With a random-phase seed the object amplitudes are rotated by
// per-pixel phases before decomposition.
ProgressiveResult synthesize_progressive(const RealImage& object, const RealImage& saliency,
                                         const SceneParams& scene, const RefinementPlan& plan,
                                         const LutSet& luts, int workers = 1,
                                         std::optional<std::uint64_t> random_phase_seed = {});

// Applies the 1x1 LUT at every object pixel: the undecomposed reference
// hologram, costing one operator per pixel.
ComplexField synthesize_pointwise_oracle(const RealImage& object, const SceneParams& scene,
                                         OpCounter& counter, const FringeLut& unit_lut,
                                         int workers = 1,
                                         std::optional<std::uint64_t> random_phase_seed = {});

// amplitude * exp(j * theta) with theta drawn per pixel from a seeded
// uniform [0, 2*pi) generator.
ComplexField random_phase_field(const RealImage& amplitude, std::uint64_t seed);

}  // namespace wavecgh
