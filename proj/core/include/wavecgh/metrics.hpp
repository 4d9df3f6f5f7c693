#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "wavecgh/field.hpp"
#include "wavecgh/synthesis.hpp"

namespace wavecgh {

// Mean structural similarity over unit-stride box windows, the plain
// luminance/contrast/structure product with C1 = (k1*L)^2, C2 = (k2*L)^2.
double ssim(const RealImage& a, const RealImage& b, int window, double k1, double k2,
            double dynamic_range);

struct StageMetrics {
  std::string name;
  double ssim = 0.0;
  std::uint64_t ops = 0;
  std::uint64_t ops_cumulative = 0;
};

// Per-stage SSIM against the point-wise oracle reconstruction, paired with
// cumulative operator counts.
struct MetricsReport {
  std::vector<StageMetrics> stages;
  std::uint64_t pointwise_ops = 0;
  int window = 8;
  double k1 = 0.01;
  double k2 = 0.03;
  double dynamic_range = 1.0;
  bool intensity = false;

  std::string to_json() const;
  std::string to_table() const;
};

// Reconstructs every stage snapshot with the scene used for oracle_recon and
// scores it. The dynamic range is the value range of the oracle
// reconstruction, which keeps the scores independent of scene scale.
MetricsReport build_report(const ProgressiveResult& result, const RealImage& oracle_recon,
                           const SceneParams& scene, bool intensity = false);

}  // namespace wavecgh
