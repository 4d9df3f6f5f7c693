#pragma once

#include <array>
#include <filesystem>
#include <optional>
#include <string>
#include <vector>

#include "wavecgh/field.hpp"
#include "wavecgh/fringe_lut.hpp"
#include "wavecgh/metrics.hpp"
#include "wavecgh/synthesis.hpp"

namespace wavecgh {

// Effective configuration of a run. Fields mirror the JSON config file
// one-to-one; command-line flags override file values.
struct PipelineConfig {
  double wavelength = 532e-9;
  double pitch = 8e-6;
  double z = 0.1;
  int size = 256;

  double t_ll = 0.5;
  double t_l = 0.7;
  double t_full = 0.9;

  std::string object_path;
  std::string saliency_path;
  bool uniform_saliency = false;
  std::string out_dir = "wavecgh-out";
  std::string lut_cache_dir;  // empty: $WAVECGH_LUT_CACHE, then "lut-cache"
  bool intensity_recon = false;
  std::optional<std::uint64_t> random_phase_seed;
  int workers = 0;  // 0: one per hardware thread

  SceneParams scene() const;
  RefinementPlan plan() const;
  std::filesystem::path effective_lut_cache() const;
  int effective_workers() const;
  void validate_for_generate() const;
  std::string to_json() const;
};

PipelineConfig load_config(const std::filesystem::path& path);

struct LutCacheEntry {
  int block_size = 0;
  bool rebuilt = false;
  std::filesystem::path file;
};

struct LutBuildResult {
  LutSet luts;
  std::vector<LutCacheEntry> entries;
};

// Builds or loads the four cache entries. Every returned LUT has passed
// through the f32 cache representation, so a run sees identical fringe
// samples whether or not the cache already existed.
LutBuildResult lut_build(const PipelineConfig& config);

struct GenerateResult {
  std::filesystem::path manifest_path;
  std::array<std::filesystem::path, 4> stage_paths;
  OpCounter ops;
};

// Synthesizes the progressive hologram and writes the four stage files plus
// a manifest (config echo, operator counts) into the output directory.
GenerateResult run_generate(const PipelineConfig& config);

// Back-propagates a hologram file and writes a normalized magnitude PNG.
std::filesystem::path run_reconstruct(const std::filesystem::path& hologram_path,
                                      const std::filesystem::path& out_png, bool intensity);

struct RunMetricsResult {
  std::filesystem::path report_json_path;
  std::filesystem::path report_text_path;
  MetricsReport report;
};

// Scores a generate run against the point-wise oracle, computing and
// caching the oracle hologram in the run directory when absent.
RunMetricsResult run_metrics(const std::filesystem::path& run_dir);

// generate + reconstruct every stage and the oracle + metrics.
void run_pipeline(const PipelineConfig& config);

}  // namespace wavecgh
