#include "wavecgh/pipeline.hpp"

#include <cstdlib>
#include <fstream>
#include <set>
#include <utility>

#include <json.hpp>

#include "wavecgh/angular_spectrum.hpp"
#include "wavecgh/errors.hpp"
#include "wavecgh/image_io.hpp"
#include "wavecgh/parallel.hpp"
#include "wavecgh/saliency.hpp"
#include "wavecgh/version.hpp"

namespace wavecgh {

namespace fs = std::filesystem;
using nlohmann::json;

namespace {

json config_to_json(const PipelineConfig& c) {
  json j;
  j["wavelength"] = c.wavelength;
  j["pitch"] = c.pitch;
  j["z"] = c.z;
  j["size"] = c.size;
  j["t_ll"] = c.t_ll;
  j["t_l"] = c.t_l;
  j["t_full"] = c.t_full;
  j["object"] = c.object_path;
  j["saliency"] = c.saliency_path;
  j["uniform_saliency"] = c.uniform_saliency;
  j["out"] = c.out_dir;
  j["lut_cache"] = c.lut_cache_dir;
  j["intensity_recon"] = c.intensity_recon;
  if (c.random_phase_seed) {
    j["random_phase_seed"] = *c.random_phase_seed;
  } else {
    j["random_phase_seed"] = nullptr;
  }
  j["workers"] = c.workers;
  return j;
}

PipelineConfig config_from_json(const json& j) {
  static const std::set<std::string> known = {
      "wavelength", "pitch",           "z",
      "size",       "t_ll",            "t_l",
      "t_full",     "object",          "saliency",
      "uniform_saliency", "out",       "lut_cache",
      "intensity_recon",  "random_phase_seed", "workers"};
  if (!j.is_object()) throw ValidationError("config: expected a JSON object");
  for (const auto& [key, value] : j.items()) {
    if (!known.count(key)) throw ValidationError("config: unknown field '" + key + "'");
  }

  PipelineConfig c;
  try {
    if (j.contains("wavelength")) c.wavelength = j.at("wavelength").get<double>();
    if (j.contains("pitch")) c.pitch = j.at("pitch").get<double>();
    if (j.contains("z")) c.z = j.at("z").get<double>();
    if (j.contains("size")) c.size = j.at("size").get<int>();
    if (j.contains("t_ll")) c.t_ll = j.at("t_ll").get<double>();
    if (j.contains("t_l")) c.t_l = j.at("t_l").get<double>();
    if (j.contains("t_full")) c.t_full = j.at("t_full").get<double>();
    if (j.contains("object")) c.object_path = j.at("object").get<std::string>();
    if (j.contains("saliency")) c.saliency_path = j.at("saliency").get<std::string>();
    if (j.contains("uniform_saliency")) {
      c.uniform_saliency = j.at("uniform_saliency").get<bool>();
    }
    if (j.contains("out")) c.out_dir = j.at("out").get<std::string>();
    if (j.contains("lut_cache")) c.lut_cache_dir = j.at("lut_cache").get<std::string>();
    if (j.contains("intensity_recon")) {
      c.intensity_recon = j.at("intensity_recon").get<bool>();
    }
    if (j.contains("random_phase_seed") && !j.at("random_phase_seed").is_null()) {
      c.random_phase_seed = j.at("random_phase_seed").get<std::uint64_t>();
    }
    if (j.contains("workers")) c.workers = j.at("workers").get<int>();
  } catch (const json::exception& e) {
    throw ValidationError(std::string("config: ") + e.what());
  }
  return c;
}

void write_text_file(const fs::path& path, const std::string& content) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw IoError("cannot open " + path.string() + " for writing");
  out << content;
  if (!out) throw IoError("write failed for " + path.string());
}

json read_json_file(const fs::path& path, const char* what) {
  std::ifstream in(path);
  if (!in) throw IoError(std::string(what) + ": cannot open " + path.string());
  json j;
  try {
    in >> j;
  } catch (const json::exception& e) {
    throw ValidationError(std::string(what) + ": " + e.what());
  }
  return j;
}

fs::path stage_file_name(int stage) {
  return fs::path(std::string(kStageNames[stage]) + ".cgh");
}

}  // namespace

SceneParams PipelineConfig::scene() const { return make_scene(wavelength, pitch, z, size); }

RefinementPlan PipelineConfig::plan() const {
  RefinementPlan p;
  p.t_ll = t_ll;
  p.t_l = t_l;
  p.t_full = t_full;
  p.validate();
  return p;
}

fs::path PipelineConfig::effective_lut_cache() const {
  if (!lut_cache_dir.empty()) return lut_cache_dir;
  if (const char* env = std::getenv("WAVECGH_LUT_CACHE"); env && *env) return env;
  return "lut-cache";
}

int PipelineConfig::effective_workers() const {
  return workers > 0 ? workers : default_worker_count();
}

void PipelineConfig::validate_for_generate() const {
  scene();  // throws with the offending field name
  if (size < 8) throw ValidationError("size: plane size must be >= 8");
  plan();
  if (object_path.empty()) throw ValidationError("object: an object image is required");
  if (!uniform_saliency && saliency_path.empty()) {
    throw ValidationError(
        "saliency: provide a saliency map or enable the uniform fallback");
  }
  if (workers < 0) throw ValidationError("workers: must be >= 0");
}

std::string PipelineConfig::to_json() const { return config_to_json(*this).dump(2) + "\n"; }

PipelineConfig load_config(const fs::path& path) {
  return config_from_json(read_json_file(path, "config"));
}

LutBuildResult lut_build(const PipelineConfig& config) {
  const SceneParams scene = config.scene();
  const fs::path dir = config.effective_lut_cache();
  std::error_code ec;
  fs::create_directories(dir, ec);
  if (ec) throw IoError("lut cache: cannot create directory " + dir.string());

  LutBuildResult result;
  for (int b : kLutBlockSizes) {
    const fs::path file = dir / ("lut_b" + std::to_string(b) + ".cghl");
    LutCacheEntry entry{b, false, file};
    std::optional<FringeLut> lut;
    if (fs::exists(file)) {
      try {
        lut = lut_cache_load(file, scene, b);
      } catch (const IoError&) {
        lut.reset();  // stale or corrupt: rebuild below
      } catch (const ValidationError&) {
        lut.reset();
      }
    }
    if (!lut) {
      lut_cache_store(build_block_lut(scene, b, config.effective_workers()), file);
      lut = lut_cache_load(file, scene, b);
      entry.rebuilt = true;
    }
    result.luts.put(std::move(*lut));
    result.entries.push_back(std::move(entry));
  }
  return result;
}

GenerateResult run_generate(const PipelineConfig& config) {
  config.validate_for_generate();
  const SceneParams scene = config.scene();

  const RealImage object = load_image(config.object_path);
  if (object.width() != config.size || object.height() != config.size) {
    throw ValidationError("size: object image is " + std::to_string(object.width()) + "x" +
                          std::to_string(object.height()) + " but configured size is " +
                          std::to_string(config.size));
  }
  const RealImage saliency = config.uniform_saliency ? uniform_saliency(config.size)
                                                     : load_saliency(config.saliency_path);
  if (!saliency.same_size(object)) {
    throw ValidationError("saliency: map size does not match the object image");
  }

  const LutBuildResult luts = lut_build(config);
  const ProgressiveResult result =
      synthesize_progressive(object, saliency, scene, config.plan(), luts.luts,
                             config.effective_workers(), config.random_phase_seed);

  std::error_code ec;
  fs::create_directories(config.out_dir, ec);
  if (ec) throw IoError("out: cannot create directory " + config.out_dir);

  GenerateResult out;
  out.ops = result.ops;
  json stages = json::array();
  std::uint64_t cumulative = 0;
  for (int s = 0; s < 4; ++s) {
    const fs::path path = fs::path(config.out_dir) / stage_file_name(s);
    save_hologram(result.stage(s), scene, path);
    out.stage_paths[s] = path;
    const std::uint64_t ops = result.ops.get(kStageOpLevels[s]);
    cumulative += ops;
    stages.push_back({{"name", std::string(kStageNames[s])},
                      {"file", stage_file_name(s).string()},
                      {"ops", ops},
                      {"ops_cumulative", cumulative}});
  }

  json manifest;
  manifest["artifact"] = {{"name", std::string(kArtifactName)},
                          {"version", std::string(kVersion)}};
  // Worker count never affects the results, so it is not part of the echo;
  // this keeps manifests byte-identical across worker counts.
  json config_echo = config_to_json(config);
  config_echo.erase("workers");
  manifest["config"] = config_echo;
  manifest["stages"] = stages;
  manifest["ops_total"] = cumulative;

  out.manifest_path = fs::path(config.out_dir) / "manifest.json";
  write_text_file(out.manifest_path, manifest.dump(2) + "\n");
  return out;
}

fs::path run_reconstruct(const fs::path& hologram_path, const fs::path& out_png,
                         bool intensity) {
  const auto [field, scene] = load_hologram(hologram_path);
  const RealImage recon = reconstruct(field, scene, intensity);
  ComplexField wrapped(recon.width(), recon.height());
  for (std::size_t i = 0; i < recon.size(); ++i) {
    wrapped.data()[i] = {recon.data()[i], 0.0};
  }
  save_magnitude_png(wrapped, out_png, /*normalize=*/true);
  return out_png;
}

RunMetricsResult run_metrics(const fs::path& run_dir) {
  const fs::path manifest_path = run_dir / "manifest.json";
  if (!fs::exists(manifest_path)) {
    throw IoError("metrics: missing manifest " + manifest_path.string());
  }
  const json manifest = read_json_file(manifest_path, "manifest");
  if (!manifest.contains("config") || !manifest.contains("stages")) {
    throw ValidationError("manifest: missing config or stages");
  }
  const PipelineConfig config = config_from_json(manifest.at("config"));
  const SceneParams scene = config.scene();

  ProgressiveResult result;
  const auto& stages = manifest.at("stages");
  if (!stages.is_array() || stages.size() != 4) {
    throw ValidationError("manifest: expected four stages");
  }
  for (int s = 0; s < 4; ++s) {
    std::string file;
    std::uint64_t ops = 0;
    try {
      const auto& entry = stages.at(s);
      file = entry.at("file").get<std::string>();
      ops = entry.at("ops").get<std::uint64_t>();
    } catch (const json::exception& e) {
      throw ValidationError(std::string("manifest: ") + e.what());
    }
    auto [field, file_scene] = load_hologram(run_dir / file);
    if (!(file_scene == scene)) {
      throw ValidationError("metrics: stage file scene differs from the manifest scene");
    }
    switch (s) {
      case 0: result.base_lll = std::move(field); break;
      case 1: result.after_ll = std::move(field); break;
      case 2: result.after_l = std::move(field); break;
      case 3: result.after_full = std::move(field); break;
    }
    result.ops.add(kStageOpLevels[s], ops);
  }

  // Oracle hologram: reuse the cached file when it matches, else compute,
  // cache, and reload so scores always come from f32 file precision.
  const fs::path oracle_path = run_dir / "oracle.cgh";
  std::optional<ComplexField> oracle;
  if (fs::exists(oracle_path)) {
    try {
      auto [field, file_scene] = load_hologram(oracle_path);
      if (file_scene == scene) oracle = std::move(field);
    } catch (const IoError&) {
      oracle.reset();
    } catch (const ValidationError&) {
      oracle.reset();
    }
  }
  if (!oracle) {
    const RealImage object = load_image(config.object_path);
    if (object.width() != config.size || object.height() != config.size) {
      throw ValidationError("size: object image does not match the manifest size");
    }
    const LutBuildResult luts = lut_build(config);
    OpCounter oracle_ops;
    const ComplexField fresh =
        synthesize_pointwise_oracle(object, scene, oracle_ops, luts.luts.of(1),
                                    config.effective_workers(), config.random_phase_seed);
    save_hologram(fresh, scene, oracle_path);
    oracle = load_hologram(oracle_path).first;
  }

  const RealImage oracle_recon = reconstruct(*oracle, scene, config.intensity_recon);
  MetricsReport report = build_report(result, oracle_recon, scene, config.intensity_recon);

  RunMetricsResult out;
  out.report_json_path = run_dir / "report.json";
  out.report_text_path = run_dir / "report.txt";
  write_text_file(out.report_json_path, report.to_json());
  write_text_file(out.report_text_path, report.to_table());
  out.report = std::move(report);
  return out;
}

void run_pipeline(const PipelineConfig& config) {
  const GenerateResult gen = run_generate(config);
  run_metrics(config.out_dir);
  for (int s = 0; s < 4; ++s) {
    const fs::path png =
        fs::path(config.out_dir) / ("recon_" + std::string(kStageNames[s]) + ".png");
    run_reconstruct(gen.stage_paths[s], png, config.intensity_recon);
  }
  run_reconstruct(fs::path(config.out_dir) / "oracle.cgh",
                  fs::path(config.out_dir) / "recon_oracle.png", config.intensity_recon);
}

}  // namespace wavecgh
