#include <cstdint>
#include <iostream>
#include <string>

#include <CLI11.hpp>

#include "wavecgh/errors.hpp"
#include "wavecgh/pipeline.hpp"
#include "wavecgh/version.hpp"

namespace {

using wavecgh::PipelineConfig;

struct CommonOpts {
  std::string config_path;
  double wavelength = 0.0;
  double pitch = 0.0;
  double z = 0.0;
  int size = 0;
  double t_ll = 0.0;
  double t_l = 0.0;
  double t_full = 0.0;
  std::string object;
  std::string saliency;
  bool uniform_saliency = false;
  std::string out;
  std::string lut_cache;
  bool intensity_recon = false;
  std::uint64_t random_phase_seed = 0;
  int workers = 0;
};

void add_scene_flags(CLI::App* cmd, CommonOpts& o) {
  cmd->add_option("--config", o.config_path, "JSON config file; flags override its values");
  cmd->add_option("--wavelength", o.wavelength, "Wavelength in meters");
  cmd->add_option("--pitch", o.pitch, "Pixel pitch in meters");
  cmd->add_option("--z", o.z, "Object-to-hologram distance in meters");
  cmd->add_option("--size", o.size, "Plane size in pixels (power of two)");
  cmd->add_option("--lut-cache", o.lut_cache,
                  "LUT cache directory (default: $WAVECGH_LUT_CACHE, then ./lut-cache)");
  cmd->add_option("--workers", o.workers, "Worker threads (0 = one per hardware thread)");
}

void add_generate_flags(CLI::App* cmd, CommonOpts& o) {
  cmd->add_option("--object", o.object, "Object image (grayscale PNG or PGM)");
  cmd->add_option("--saliency", o.saliency, "Saliency map (grayscale PNG or PGM)");
  cmd->add_flag("--uniform-saliency", o.uniform_saliency,
                "Use an all-ones saliency map instead of a file");
  cmd->add_option("--t-ll", o.t_ll, "Saliency threshold for the LLL->LL refinement");
  cmd->add_option("--t-l", o.t_l, "Saliency threshold for the LL->L refinement");
  cmd->add_option("--t-full", o.t_full, "Saliency threshold for the L->object refinement");
  cmd->add_option("--out", o.out, "Output directory");
  cmd->add_flag("--intensity-recon", o.intensity_recon,
                "Reconstruct squared magnitude instead of magnitude");
  cmd->add_option("--random-phase-seed", o.random_phase_seed,
                  "Apply a seeded random initial phase to the object");
}

bool passed(const CLI::App* cmd, const std::string& name) {
  const CLI::Option* opt = cmd->get_option_no_throw(name);
  return opt != nullptr && opt->count() > 0;
}

PipelineConfig resolve(const CLI::App* cmd, const CommonOpts& o) {
  PipelineConfig cfg;
  if (passed(cmd, "--config")) cfg = wavecgh::load_config(o.config_path);
  if (passed(cmd, "--wavelength")) cfg.wavelength = o.wavelength;
  if (passed(cmd, "--pitch")) cfg.pitch = o.pitch;
  if (passed(cmd, "--z")) cfg.z = o.z;
  if (passed(cmd, "--size")) cfg.size = o.size;
  if (passed(cmd, "--t-ll")) cfg.t_ll = o.t_ll;
  if (passed(cmd, "--t-l")) cfg.t_l = o.t_l;
  if (passed(cmd, "--t-full")) cfg.t_full = o.t_full;
  if (passed(cmd, "--object")) cfg.object_path = o.object;
  if (passed(cmd, "--saliency")) cfg.saliency_path = o.saliency;
  if (passed(cmd, "--uniform-saliency")) cfg.uniform_saliency = true;
  if (passed(cmd, "--out")) cfg.out_dir = o.out;
  if (passed(cmd, "--lut-cache")) cfg.lut_cache_dir = o.lut_cache;
  if (passed(cmd, "--intensity-recon")) cfg.intensity_recon = true;
  if (passed(cmd, "--random-phase-seed")) cfg.random_phase_seed = o.random_phase_seed;
  if (passed(cmd, "--workers")) cfg.workers = o.workers;
  return cfg;
}

void print_lut_entries(const wavecgh::LutBuildResult& result) {
  for (const auto& e : result.entries) {
    std::cout << "lut b" << e.block_size << ": " << (e.rebuilt ? "built" : "cache hit")
              << " (" << e.file.string() << ")\n";
  }
}

void print_generate(const wavecgh::GenerateResult& gen) {
  std::cout << "manifest: " << gen.manifest_path.string() << "\n";
  for (int s = 0; s < 4; ++s) {
    std::cout << wavecgh::kStageNames[s] << ": " << gen.stage_paths[s].string()
              << " ops=" << gen.ops.get(wavecgh::kStageOpLevels[s]) << "\n";
  }
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Progressive saliency-gated hologram synthesis toolkit"};
  app.set_version_flag("--version", std::string(wavecgh::kVersion));
  app.require_subcommand(1);

  CommonOpts lut_opts;
  auto* lut_cmd = app.add_subcommand("lut", "LUT cache maintenance");
  lut_cmd->require_subcommand(1);
  auto* lut_build_cmd =
      lut_cmd->add_subcommand("build", "Build or refresh the fringe LUT cache");
  add_scene_flags(lut_build_cmd, lut_opts);

  CommonOpts generate_opts;
  auto* generate_cmd =
      app.add_subcommand("generate", "Synthesize the progressive hologram stages");
  add_scene_flags(generate_cmd, generate_opts);
  add_generate_flags(generate_cmd, generate_opts);

  std::string recon_input;
  std::string recon_output;
  bool recon_intensity = false;
  auto* reconstruct_cmd =
      app.add_subcommand("reconstruct", "Back-propagate a hologram file to a PNG");
  reconstruct_cmd->add_option("hologram", recon_input, "Hologram file (.cgh)")->required();
  reconstruct_cmd->add_option("--out", recon_output, "Output PNG path");
  reconstruct_cmd->add_flag("--intensity-recon", recon_intensity,
                            "Write squared magnitude instead of magnitude");

  std::string metrics_dir;
  auto* metrics_cmd =
      app.add_subcommand("metrics", "Score a generate run against the point-wise oracle");
  metrics_cmd->add_option("run_dir", metrics_dir, "Directory written by generate")
      ->required();

  CommonOpts pipeline_opts;
  auto* pipeline_cmd = app.add_subcommand(
      "pipeline", "lut build + generate + reconstruct all stages + metrics");
  add_scene_flags(pipeline_cmd, pipeline_opts);
  add_generate_flags(pipeline_cmd, pipeline_opts);

  try {
    app.parse(argc, argv);

    if (*lut_build_cmd) {
      print_lut_entries(wavecgh::lut_build(resolve(lut_build_cmd, lut_opts)));
    } else if (*generate_cmd) {
      print_generate(wavecgh::run_generate(resolve(generate_cmd, generate_opts)));
    } else if (*reconstruct_cmd) {
      const std::filesystem::path input = recon_input;
      const std::filesystem::path output =
          recon_output.empty()
              ? input.parent_path() / (input.stem().string() + "_recon.png")
              : std::filesystem::path(recon_output);
      std::cout << wavecgh::run_reconstruct(input, output, recon_intensity).string()
                << "\n";
    } else if (*metrics_cmd) {
      const auto result = wavecgh::run_metrics(metrics_dir);
      std::cout << result.report.to_table();
      std::cout << "report: " << result.report_json_path.string() << "\n";
    } else if (*pipeline_cmd) {
      const PipelineConfig cfg = resolve(pipeline_cmd, pipeline_opts);
      wavecgh::run_pipeline(cfg);
      std::cout << "pipeline complete: " << cfg.out_dir << "\n";
    }
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 1;
  } catch (const wavecgh::ValidationError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  } catch (const wavecgh::IoError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 0;
}
