#include <doctest.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <string>
#include <sys/wait.h>
#include <vector>

#include <json.hpp>

#include "support/fixtures.hpp"
#include "wavecgh/image_io.hpp"

using namespace wavecgh::testing;
namespace fs = std::filesystem;

namespace {

std::string cli_binary() {
  const char* bin = std::getenv("WAVECGH_BIN");
  REQUIRE_MESSAGE(bin != nullptr, "WAVECGH_BIN must point at the wavecgh binary");
  return bin;
}

struct CliResult {
  int exit_code = -1;
  std::string output;
};

CliResult run_cli(const std::string& args, const fs::path& scratch) {
  const fs::path log = scratch / "cli_output.txt";
  const std::string command = cli_binary() + " " + args + " > " + log.string() + " 2>&1";
  const int status = std::system(command.c_str());
  CliResult result;
  result.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  std::ifstream in(log);
  result.output.assign(std::istreambuf_iterator<char>(in),
                       std::istreambuf_iterator<char>());
  return result;
}

void write_square_object(const fs::path& path) {
  std::vector<std::uint16_t> samples(64 * 64, 12);
  for (int y = 24; y < 40; ++y) {
    for (int x = 24; x < 40; ++x) samples[y * 64 + x] = 240;
  }
  write_gray_png(path, 64, 64, 8, samples);
}

std::string base_flags(const fs::path& dir) {
  // z = 0.01 keeps the diffraction-limited spot a couple of pixels wide so
  // reconstructions localize for the bounding-box check.
  return "--size 64 --z 0.01 --object " + (dir / "object.png").string() +
         " --uniform-saliency --t-ll 0 --t-l 0 --t-full 0 --out " +
         (dir / "run").string() + " --lut-cache " + (dir / "cache").string() +
         " --workers 1";
}

}  // namespace

TEST_CASE("help exits cleanly and lists the commands") {
  const auto dir = temp_dir("cli_help");
  const CliResult result = run_cli("--help", dir);
  CHECK(result.exit_code == 0);
  for (const char* cmd : {"lut", "generate", "reconstruct", "metrics", "pipeline"}) {
    CHECK(result.output.find(cmd) != std::string::npos);
  }
}

TEST_CASE("pipeline command runs end to end") {
  const auto dir = temp_dir("cli_pipeline");
  write_square_object(dir / "object.png");

  const CliResult result = run_cli("pipeline " + base_flags(dir), dir);
  CAPTURE(result.output);
  CHECK(result.exit_code == 0);
  for (const char* name : {"manifest.json", "report.json", "report.txt", "oracle.cgh",
                           "recon_after_full.png", "recon_oracle.png"}) {
    CHECK(fs::exists(dir / "run" / name));
  }

  SUBCASE("reconstruction of the oracle stays inside the object's bounding box") {
    const fs::path png = dir / "oracle_recon.png";
    const CliResult recon = run_cli(
        "reconstruct " + (dir / "run" / "oracle.cgh").string() + " --out " + png.string(),
        dir);
    CHECK(recon.exit_code == 0);
    const wavecgh::RealImage image = wavecgh::load_image(png);

    int best_x = 0, best_y = 0;
    double best = -1.0;
    for (int y = 0; y < 64; ++y) {
      for (int x = 0; x < 64; ++x) {
        if (image.at(x, y) > best) {
          best = image.at(x, y);
          best_x = x;
          best_y = y;
        }
      }
    }
    CHECK(best_x >= 22);
    CHECK(best_x < 42);
    CHECK(best_y >= 22);
    CHECK(best_y < 42);
  }

  SUBCASE("metrics reruns are byte-identical") {
    const auto first = read_file_bytes(dir / "run" / "report.json");
    const CliResult rerun = run_cli("metrics " + (dir / "run").string(), dir);
    CHECK(rerun.exit_code == 0);
    CHECK(read_file_bytes(dir / "run" / "report.json") == first);
  }

  SUBCASE("lut build hits the warm cache") {
    const CliResult rebuild = run_cli(
        "lut build --size 64 --z 0.01 --lut-cache " + (dir / "cache").string(), dir);
    CHECK(rebuild.exit_code == 0);
    CHECK(rebuild.output.find("cache hit") != std::string::npos);
    CHECK(rebuild.output.find("built") == std::string::npos);
  }
}

TEST_CASE("flags override config file values") {
  const auto dir = temp_dir("cli_override");
  write_square_object(dir / "object.png");

  const fs::path config = dir / "config.json";
  std::ofstream(config) << R"({"size": 64, "z": 0.01, "uniform_saliency": true,)"
                        << R"( "object": ")" << (dir / "object.png").string() << R"(",)"
                        << R"( "out": ")" << (dir / "run").string() << R"(",)"
                        << R"( "lut_cache": ")" << (dir / "cache").string() << R"(",)"
                        << R"( "t_full": 0.9, "workers": 1})";

  // Uniform saliency is exactly 1.0, so a threshold of 1 gates the final
  // stage out; seeing zero ops there proves the flag beat the file's 0.9.
  const CliResult result =
      run_cli("generate --config " + config.string() + " --t-full 1", dir);
  CAPTURE(result.output);
  CHECK(result.exit_code == 0);

  const auto manifest_bytes = read_file_bytes(dir / "run" / "manifest.json");
  const auto manifest =
      nlohmann::json::parse(std::string(manifest_bytes.begin(), manifest_bytes.end()));
  CHECK(manifest["config"]["t_full"] == 1.0);
  CHECK(manifest["stages"][3]["ops"] == 0);
  CHECK(manifest["stages"][1]["ops"] == 256);  // file value still applies below t_full
}

TEST_CASE("validation failures exit with code 1") {
  const auto dir = temp_dir("cli_validation");
  write_square_object(dir / "object.png");

  SUBCASE("missing saliency without the uniform fallback") {
    const CliResult result = run_cli(
        "generate --size 64 --object " + (dir / "object.png").string() + " --out " +
            (dir / "run").string() + " --lut-cache " + (dir / "cache").string(),
        dir);
    CHECK(result.exit_code == 1);
    CHECK(result.output.find("saliency") != std::string::npos);
  }

  SUBCASE("empty config file") {
    const fs::path config = dir / "empty.json";
    std::ofstream(config) << "";
    const CliResult result =
        run_cli("generate --config " + config.string(), dir);
    CHECK(result.exit_code == 1);
  }

  SUBCASE("unknown flag") {
    const CliResult result = run_cli("generate --no-such-flag", dir);
    CHECK(result.exit_code == 1);
  }
}

TEST_CASE("io failures exit with code 2") {
  const auto dir = temp_dir("cli_io");

  SUBCASE("reconstructing a missing hologram") {
    const CliResult result =
        run_cli("reconstruct " + (dir / "missing.cgh").string(), dir);
    CHECK(result.exit_code == 2);
  }

  SUBCASE("reconstructing a corrupt hologram") {
    const fs::path bad = dir / "bad.cgh";
    std::ofstream(bad, std::ios::binary) << "XXXX garbage";
    const CliResult result = run_cli("reconstruct " + bad.string(), dir);
    CHECK(result.exit_code == 2);
  }

  SUBCASE("metrics without a manifest") {
    const CliResult result = run_cli("metrics " + dir.string(), dir);
    CHECK(result.exit_code == 2);
  }
}
