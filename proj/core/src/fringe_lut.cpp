#include "wavecgh/fringe_lut.hpp"

#include <algorithm>
#include <cmath>
#include <cstring>
#include <fstream>
#include <string>
#include <utility>

#include "binary_io.hpp"
#include "wavecgh/errors.hpp"
#include "wavecgh/parallel.hpp"

namespace wavecgh {

namespace {

constexpr char kMagic[4] = {'C', 'G', 'H', 'L'};
constexpr std::uint16_t kFormatVersion = 1;

bool supported_block_size(int b) {
  return std::find(kLutBlockSizes.begin(), kLutBlockSizes.end(), b) != kLutBlockSizes.end();
}

}  // namespace

std::complex<double> point_fringe(const SceneParams& scene, int dx, int dy) {
  const double px = dx * scene.pitch();
  const double py = dy * scene.pitch();
  const double r = std::sqrt(px * px + py * py + scene.z() * scene.z());
  return std::polar(1.0 / r, scene.wave_number() * r);
}

FringeLut::FringeLut(SceneParams scene, int block_size, ComplexField support)
    : scene_(scene), block_size_(block_size), support_(std::move(support)) {
  if (!supported_block_size(block_size_)) {
    throw ValidationError("FringeLut: unsupported block size " + std::to_string(block_size_));
  }
  const int expected = 2 * scene_.plane_size() - 1;
  if (support_.width() != expected || support_.height() != expected) {
    throw ValidationError("FringeLut: support must be (2N-1) x (2N-1)");
  }
}

std::complex<double> FringeLut::at_offset(int dx, int dy) const {
  const int n = scene_.plane_size();
  if (dx <= -n || dx >= n || dy <= -n || dy >= n) {
    throw ValidationError("FringeLut: offset outside support");
  }
  return support_.at(dx + n - 1, dy + n - 1);
}

FringeLut build_block_lut(const SceneParams& scene, int block_size, int workers) {
  if (!supported_block_size(block_size)) {
    throw ValidationError("build_block_lut: unsupported block size " +
                          std::to_string(block_size));
  }
  const int n = scene.plane_size();
  if (block_size > n) {
    throw ValidationError("build_block_lut: block size exceeds plane size");
  }

  // Support offsets span [-(n-1), n-1]; subtracting a point position in
  // [0, B) reaches down to -(n-1) - (B-1), so the single-point grid is
  // extended by B-1 on the negative side of each axis.
  const int span = 2 * n - 1;
  const int ext = span + block_size - 1;
  const int lo = -(n - 1) - (block_size - 1);

  ComplexField base(ext, ext);
  parallel_for(0, ext, workers, [&](int row) {
    auto* dst = base.row(row);
    const int dy = lo + row;
    for (int col = 0; col < ext; ++col) dst[col] = point_fringe(scene, lo + col, dy);
  });

  ComplexField support(span, span);
  parallel_for(0, span, workers, [&](int row) {
    auto* dst = support.row(row);
    for (int col = 0; col < span; ++col) {
      std::complex<double> sum{0.0, 0.0};
      for (int pv = 0; pv < block_size; ++pv) {
        const auto* src = base.row(row - pv + block_size - 1);
        for (int pu = 0; pu < block_size; ++pu) {
          sum += src[col - pu + block_size - 1];
        }
      }
      dst[col] = sum;
    }
  });

  return FringeLut(scene, block_size, std::move(support));
}

void lut_cache_store(const FringeLut& lut, const std::filesystem::path& path) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw IoError("lut cache: cannot open " + path.string() + " for writing");

  out.write(kMagic, sizeof(kMagic));
  detail::write_raw(out, kFormatVersion);
  detail::write_raw(out, std::uint16_t(lut.block_size()));
  detail::write_raw(out, std::uint32_t(lut.scene().plane_size()));
  detail::write_raw(out, lut.scene().wavelength());
  detail::write_raw(out, lut.scene().pitch());
  detail::write_raw(out, lut.scene().z());

  const auto& samples = lut.support().data();
  std::vector<float> payload(samples.size() * 2);
  for (std::size_t i = 0; i < samples.size(); ++i) {
    payload[2 * i] = float(samples[i].real());
    payload[2 * i + 1] = float(samples[i].imag());
  }
  detail::write_f32_samples(out, payload);
  if (!out) throw IoError("lut cache: write failed for " + path.string());
}

FringeLut lut_cache_load(const std::filesystem::path& path, const SceneParams& expected_scene,
                         int expected_block_size) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IoError("lut cache: cannot open " + path.string());

  char magic[4];
  in.read(magic, sizeof(magic));
  if (!in || std::memcmp(magic, kMagic, sizeof(kMagic)) != 0) {
    throw IoError("lut cache: bad magic in " + path.string());
  }
  std::uint16_t version = 0;
  std::uint16_t block_size = 0;
  std::uint32_t plane_size = 0;
  double wavelength = 0.0, pitch = 0.0, z = 0.0;
  detail::read_raw(in, version, "lut cache");
  detail::read_raw(in, block_size, "lut cache");
  detail::read_raw(in, plane_size, "lut cache");
  detail::read_raw(in, wavelength, "lut cache");
  detail::read_raw(in, pitch, "lut cache");
  detail::read_raw(in, z, "lut cache");

  if (version != kFormatVersion) {
    throw IoError("lut cache: unsupported version " + std::to_string(version));
  }
  if (int(block_size) != expected_block_size) {
    throw StaleCacheError("lut cache: block size " + std::to_string(block_size) +
                          " != expected " + std::to_string(expected_block_size));
  }
  if (int(plane_size) != expected_scene.plane_size() ||
      wavelength != expected_scene.wavelength() || pitch != expected_scene.pitch() ||
      z != expected_scene.z()) {
    throw StaleCacheError("lut cache: scene parameters in " + path.string() +
                          " do not match the requested scene");
  }

  const int span = 2 * int(plane_size) - 1;
  std::vector<float> payload(std::size_t(span) * span * 2);
  detail::read_f32_samples(in, payload, "lut cache");

  std::vector<std::complex<double>> samples(std::size_t(span) * span);
  for (std::size_t i = 0; i < samples.size(); ++i) {
    samples[i] = {double(payload[2 * i]), double(payload[2 * i + 1])};
  }
  ComplexField support(span, span, std::move(samples));
  require_finite(support, "lut cache " + path.string());
  return FringeLut(expected_scene, expected_block_size, std::move(support));
}

LutSet LutSet::build(const SceneParams& scene, int workers) {
  LutSet set;
  for (int b : kLutBlockSizes) set.put(build_block_lut(scene, b, workers));
  return set;
}

void LutSet::put(FringeLut lut) {
  if (!luts_.empty() && !(luts_.front().scene() == lut.scene())) {
    throw ValidationError("LutSet: mixed scene parameters");
  }
  for (auto& existing : luts_) {
    if (existing.block_size() == lut.block_size()) {
      existing = std::move(lut);
      return;
    }
  }
  luts_.push_back(std::move(lut));
}

bool LutSet::has(int block_size) const {
  for (const auto& lut : luts_) {
    if (lut.block_size() == block_size) return true;
  }
  return false;
}

const FringeLut& LutSet::of(int block_size) const {
  for (const auto& lut : luts_) {
    if (lut.block_size() == block_size) return lut;
  }
  throw ValidationError("LutSet: no LUT for block size " + std::to_string(block_size));
}

}  // namespace wavecgh
