#pragma once

#include <array>
#include <complex>
#include <filesystem>
#include <vector>

#include "wavecgh/field.hpp"

namespace wavecgh {

// Complex amplitude a unit point source contributes to a hologram sample
// (dx, dy) pixels away from its axis:
//   (1/r) * exp(j*k*r),  r = sqrt((dx*pitch)^2 + (dy*pitch)^2 + z^2)
std::complex<double> point_fringe(const SceneParams& scene, int dx, int dy);

// Precomputed fringe field of a BxB block of unit point sources. The support
// holds (2N-1)^2 samples indexed by the offset from the block's anchor (the
// footprint's top-left point), covering every placement of the block on the
// NxN plane. Applying a block is then a crop of the support, a multiply by
// the coefficient, and an accumulate.
class FringeLut {
 public:
  FringeLut(SceneParams scene, int block_size, ComplexField support);

  const SceneParams& scene() const { return scene_; }
  int block_size() const { return block_size_; }
  const ComplexField& support() const { return support_; }

  // dx, dy in [-(N-1), N-1].
  std::complex<double> at_offset(int dx, int dy) const;

 private:
  SceneParams scene_;
  int block_size_;
  ComplexField support_;
};

inline constexpr std::array<int, 4> kLutBlockSizes = {1, 2, 4, 8};

// Sums point_fringe over the B^2 point positions of the block footprint for
// every support offset. block_size must be one of kLutBlockSizes.
FringeLut build_block_lut(const SceneParams& scene, int block_size, int workers = 1);

// Disk cache, single-precision payload. Loading validates the embedded
// scene parameters and block size and throws StaleCacheError on mismatch.
void lut_cache_store(const FringeLut& lut, const std::filesystem::path& path);
FringeLut lut_cache_load(const std::filesystem::path& path, const SceneParams& expected_scene,
                         int expected_block_size);

// The four block sizes the progressive synthesizer uses, sharing one scene.
class LutSet {
 public:
  static LutSet build(const SceneParams& scene, int workers = 1);

  void put(FringeLut lut);
  bool has(int block_size) const;
  const FringeLut& of(int block_size) const;

 private:
  std::vector<FringeLut> luts_;
};

}  // namespace wavecgh
