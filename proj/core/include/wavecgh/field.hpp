#pragma once

#include <array>
#include <atomic>
#include <complex>
#include <cstddef>
#include <cstdint>
#include <string_view>
#include <vector>

namespace wavecgh {

bool is_power_of_two(int n);

// 2D grid of real samples, row-major. Objects and saliency maps live in
// [0,1]; wavelet coefficients and residuals are unbounded reals.
class RealImage {
 public:
  RealImage() = default;
  RealImage(int width, int height);
  RealImage(int width, int height, std::vector<double> data);

  int width() const { return width_; }
  int height() const { return height_; }
  std::size_t size() const { return data_.size(); }

  double at(int x, int y) const { return data_[idx(x, y)]; }
  double& at(int x, int y) { return data_[idx(x, y)]; }
  const double* row(int y) const { return data_.data() + std::size_t(y) * width_; }
  double* row(int y) { return data_.data() + std::size_t(y) * width_; }

  const std::vector<double>& data() const { return data_; }
  std::vector<double>& data() { return data_; }

  bool same_size(const RealImage& other) const {
    return width_ == other.width_ && height_ == other.height_;
  }

 private:
  std::size_t idx(int x, int y) const { return std::size_t(y) * width_ + x; }

  int width_ = 0;
  int height_ = 0;
  std::vector<double> data_;
};

// 2D grid of complex amplitudes, row-major: holograms, LUT fringe blocks,
// propagated wavefields.
class ComplexField {
 public:
  using value_type = std::complex<double>;

  ComplexField() = default;
  ComplexField(int width, int height);
  ComplexField(int width, int height, std::vector<value_type> data);

  int width() const { return width_; }
  int height() const { return height_; }
  std::size_t size() const { return data_.size(); }

  value_type at(int x, int y) const { return data_[idx(x, y)]; }
  value_type& at(int x, int y) { return data_[idx(x, y)]; }
  const value_type* row(int y) const { return data_.data() + std::size_t(y) * width_; }
  value_type* row(int y) { return data_.data() + std::size_t(y) * width_; }

  const std::vector<value_type>& data() const { return data_; }
  std::vector<value_type>& data() { return data_; }

  bool same_size(const ComplexField& other) const {
    return width_ == other.width_ && height_ == other.height_;
  }

  void fill_zero();

 private:
  std::size_t idx(int x, int y) const { return std::size_t(y) * width_ + x; }

  int width_ = 0;
  int height_ = 0;
  std::vector<value_type> data_;
};

// Throw ValidationError if any sample is NaN or infinite. Called at pipeline
// boundaries, not on every construction.
void require_finite(const RealImage& image, std::string_view what);
void require_finite(const ComplexField& field, std::string_view what);

// Monochromatic scene geometry: square object and hologram planes of
// plane_size pixels with a shared pitch, separated by distance z along the
// optical axis. The wave number 2*pi/wavelength is derived on demand.
class SceneParams {
 public:
  SceneParams(double wavelength, double pitch, double z, int plane_size);

  double wavelength() const { return wavelength_; }
  double pitch() const { return pitch_; }
  double z() const { return z_; }
  int plane_size() const { return plane_size_; }
  double wave_number() const;

  bool operator==(const SceneParams& other) const = default;

 private:
  double wavelength_;
  double pitch_;
  double z_;
  int plane_size_;
};

SceneParams make_scene(double wavelength, double pitch, double z, int plane_size);

// Synthesis stages the operator counter distinguishes. One operator is one
// shift-multiply-accumulate application of a LUT block to the plane.
enum class OpLevel {
  kBaseLll = 0,
  kRefineLl,
  kRefineL,
  kRefineFull,
  kPointwiseOracle,
};

inline constexpr int kOpLevelCount = 5;
inline constexpr std::array<OpLevel, kOpLevelCount> kAllOpLevels = {
    OpLevel::kBaseLll, OpLevel::kRefineLl, OpLevel::kRefineL,
    OpLevel::kRefineFull, OpLevel::kPointwiseOracle};

std::string_view to_string(OpLevel level);

// Per-level tally of LUT block applications. Safe to update from concurrent
// workers; totals are additive and order-independent.
class OpCounter {
 public:
  OpCounter() = default;
  OpCounter(const OpCounter& other);
  OpCounter& operator=(const OpCounter& other);

  void add(OpLevel level, std::uint64_t n);
  std::uint64_t get(OpLevel level) const;
  std::uint64_t total() const;

 private:
  std::array<std::atomic<std::uint64_t>, kOpLevelCount> counts_{};
};

}  // namespace wavecgh
