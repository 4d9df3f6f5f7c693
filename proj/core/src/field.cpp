#include "wavecgh/field.hpp"

#include <cmath>
#include <numbers>
#include <string>

#include "wavecgh/errors.hpp"

namespace wavecgh {

bool is_power_of_two(int n) { return n > 0 && (n & (n - 1)) == 0; }

RealImage::RealImage(int width, int height)
    : width_(width), height_(height), data_(std::size_t(width) * height, 0.0) {
  if (width <= 0 || height <= 0) {
    throw ValidationError("RealImage: dimensions must be positive");
  }
}

RealImage::RealImage(int width, int height, std::vector<double> data)
    : width_(width), height_(height), data_(std::move(data)) {
  if (width <= 0 || height <= 0) {
    throw ValidationError("RealImage: dimensions must be positive");
  }
  if (data_.size() != std::size_t(width) * height) {
    throw ValidationError("RealImage: data length " + std::to_string(data_.size()) +
                          " does not match " + std::to_string(width) + "x" +
                          std::to_string(height));
  }
}

ComplexField::ComplexField(int width, int height)
    : width_(width), height_(height), data_(std::size_t(width) * height) {
  if (width <= 0 || height <= 0) {
    throw ValidationError("ComplexField: dimensions must be positive");
  }
}

ComplexField::ComplexField(int width, int height, std::vector<value_type> data)
    : width_(width), height_(height), data_(std::move(data)) {
  if (width <= 0 || height <= 0) {
    throw ValidationError("ComplexField: dimensions must be positive");
  }
  if (data_.size() != std::size_t(width) * height) {
    throw ValidationError("ComplexField: data length " + std::to_string(data_.size()) +
                          " does not match " + std::to_string(width) + "x" +
                          std::to_string(height));
  }
}

void ComplexField::fill_zero() {
  std::fill(data_.begin(), data_.end(), value_type(0.0, 0.0));
}

void require_finite(const RealImage& image, std::string_view what) {
  for (double v : image.data()) {
    if (!std::isfinite(v)) {
      throw ValidationError(std::string(what) + ": non-finite sample");
    }
  }
}

void require_finite(const ComplexField& field, std::string_view what) {
  for (const auto& v : field.data()) {
    if (!std::isfinite(v.real()) || !std::isfinite(v.imag())) {
      throw ValidationError(std::string(what) + ": non-finite sample");
    }
  }
}

SceneParams::SceneParams(double wavelength, double pitch, double z, int plane_size)
    : wavelength_(wavelength), pitch_(pitch), z_(z), plane_size_(plane_size) {
  if (!(wavelength > 0.0)) throw ValidationError("scene: wavelength must be positive");
  if (!(pitch > 0.0)) throw ValidationError("scene: pitch must be positive");
  if (!(z > 0.0)) throw ValidationError("scene: z must be positive");
  if (!is_power_of_two(plane_size)) {
    throw ValidationError("scene: plane_size must be a power of two, got " +
                          std::to_string(plane_size));
  }
}

double SceneParams::wave_number() const { return 2.0 * std::numbers::pi / wavelength_; }

SceneParams make_scene(double wavelength, double pitch, double z, int plane_size) {
  return SceneParams(wavelength, pitch, z, plane_size);
}

std::string_view to_string(OpLevel level) {
  switch (level) {
    case OpLevel::kBaseLll: return "base_LLL";
    case OpLevel::kRefineLl: return "refine_LL";
    case OpLevel::kRefineL: return "refine_L";
    case OpLevel::kRefineFull: return "refine_full";
    case OpLevel::kPointwiseOracle: return "pointwise_oracle";
  }
  return "unknown";
}

OpCounter::OpCounter(const OpCounter& other) {
  for (int i = 0; i < kOpLevelCount; ++i) {
    counts_[i].store(other.counts_[i].load(std::memory_order_relaxed),
                     std::memory_order_relaxed);
  }
}

OpCounter& OpCounter::operator=(const OpCounter& other) {
  for (int i = 0; i < kOpLevelCount; ++i) {
    counts_[i].store(other.counts_[i].load(std::memory_order_relaxed),
                     std::memory_order_relaxed);
  }
  return *this;
}

void OpCounter::add(OpLevel level, std::uint64_t n) {
  counts_[static_cast<int>(level)].fetch_add(n, std::memory_order_relaxed);
}

std::uint64_t OpCounter::get(OpLevel level) const {
  return counts_[static_cast<int>(level)].load(std::memory_order_relaxed);
}

std::uint64_t OpCounter::total() const {
  std::uint64_t sum = 0;
  for (const auto& c : counts_) sum += c.load(std::memory_order_relaxed);
  return sum;
}

}  // namespace wavecgh
