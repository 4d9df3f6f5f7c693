#include "wavecgh/fft.hpp"

#include <numbers>
#include <vector>

#include "wavecgh/errors.hpp"

namespace wavecgh {

void fft_radix2(std::complex<double>* data, std::size_t n, bool inverse) {
  if (n == 0 || (n & (n - 1)) != 0) {
    throw ValidationError("fft: length must be a power of two");
  }
  if (n == 1) return;

  // Bit-reversal permutation.
  for (std::size_t i = 1, j = 0; i < n; ++i) {
    std::size_t bit = n >> 1;
    for (; j & bit; bit >>= 1) j ^= bit;
    j ^= bit;
    if (i < j) std::swap(data[i], data[j]);
  }

  std::vector<std::complex<double>> twiddle(n / 2);
  for (std::size_t len = 2; len <= n; len <<= 1) {
    const double sign = inverse ? 1.0 : -1.0;
    const double step = sign * 2.0 * std::numbers::pi / double(len);
    const std::size_t half = len / 2;
    for (std::size_t k = 0; k < half; ++k) {
      twiddle[k] = std::polar(1.0, step * double(k));
    }
    for (std::size_t block = 0; block < n; block += len) {
      for (std::size_t k = 0; k < half; ++k) {
        const auto even = data[block + k];
        const auto odd = data[block + k + half] * twiddle[k];
        data[block + k] = even + odd;
        data[block + k + half] = even - odd;
      }
    }
  }
}

ComplexField fft_2d(const ComplexField& field, bool inverse) {
  if (field.width() != field.height()) {
    throw ValidationError("fft_2d: field must be square");
  }
  const int n = field.width();
  if (!is_power_of_two(n)) {
    throw ValidationError("fft_2d: side must be a power of two");
  }

  ComplexField out = field;
  for (int y = 0; y < n; ++y) {
    fft_radix2(out.row(y), std::size_t(n), inverse);
  }
  std::vector<std::complex<double>> column(n);
  for (int x = 0; x < n; ++x) {
    for (int y = 0; y < n; ++y) column[y] = out.at(x, y);
    fft_radix2(column.data(), std::size_t(n), inverse);
    for (int y = 0; y < n; ++y) out.at(x, y) = column[y];
  }

  if (inverse) {
    const double scale = 1.0 / (double(n) * double(n));
    for (auto& v : out.data()) v *= scale;
  }
  return out;
}

}  // namespace wavecgh
