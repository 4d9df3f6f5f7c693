#pragma once

#include <complex>
#include <cstddef>

#include "wavecgh/field.hpp"

namespace wavecgh {

// In-place radix-2 FFT. n must be a power of two. No normalization is
// applied in either direction.
void fft_radix2(std::complex<double>* data, std::size_t n, bool inverse);

// 2D transform of a square power-of-two field. The forward transform is
// unscaled; the inverse divides by the sample count, so
// fft_2d(fft_2d(x, false), true) == x up to rounding.
ComplexField fft_2d(const ComplexField& field, bool inverse);

}  // namespace wavecgh
