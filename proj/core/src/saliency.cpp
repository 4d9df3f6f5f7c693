#include "wavecgh/saliency.hpp"

#include <algorithm>
#include <string>

#include "wavecgh/errors.hpp"

namespace wavecgh {

namespace {

RealImage block_max(const RealImage& full, int factor) {
  const int m = full.width() / factor;
  RealImage out(m, m);
  for (int y = 0; y < m; ++y) {
    for (int x = 0; x < m; ++x) {
      double best = 0.0;
      for (int by = 0; by < factor; ++by) {
        const double* row = full.row(y * factor + by) + std::size_t(x) * factor;
        for (int bx = 0; bx < factor; ++bx) best = std::max(best, row[bx]);
      }
      out.at(x, y) = best;
    }
  }
  return out;
}

}  // namespace

const RealImage& SaliencyPyramid::by_factor(int factor) const {
  switch (factor) {
    case 1: return full_;
    case 2: return half_;
    case 4: return quarter_;
    case 8: return eighth_;
    default:
      throw ValidationError("SaliencyPyramid: factor must be 1, 2, 4, or 8");
  }
}

SaliencyPyramid quantize_saliency(const RealImage& full) {
  if (full.width() != full.height()) {
    throw ValidationError("quantize_saliency: map must be square");
  }
  if (full.width() % 8 != 0) {
    throw ValidationError("quantize_saliency: side must be divisible by 8, got " +
                          std::to_string(full.width()));
  }
  for (double v : full.data()) {
    if (!(v >= 0.0 && v <= 1.0)) {
      throw ValidationError("quantize_saliency: values must lie in [0,1]");
    }
  }

  SaliencyPyramid pyramid;
  pyramid.full_ = full;
  pyramid.half_ = block_max(full, 2);
  pyramid.quarter_ = block_max(full, 4);
  pyramid.eighth_ = block_max(full, 8);
  return pyramid;
}

RealImage uniform_saliency(int n) {
  RealImage map(n, n);
  std::fill(map.data().begin(), map.data().end(), 1.0);
  return map;
}

}  // namespace wavecgh
