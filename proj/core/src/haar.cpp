#include "wavecgh/haar.hpp"

#include <string>
#include <utility>

#include "wavecgh/errors.hpp"

namespace wavecgh {

namespace {

void analyze_level(const RealImage& in, RealImage& a, DetailBands& bands) {
  const int m = in.width() / 2;
  a = RealImage(m, m);
  bands.h = RealImage(m, m);
  bands.v = RealImage(m, m);
  bands.d = RealImage(m, m);
  for (int y = 0; y < m; ++y) {
    for (int x = 0; x < m; ++x) {
      const double c00 = in.at(2 * x, 2 * y);
      const double c01 = in.at(2 * x + 1, 2 * y);
      const double c10 = in.at(2 * x, 2 * y + 1);
      const double c11 = in.at(2 * x + 1, 2 * y + 1);
      a.at(x, y) = (c00 + c01 + c10 + c11) * 0.25;
      bands.h.at(x, y) = (c00 - c01 + c10 - c11) * 0.25;
      bands.v.at(x, y) = (c00 + c01 - c10 - c11) * 0.25;
      bands.d.at(x, y) = (c00 - c01 - c10 + c11) * 0.25;
    }
  }
}

RealImage synthesize_level(const RealImage& a, const DetailBands& bands) {
  const int m = a.width();
  RealImage out(2 * m, 2 * m);
  for (int y = 0; y < m; ++y) {
    for (int x = 0; x < m; ++x) {
      const double av = a.at(x, y);
      const double h = bands.h.at(x, y);
      const double v = bands.v.at(x, y);
      const double d = bands.d.at(x, y);
      out.at(2 * x, 2 * y) = av + h + v + d;
      out.at(2 * x + 1, 2 * y) = av - h + v - d;
      out.at(2 * x, 2 * y + 1) = av + h - v - d;
      out.at(2 * x + 1, 2 * y + 1) = av - h - v + d;
    }
  }
  return out;
}

}  // namespace

HaarPyramid haar_analyze(const RealImage& image, int levels) {
  if (levels < 1) throw ValidationError("haar_analyze: levels must be >= 1");
  if (image.width() != image.height()) {
    throw ValidationError("haar_analyze: image must be square");
  }
  if (image.width() % (1 << levels) != 0) {
    throw ValidationError("haar_analyze: side " + std::to_string(image.width()) +
                          " not divisible by 2^" + std::to_string(levels));
  }

  HaarPyramid pyramid;
  pyramid.original_size = image.width();
  RealImage current = image;
  for (int level = 0; level < levels; ++level) {
    RealImage a;
    DetailBands bands;
    analyze_level(current, a, bands);
    pyramid.details.push_back(std::move(bands));
    current = std::move(a);
  }
  pyramid.approx = std::move(current);
  return pyramid;
}

RealImage haar_synthesize(const HaarPyramid& pyramid) {
  if (pyramid.details.empty()) throw ValidationError("haar_synthesize: empty pyramid");
  RealImage current = pyramid.approx;
  for (auto it = pyramid.details.rbegin(); it != pyramid.details.rend(); ++it) {
    if (!current.same_size(it->h)) {
      throw ValidationError("haar_synthesize: subband sizes inconsistent");
    }
    current = synthesize_level(current, *it);
  }
  return current;
}

RealImage expand_residual(const RealImage& detail_h, const RealImage& detail_v,
                          const RealImage& detail_d) {
  if (!detail_h.same_size(detail_v) || !detail_h.same_size(detail_d)) {
    throw ValidationError("expand_residual: detail subbands differ in size");
  }
  DetailBands bands{detail_h, detail_v, detail_d};
  RealImage zero(detail_h.width(), detail_h.height());
  return synthesize_level(zero, bands);
}

RealImage upsample_replicate(const RealImage& coarse, int factor) {
  if (factor < 2 || !is_power_of_two(factor)) {
    throw ValidationError("upsample_replicate: factor must be a power of two >= 2");
  }
  RealImage out(coarse.width() * factor, coarse.height() * factor);
  for (int y = 0; y < out.height(); ++y) {
    const double* src = coarse.row(y / factor);
    double* dst = out.row(y);
    for (int x = 0; x < out.width(); ++x) dst[x] = src[x / factor];
  }
  return out;
}

}  // namespace wavecgh
