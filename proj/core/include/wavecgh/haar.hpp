#pragma once

#include <vector>

#include "wavecgh/field.hpp"

namespace wavecgh {

// Detail coefficients of one decomposition level. For each 2x2 block
// {c00 c01; c10 c11} of the parent level:
//   h = (c00 - c01 + c10 - c11) / 4
//   v = (c00 + c01 - c10 - c11) / 4
//   d = (c00 - c01 - c10 + c11) / 4
struct DetailBands {
  RealImage h;
  RealImage v;
  RealImage d;
};

// Multi-level 2D Haar decomposition with averaging normalization: the
// approximation coefficient is the mean of its 2x2 block,
//   a = (c00 + c01 + c10 + c11) / 4,
// so a coarse coefficient equals the mean of its full pixel footprint.
// details[0] holds the finest bands; approx is the coarsest approximation.
// With three levels on an NxN image the bands are, finest to coarsest,
// (H,V,D) at N/2, (LH,LV,LD) at N/4, (LLH,LLV,LLD) at N/8, and approx is
// LLL at N/8.
struct HaarPyramid {
  RealImage approx;
  std::vector<DetailBands> details;
  int original_size = 0;

  int levels() const { return int(details.size()); }
};

HaarPyramid haar_analyze(const RealImage& image, int levels);

// Exact inverse of haar_analyze: each child is the signed sum of its four
// coefficients (the analysis matrix times 4 is its own inverse).
RealImage haar_synthesize(const HaarPyramid& pyramid);

// Synthesizes one level with a zero approximation: the image-domain
// difference between a level and its replicated coarser approximation.
// upsample_replicate(a, 2) + expand_residual(h, v, d) reproduces the finer
// level exactly.
RealImage expand_residual(const RealImage& detail_h, const RealImage& detail_v,
                          const RealImage& detail_d);

// Replicates each pixel into a factor x factor block. factor must be a
// power of two >= 2.
RealImage upsample_replicate(const RealImage& coarse, int factor);

}  // namespace wavecgh
