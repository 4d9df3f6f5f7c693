#pragma once

#include "wavecgh/field.hpp"

namespace wavecgh {

// Block-max reductions of a [0,1] saliency map at the factors the refinement
// stages gate on. by_factor(1) is the full-resolution map; by_factor(f) at
// (i,j) is the maximum of the f x f block of the full map it covers, so a
// coarse cell is salient whenever any pixel under it is.
class SaliencyPyramid {
 public:
  const RealImage& by_factor(int factor) const;
  int full_size() const { return full_.width(); }

 private:
  friend SaliencyPyramid quantize_saliency(const RealImage& full);

  RealImage full_;
  RealImage half_;
  RealImage quarter_;
  RealImage eighth_;
};

SaliencyPyramid quantize_saliency(const RealImage& full);

// All-ones map: every cell passes every threshold below 1.
RealImage uniform_saliency(int n);

}  // namespace wavecgh
