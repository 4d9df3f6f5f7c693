#pragma once

#include "wavecgh/field.hpp"

namespace wavecgh {

// Frequency-domain transfer function for free-space propagation over a
// signed distance. Samples follow standard DFT index order (DC first).
// Propagating frequencies (fx^2 + fy^2 <= 1/lambda^2) carry unit-modulus
// phase; evanescent frequencies are zeroed.
struct PropagationKernel {
  SceneParams scene;
  double z_signed;
  ComplexField transfer;
};

PropagationKernel build_kernel(const SceneParams& scene, double z_signed);

// inverse-DFT( DFT(field) * transfer ). Energy is preserved whenever no
// evanescent content is clipped.
ComplexField propagate(const ComplexField& field, const PropagationKernel& kernel);

// Back-propagates the hologram by -z and returns the magnitude (or squared
// magnitude) as a real image.
RealImage reconstruct(const ComplexField& hologram, const SceneParams& scene,
                      bool intensity = false);

}  // namespace wavecgh
