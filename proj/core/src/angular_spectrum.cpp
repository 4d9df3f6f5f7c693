#include "wavecgh/angular_spectrum.hpp"

#include <cmath>
#include <numbers>

#include "wavecgh/errors.hpp"
#include "wavecgh/fft.hpp"

namespace wavecgh {

PropagationKernel build_kernel(const SceneParams& scene, double z_signed) {
  if (z_signed == 0.0) throw ValidationError("build_kernel: |z| must be positive");

  const int n = scene.plane_size();
  const double df = 1.0 / (double(n) * scene.pitch());
  const double inv_lambda_sq = 1.0 / (scene.wavelength() * scene.wavelength());

  ComplexField transfer(n, n);
  for (int iy = 0; iy < n; ++iy) {
    const int my = iy < n / 2 ? iy : iy - n;
    const double fy = my * df;
    for (int ix = 0; ix < n; ++ix) {
      const int mx = ix < n / 2 ? ix : ix - n;
      const double fx = mx * df;
      const double s = inv_lambda_sq - fx * fx - fy * fy;
      if (s >= 0.0) {
        transfer.at(ix, iy) =
            std::polar(1.0, 2.0 * std::numbers::pi * z_signed * std::sqrt(s));
      }
    }
  }
  return PropagationKernel{scene, z_signed, std::move(transfer)};
}

ComplexField propagate(const ComplexField& field, const PropagationKernel& kernel) {
  if (!field.same_size(kernel.transfer)) {
    throw ValidationError("propagate: field size does not match kernel");
  }
  ComplexField spectrum = fft_2d(field, false);
  auto& data = spectrum.data();
  const auto& transfer = kernel.transfer.data();
  for (std::size_t i = 0; i < data.size(); ++i) data[i] *= transfer[i];
  return fft_2d(spectrum, true);
}

RealImage reconstruct(const ComplexField& hologram, const SceneParams& scene,
                      bool intensity) {
  if (hologram.width() != scene.plane_size() || hologram.height() != scene.plane_size()) {
    throw ValidationError("reconstruct: hologram size does not match scene");
  }
  const PropagationKernel kernel = build_kernel(scene, -scene.z());
  const ComplexField object_plane = propagate(hologram, kernel);

  RealImage image(hologram.width(), hologram.height());
  auto& out = image.data();
  const auto& in = object_plane.data();
  for (std::size_t i = 0; i < in.size(); ++i) {
    out[i] = intensity ? std::norm(in[i]) : std::abs(in[i]);
  }
  return image;
}

}  // namespace wavecgh
