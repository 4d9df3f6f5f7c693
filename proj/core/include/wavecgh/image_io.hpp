#pragma once

#include <filesystem>
#include <utility>

#include "wavecgh/field.hpp"

namespace wavecgh {

// Reads an 8- or 16-bit PNG or PGM and scales samples to [0,1] by the
// format's maximum sample value. Color inputs are reduced to luma.
RealImage load_image(const std::filesystem::path& path);

// Same formats, but rejects anything that is not single-channel grayscale.
RealImage load_saliency(const std::filesystem::path& path);

// Self-describing hologram file: scene header plus interleaved f32 samples.
// The round trip is bit-exact at f32 precision.
void save_hologram(const ComplexField& field, const SceneParams& scene,
                   const std::filesystem::path& path);
std::pair<ComplexField, SceneParams> load_hologram(const std::filesystem::path& path);

// Writes |field| as an 8-bit grayscale PNG. With normalize the magnitudes
// are mapped linearly from [min,max] onto [0,255]; otherwise values are
// clamped from [0,1].
void save_magnitude_png(const ComplexField& field, const std::filesystem::path& path,
                        bool normalize);

}  // namespace wavecgh
