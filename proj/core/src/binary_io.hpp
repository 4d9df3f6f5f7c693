#pragma once

#include <bit>
#include <cstdint>
#include <cstring>
#include <fstream>
#include <string>
#include <vector>

#include "wavecgh/errors.hpp"

// Little-endian primitives shared by the hologram and LUT cache formats.
static_assert(std::endian::native == std::endian::little,
              "file formats are little-endian; big-endian hosts need byte swaps");

namespace wavecgh::detail {

template <typename T>
void write_raw(std::ofstream& out, const T& value) {
  out.write(reinterpret_cast<const char*>(&value), sizeof(T));
}

template <typename T>
void read_raw(std::ifstream& in, T& value, const std::string& what) {
  in.read(reinterpret_cast<char*>(&value), sizeof(T));
  if (!in) throw IoError(what + ": truncated or unreadable header");
}

inline void write_f32_samples(std::ofstream& out, const std::vector<float>& samples) {
  out.write(reinterpret_cast<const char*>(samples.data()),
            std::streamsize(samples.size() * sizeof(float)));
}

inline void read_f32_samples(std::ifstream& in, std::vector<float>& samples,
                             const std::string& what) {
  in.read(reinterpret_cast<char*>(samples.data()),
          std::streamsize(samples.size() * sizeof(float)));
  if (!in) throw IoError(what + ": truncated payload");
}

}  // namespace wavecgh::detail
