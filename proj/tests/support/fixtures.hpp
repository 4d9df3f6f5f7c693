#pragma once

#include <cstdint>
#include <filesystem>
#include <string>
#include <vector>

namespace wavecgh::testing {

// Fresh empty directory under the system temp dir, wiped on creation.
std::filesystem::path temp_dir(const std::string& name);

// Minimal encoders for test inputs the production reader must accept.
void write_gray_png(const std::filesystem::path& path, int width, int height,
                    int bit_depth, const std::vector<std::uint16_t>& samples);
void write_rgb8_png(const std::filesystem::path& path, int width, int height,
                    const std::vector<std::uint8_t>& rgb);
void write_gray_alpha8_png(const std::filesystem::path& path, int width, int height,
                           const std::vector<std::uint8_t>& gray_alpha);
void write_pgm(const std::filesystem::path& path, int width, int height, int maxval,
               const std::vector<std::uint16_t>& samples, bool binary);

std::vector<char> read_file_bytes(const std::filesystem::path& path);

}  // namespace wavecgh::testing
