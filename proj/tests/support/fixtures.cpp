#include "support/fixtures.hpp"

#include <png.h>

#include <csetjmp>
#include <cstdio>
#include <fstream>
#include <stdexcept>

namespace wavecgh::testing {

namespace fs = std::filesystem;

fs::path temp_dir(const std::string& name) {
  const fs::path dir = fs::temp_directory_path() / ("wavecgh_test_" + name);
  fs::remove_all(dir);
  fs::create_directories(dir);
  return dir;
}

namespace {

struct PngWriter {
  std::FILE* fp = nullptr;
  png_structp png = nullptr;
  png_infop info = nullptr;

  ~PngWriter() {
    if (png) png_destroy_write_struct(&png, info ? &info : nullptr);
    if (fp) std::fclose(fp);
  }
};

void write_png(const fs::path& path, int width, int height, int bit_depth, int color_type,
               const std::vector<png_bytep>& rows) {
  PngWriter w;
  w.fp = std::fopen(path.string().c_str(), "wb");
  if (!w.fp) throw std::runtime_error("fixture: cannot open " + path.string());
  w.png = png_create_write_struct(PNG_LIBPNG_VER_STRING, nullptr, nullptr, nullptr);
  w.info = png_create_info_struct(w.png);
  if (setjmp(png_jmpbuf(w.png))) {
    throw std::runtime_error("fixture: png write failed");
  }
  png_init_io(w.png, w.fp);
  png_set_IHDR(w.png, w.info, width, height, bit_depth, color_type, PNG_INTERLACE_NONE,
               PNG_COMPRESSION_TYPE_DEFAULT, PNG_FILTER_TYPE_DEFAULT);
  png_write_info(w.png, w.info);
  if (bit_depth == 16) png_set_swap(w.png);
  png_write_image(w.png, const_cast<png_bytep*>(rows.data()));
  png_write_end(w.png, nullptr);
}

}  // namespace

void write_gray_png(const fs::path& path, int width, int height, int bit_depth,
                    const std::vector<std::uint16_t>& samples) {
  if (bit_depth == 8) {
    std::vector<std::uint8_t> bytes(samples.size());
    for (std::size_t i = 0; i < samples.size(); ++i) bytes[i] = std::uint8_t(samples[i]);
    std::vector<png_bytep> rows(height);
    for (int y = 0; y < height; ++y) rows[y] = bytes.data() + std::size_t(y) * width;
    write_png(path, width, height, 8, PNG_COLOR_TYPE_GRAY, rows);
  } else {
    std::vector<std::uint16_t> copy = samples;
    std::vector<png_bytep> rows(height);
    for (int y = 0; y < height; ++y) {
      rows[y] = reinterpret_cast<png_bytep>(copy.data() + std::size_t(y) * width);
    }
    write_png(path, width, height, 16, PNG_COLOR_TYPE_GRAY, rows);
  }
}

void write_rgb8_png(const fs::path& path, int width, int height,
                    const std::vector<std::uint8_t>& rgb) {
  std::vector<std::uint8_t> copy = rgb;
  std::vector<png_bytep> rows(height);
  for (int y = 0; y < height; ++y) rows[y] = copy.data() + std::size_t(y) * width * 3;
  write_png(path, width, height, 8, PNG_COLOR_TYPE_RGB, rows);
}

void write_gray_alpha8_png(const fs::path& path, int width, int height,
                           const std::vector<std::uint8_t>& gray_alpha) {
  std::vector<std::uint8_t> copy = gray_alpha;
  std::vector<png_bytep> rows(height);
  for (int y = 0; y < height; ++y) rows[y] = copy.data() + std::size_t(y) * width * 2;
  write_png(path, width, height, 8, PNG_COLOR_TYPE_GRAY_ALPHA, rows);
}

void write_pgm(const fs::path& path, int width, int height, int maxval,
               const std::vector<std::uint16_t>& samples, bool binary) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  out << (binary ? "P5" : "P2") << "\n"
      << width << " " << height << "\n"
      << maxval << "\n";
  if (binary) {
    for (std::uint16_t v : samples) {
      if (maxval > 255) {
        out.put(char(v >> 8));
        out.put(char(v & 0xff));
      } else {
        out.put(char(v));
      }
    }
  } else {
    for (std::size_t i = 0; i < samples.size(); ++i) {
      out << samples[i] << ((i + 1) % width == 0 ? "\n" : " ");
    }
  }
}

std::vector<char> read_file_bytes(const fs::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("fixture: cannot open " + path.string());
  return {std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>()};
}

}  // namespace wavecgh::testing
