#include "wavecgh/image_io.hpp"

#include <png.h>

#include <algorithm>
#include <cctype>
#include <cmath>
#include <csetjmp>
#include <cstdio>
#include <cstring>
#include <fstream>
#include <string>
#include <vector>

#include "binary_io.hpp"
#include "wavecgh/errors.hpp"

namespace wavecgh {

namespace {

constexpr char kHologramMagic[4] = {'C', 'G', 'H', '1'};
constexpr std::uint16_t kHologramVersion = 1;

// Decoded raster before scaling: interleaved samples and the sample value
// that maps to 1.0.
struct DecodedImage {
  int width = 0;
  int height = 0;
  int channels = 0;
  int max_value = 255;
  std::vector<std::uint16_t> samples;
};

struct PngReadHandle {
  std::FILE* fp = nullptr;
  png_structp png = nullptr;
  png_infop info = nullptr;

  ~PngReadHandle() {
    if (png) png_destroy_read_struct(&png, info ? &info : nullptr, nullptr);
    if (fp) std::fclose(fp);
  }
};

struct PngWriteHandle {
  std::FILE* fp = nullptr;
  png_structp png = nullptr;
  png_infop info = nullptr;

  ~PngWriteHandle() {
    if (png) png_destroy_write_struct(&png, info ? &info : nullptr);
    if (fp) std::fclose(fp);
  }
};

DecodedImage decode_png(const std::filesystem::path& path) {
  PngReadHandle h;
  h.fp = std::fopen(path.string().c_str(), "rb");
  if (!h.fp) throw IoError("png: cannot open " + path.string());
  h.png = png_create_read_struct(PNG_LIBPNG_VER_STRING, nullptr, nullptr, nullptr);
  if (!h.png) throw IoError("png: reader allocation failed");
  h.info = png_create_info_struct(h.png);
  if (!h.info) throw IoError("png: info allocation failed");

  DecodedImage img;
  std::vector<unsigned char> raw;
  std::vector<png_bytep> rows;

  if (setjmp(png_jmpbuf(h.png))) {
    throw IoError("png: failed to decode " + path.string());
  }

  png_init_io(h.png, h.fp);
  png_read_info(h.png, h.info);

  const png_byte color_type = png_get_color_type(h.png, h.info);
  if (color_type == PNG_COLOR_TYPE_PALETTE) png_set_palette_to_rgb(h.png);
  if (color_type == PNG_COLOR_TYPE_GRAY && png_get_bit_depth(h.png, h.info) < 8) {
    png_set_expand_gray_1_2_4_to_8(h.png);
  }
  if (png_get_valid(h.png, h.info, PNG_INFO_tRNS)) png_set_tRNS_to_alpha(h.png);
  if (png_get_bit_depth(h.png, h.info) == 16) png_set_swap(h.png);
  png_read_update_info(h.png, h.info);

  img.width = int(png_get_image_width(h.png, h.info));
  img.height = int(png_get_image_height(h.png, h.info));
  img.channels = int(png_get_channels(h.png, h.info));
  const int bit_depth = int(png_get_bit_depth(h.png, h.info));
  img.max_value = bit_depth == 16 ? 65535 : 255;

  const std::size_t row_bytes = png_get_rowbytes(h.png, h.info);
  raw.resize(row_bytes * img.height);
  rows.resize(img.height);
  for (int y = 0; y < img.height; ++y) rows[y] = raw.data() + row_bytes * y;
  png_read_image(h.png, rows.data());
  png_read_end(h.png, nullptr);

  img.samples.resize(std::size_t(img.width) * img.height * img.channels);
  if (bit_depth == 16) {
    std::memcpy(img.samples.data(), raw.data(), img.samples.size() * 2);
  } else {
    for (std::size_t i = 0; i < img.samples.size(); ++i) img.samples[i] = raw[i];
  }
  return img;
}

int parse_pgm_int(std::istream& in, const std::string& what) {
  int c = in.get();
  while (c != EOF && (std::isspace(c) || c == '#')) {
    if (c == '#') {
      while (c != EOF && c != '\n') c = in.get();
    }
    c = in.get();
  }
  if (c == EOF || !std::isdigit(c)) throw IoError("pgm: malformed header (" + what + ")");
  int value = 0;
  while (c != EOF && std::isdigit(c)) {
    value = value * 10 + (c - '0');
    c = in.get();
  }
  return value;
}

DecodedImage decode_pgm(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IoError("pgm: cannot open " + path.string());

  char magic[2];
  in.read(magic, 2);
  if (!in) throw IoError("pgm: truncated header in " + path.string());
  const bool binary = magic[1] == '5';

  DecodedImage img;
  img.channels = 1;
  img.width = parse_pgm_int(in, "width");
  img.height = parse_pgm_int(in, "height");
  img.max_value = parse_pgm_int(in, "maxval");
  if (img.width <= 0 || img.height <= 0 || img.max_value <= 0 || img.max_value > 65535) {
    throw IoError("pgm: invalid header in " + path.string());
  }

  const std::size_t count = std::size_t(img.width) * img.height;
  img.samples.resize(count);
  if (binary) {
    const int bytes = img.max_value > 255 ? 2 : 1;
    std::vector<unsigned char> raw(count * bytes);
    in.read(reinterpret_cast<char*>(raw.data()), std::streamsize(raw.size()));
    if (!in) throw IoError("pgm: truncated payload in " + path.string());
    for (std::size_t i = 0; i < count; ++i) {
      img.samples[i] = bytes == 2 ? std::uint16_t(raw[2 * i] << 8 | raw[2 * i + 1])
                                  : std::uint16_t(raw[i]);
    }
  } else {
    for (std::size_t i = 0; i < count; ++i) {
      int v = 0;
      if (!(in >> v)) throw IoError("pgm: truncated payload in " + path.string());
      img.samples[i] = std::uint16_t(v);
    }
  }
  return img;
}

DecodedImage decode_any(const std::filesystem::path& path) {
  std::ifstream probe(path, std::ios::binary);
  if (!probe) throw IoError("image: cannot open " + path.string());
  unsigned char sig[8] = {};
  probe.read(reinterpret_cast<char*>(sig), sizeof(sig));
  probe.close();

  static const unsigned char png_sig[8] = {0x89, 'P', 'N', 'G', '\r', '\n', 0x1a, '\n'};
  if (std::memcmp(sig, png_sig, 8) == 0) return decode_png(path);
  if (sig[0] == 'P' && (sig[1] == '5' || sig[1] == '2')) return decode_pgm(path);
  throw ValidationError("image: unsupported format in " + path.string() +
                        " (expected grayscale PNG or PGM)");
}

RealImage scale_to_unit(const DecodedImage& img, bool allow_color,
                        const std::filesystem::path& path) {
  if (img.channels != 1 && !allow_color) {
    throw ValidationError("saliency: expected single-channel grayscale, got " +
                          std::to_string(img.channels) + " channels in " + path.string());
  }
  const double scale = 1.0 / img.max_value;
  RealImage out(img.width, img.height);
  const std::size_t count = std::size_t(img.width) * img.height;
  switch (img.channels) {
    case 1:
      for (std::size_t i = 0; i < count; ++i) out.data()[i] = img.samples[i] * scale;
      break;
    case 2:  // gray + alpha: keep the gray channel
      for (std::size_t i = 0; i < count; ++i) out.data()[i] = img.samples[2 * i] * scale;
      break;
    case 3:
    case 4:  // Rec. 601 luma, alpha ignored
      for (std::size_t i = 0; i < count; ++i) {
        const std::size_t base = i * img.channels;
        out.data()[i] = (0.299 * img.samples[base] + 0.587 * img.samples[base + 1] +
                         0.114 * img.samples[base + 2]) *
                        scale;
      }
      break;
    default:
      throw ValidationError("image: unsupported channel count " +
                            std::to_string(img.channels) + " in " + path.string());
  }
  return out;
}

}  // namespace

RealImage load_image(const std::filesystem::path& path) {
  return scale_to_unit(decode_any(path), /*allow_color=*/true, path);
}

RealImage load_saliency(const std::filesystem::path& path) {
  return scale_to_unit(decode_any(path), /*allow_color=*/false, path);
}

void save_hologram(const ComplexField& field, const SceneParams& scene,
                   const std::filesystem::path& path) {
  if (field.width() != scene.plane_size() || field.height() != scene.plane_size()) {
    throw ValidationError("save_hologram: field size does not match scene plane_size");
  }
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw IoError("hologram: cannot open " + path.string() + " for writing");

  out.write(kHologramMagic, sizeof(kHologramMagic));
  detail::write_raw(out, kHologramVersion);
  detail::write_raw(out, std::uint32_t(scene.plane_size()));
  detail::write_raw(out, scene.wavelength());
  detail::write_raw(out, scene.pitch());
  detail::write_raw(out, scene.z());

  std::vector<float> payload(field.size() * 2);
  for (std::size_t i = 0; i < field.size(); ++i) {
    payload[2 * i] = float(field.data()[i].real());
    payload[2 * i + 1] = float(field.data()[i].imag());
  }
  detail::write_f32_samples(out, payload);
  if (!out) throw IoError("hologram: write failed for " + path.string());
}

std::pair<ComplexField, SceneParams> load_hologram(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IoError("hologram: cannot open " + path.string());

  char magic[4];
  in.read(magic, sizeof(magic));
  if (!in || std::memcmp(magic, kHologramMagic, sizeof(kHologramMagic)) != 0) {
    throw IoError("hologram: bad magic in " + path.string());
  }
  std::uint16_t version = 0;
  std::uint32_t plane_size = 0;
  double wavelength = 0.0, pitch = 0.0, z = 0.0;
  detail::read_raw(in, version, "hologram");
  detail::read_raw(in, plane_size, "hologram");
  detail::read_raw(in, wavelength, "hologram");
  detail::read_raw(in, pitch, "hologram");
  detail::read_raw(in, z, "hologram");
  if (version != kHologramVersion) {
    throw IoError("hologram: unsupported version " + std::to_string(version));
  }

  SceneParams scene = make_scene(wavelength, pitch, z, int(plane_size));
  const std::size_t count = std::size_t(plane_size) * plane_size;
  std::vector<float> payload(count * 2);
  detail::read_f32_samples(in, payload, "hologram");

  std::vector<std::complex<double>> samples(count);
  for (std::size_t i = 0; i < count; ++i) {
    samples[i] = {double(payload[2 * i]), double(payload[2 * i + 1])};
  }
  ComplexField field(static_cast<int>(plane_size), static_cast<int>(plane_size),
                     std::move(samples));
  require_finite(field, "hologram " + path.string());
  return {std::move(field), scene};
}

void save_magnitude_png(const ComplexField& field, const std::filesystem::path& path,
                        bool normalize) {
  std::vector<double> magnitude(field.size());
  for (std::size_t i = 0; i < field.size(); ++i) magnitude[i] = std::abs(field.data()[i]);

  double lo = 0.0, hi = 1.0;
  if (normalize) {
    lo = magnitude.empty() ? 0.0 : *std::min_element(magnitude.begin(), magnitude.end());
    hi = magnitude.empty() ? 0.0 : *std::max_element(magnitude.begin(), magnitude.end());
  }
  const double span = hi - lo;

  std::vector<unsigned char> pixels(magnitude.size());
  for (std::size_t i = 0; i < magnitude.size(); ++i) {
    const double v = normalize ? (span > 0.0 ? (magnitude[i] - lo) / span : 0.0)
                               : std::clamp(magnitude[i], 0.0, 1.0);
    pixels[i] = static_cast<unsigned char>(std::lround(v * 255.0));
  }

  PngWriteHandle h;
  h.fp = std::fopen(path.string().c_str(), "wb");
  if (!h.fp) throw IoError("png: cannot open " + path.string() + " for writing");
  h.png = png_create_write_struct(PNG_LIBPNG_VER_STRING, nullptr, nullptr, nullptr);
  if (!h.png) throw IoError("png: writer allocation failed");
  h.info = png_create_info_struct(h.png);
  if (!h.info) throw IoError("png: info allocation failed");

  std::vector<png_bytep> rows(field.height());
  for (int y = 0; y < field.height(); ++y) {
    rows[y] = pixels.data() + std::size_t(y) * field.width();
  }

  if (setjmp(png_jmpbuf(h.png))) {
    throw IoError("png: failed to write " + path.string());
  }
  png_init_io(h.png, h.fp);
  png_set_IHDR(h.png, h.info, field.width(), field.height(), 8, PNG_COLOR_TYPE_GRAY,
               PNG_INTERLACE_NONE, PNG_COMPRESSION_TYPE_DEFAULT, PNG_FILTER_TYPE_DEFAULT);
  png_write_info(h.png, h.info);
  png_write_image(h.png, rows.data());
  png_write_end(h.png, nullptr);
}

}  // namespace wavecgh
