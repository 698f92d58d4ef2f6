#include "thermoseg/image_io.hpp"

#include <png.h>

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <cstring>
#include <fstream>
#include <memory>
#include <stdexcept>

namespace thermoseg {

namespace {

struct FileCloser {
  void operator()(FILE* f) const {
    if (f) std::fclose(f);
  }
};
using FilePtr = std::unique_ptr<FILE, FileCloser>;

struct PngPixels {
  int width = 0;
  int height = 0;
  int channels = 0;
  int bit_depth = 0;
  std::vector<uint16_t> samples;  // expanded to 8 or 16 bits per sample
};

PngPixels read_png_any(const std::string& path) {
  FilePtr file(std::fopen(path.c_str(), "rb"));
  if (!file) throw std::runtime_error("png: cannot open '" + path + "'");

  png_structp png = png_create_read_struct(PNG_LIBPNG_VER_STRING, nullptr, nullptr, nullptr);
  if (!png) throw std::runtime_error("png: read struct allocation failed");
  png_infop info = png_create_info_struct(png);
  if (!info) {
    png_destroy_read_struct(&png, nullptr, nullptr);
    throw std::runtime_error("png: info struct allocation failed");
  }
  if (setjmp(png_jmpbuf(png))) {
    png_destroy_read_struct(&png, &info, nullptr);
    throw std::runtime_error("png: failed to decode '" + path + "'");
  }
  png_init_io(png, file.get());
  png_read_info(png, info);

  png_set_palette_to_rgb(png);
  png_set_expand_gray_1_2_4_to_8(png);
  png_set_strip_alpha(png);
  if (png_get_bit_depth(png, info) == 16) png_set_swap(png);
  png_read_update_info(png, info);

  PngPixels out;
  out.width = static_cast<int>(png_get_image_width(png, info));
  out.height = static_cast<int>(png_get_image_height(png, info));
  out.channels = static_cast<int>(png_get_channels(png, info));
  out.bit_depth = static_cast<int>(png_get_bit_depth(png, info));

  const size_t row_bytes = png_get_rowbytes(png, info);
  std::vector<uint8_t> raw(row_bytes * out.height);
  std::vector<png_bytep> rows(out.height);
  for (int y = 0; y < out.height; ++y) rows[y] = raw.data() + row_bytes * y;
  png_read_image(png, rows.data());
  png_read_end(png, nullptr);
  png_destroy_read_struct(&png, &info, nullptr);

  const size_t n = static_cast<size_t>(out.width) * out.height * out.channels;
  out.samples.resize(n);
  if (out.bit_depth == 16) {
    std::memcpy(out.samples.data(), raw.data(), n * 2);
  } else {
    for (size_t i = 0; i < n; ++i) out.samples[i] = raw[i];
  }
  return out;
}

void write_png(const std::string& path, int width, int height, int channels, int bit_depth,
               const uint8_t* bytes) {
  FilePtr file(std::fopen(path.c_str(), "wb"));
  if (!file) throw std::runtime_error("png: cannot write '" + path + "'");

  png_structp png = png_create_write_struct(PNG_LIBPNG_VER_STRING, nullptr, nullptr, nullptr);
  if (!png) throw std::runtime_error("png: write struct allocation failed");
  png_infop info = png_create_info_struct(png);
  if (!info) {
    png_destroy_write_struct(&png, nullptr);
    throw std::runtime_error("png: info struct allocation failed");
  }
  if (setjmp(png_jmpbuf(png))) {
    png_destroy_write_struct(&png, &info);
    throw std::runtime_error("png: failed to encode '" + path + "'");
  }
  png_init_io(png, file.get());
  const int color = channels == 1 ? PNG_COLOR_TYPE_GRAY : PNG_COLOR_TYPE_RGB;
  png_set_IHDR(png, info, width, height, bit_depth, color, PNG_INTERLACE_NONE,
               PNG_COMPRESSION_TYPE_DEFAULT, PNG_FILTER_TYPE_DEFAULT);
  png_write_info(png, info);
  if (bit_depth == 16) png_set_swap(png);

  const size_t row_bytes = static_cast<size_t>(width) * channels * (bit_depth / 8);
  std::vector<png_bytep> rows(height);
  for (int y = 0; y < height; ++y)
    rows[y] = const_cast<uint8_t*>(bytes) + row_bytes * y;
  png_write_image(png, rows.data());
  png_write_end(png, nullptr);
  png_destroy_write_struct(&png, &info);
}

uint16_t read_le16(const uint8_t* p) { return uint16_t(p[0] | (p[1] << 8)); }
uint32_t read_le32(const uint8_t* p) {
  return uint32_t(p[0]) | (uint32_t(p[1]) << 8) | (uint32_t(p[2]) << 16) | (uint32_t(p[3]) << 24);
}
void push_le16(std::vector<uint8_t>& v, uint16_t x) {
  v.push_back(uint8_t(x & 0xFF));
  v.push_back(uint8_t(x >> 8));
}
void push_le32(std::vector<uint8_t>& v, uint32_t x) {
  for (int i = 0; i < 4; ++i) v.push_back(uint8_t((x >> (8 * i)) & 0xFF));
}

}  // namespace

RasterImage read_raster_png(const std::string& path) {
  PngPixels px = read_png_any(path);
  if (px.bit_depth != 8)
    throw std::runtime_error("png: '" + path + "' is not an 8-bit raster (use read_counts for 16-bit)");
  if (px.channels != 1 && px.channels != 3)
    throw std::runtime_error("png: '" + path + "' has unsupported channel count");
  RasterImage img;
  img.width = px.width;
  img.height = px.height;
  img.channels = px.channels;
  img.data.resize(px.samples.size());
  for (size_t i = 0; i < px.samples.size(); ++i)
    img.data[i] = static_cast<float>(px.samples[i]) / 255.0f;
  return img;
}

void write_raster_png(const std::string& path, const RasterImage& img) {
  validate(img);
  std::vector<uint8_t> bytes(img.data.size());
  for (size_t i = 0; i < img.data.size(); ++i)
    bytes[i] = static_cast<uint8_t>(std::lround(std::clamp(img.data[i], 0.0f, 1.0f) * 255.0f));
  write_png(path, img.width, img.height, img.channels, 8, bytes.data());
}

LabelMask read_mask_png(const std::string& path) {
  PngPixels px = read_png_any(path);
  if (px.bit_depth != 8 || px.channels != 1)
    throw std::runtime_error("png: '" + path + "' is not an 8-bit single-channel class-id mask");
  LabelMask mask;
  mask.width = px.width;
  mask.height = px.height;
  mask.labels.resize(px.samples.size());
  for (size_t i = 0; i < px.samples.size(); ++i)
    mask.labels[i] = static_cast<uint8_t>(px.samples[i]);
  return mask;
}

void write_mask_png(const std::string& path, const LabelMask& mask) {
  if (mask.labels.size() != static_cast<size_t>(mask.width) * mask.height)
    throw std::invalid_argument("write_mask_png: inconsistent mask");
  write_png(path, mask.width, mask.height, 1, 8, mask.labels.data());
}

Counts16 read_counts_png(const std::string& path) {
  PngPixels px = read_png_any(path);
  if (px.bit_depth != 16 || px.channels != 1)
    throw std::runtime_error("png: '" + path + "' is not a 16-bit single-channel frame");
  Counts16 counts;
  counts.width = px.width;
  counts.height = px.height;
  counts.values = std::move(px.samples);
  return counts;
}

void write_counts_png(const std::string& path, const Counts16& counts) {
  if (counts.values.size() != static_cast<size_t>(counts.width) * counts.height)
    throw std::invalid_argument("write_counts_png: inconsistent frame");
  write_png(path, counts.width, counts.height, 1, 16,
            reinterpret_cast<const uint8_t*>(counts.values.data()));
}

Counts16 read_counts_tiff(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("tiff: cannot open '" + path + "'");
  std::vector<uint8_t> buf((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());
  if (buf.size() < 8 || buf[0] != 'I' || buf[1] != 'I' || read_le16(&buf[2]) != 42)
    throw std::runtime_error("tiff: '" + path + "' is not little-endian TIFF");

  const uint32_t ifd_off = read_le32(&buf[4]);
  if (ifd_off + 2 > buf.size()) throw std::runtime_error("tiff: truncated IFD");
  const uint16_t num_entries = read_le16(&buf[ifd_off]);

  uint32_t width = 0, height = 0, bits = 0, strip_offset = 0, samples = 1;
  for (uint16_t i = 0; i < num_entries; ++i) {
    const size_t e = ifd_off + 2 + static_cast<size_t>(i) * 12;
    if (e + 12 > buf.size()) throw std::runtime_error("tiff: truncated IFD entry");
    const uint16_t tag = read_le16(&buf[e]);
    const uint16_t type = read_le16(&buf[e + 2]);
    const uint32_t value = type == 3 ? read_le16(&buf[e + 8]) : read_le32(&buf[e + 8]);
    switch (tag) {
      case 256: width = value; break;
      case 257: height = value; break;
      case 258: bits = value; break;
      case 273: strip_offset = value; break;
      case 277: samples = value; break;
      default: break;  // compression/strip counts validated implicitly below
    }
  }
  if (width == 0 || height == 0) throw std::runtime_error("tiff: missing dimensions");
  if (bits != 16 || samples != 1)
    throw std::runtime_error("tiff: '" + path + "' is not 16-bit single-channel");
  const size_t n = static_cast<size_t>(width) * height;
  if (strip_offset + n * 2 > buf.size()) throw std::runtime_error("tiff: truncated pixel data");

  Counts16 counts;
  counts.width = static_cast<int>(width);
  counts.height = static_cast<int>(height);
  counts.values.resize(n);
  for (size_t i = 0; i < n; ++i) counts.values[i] = read_le16(&buf[strip_offset + i * 2]);
  return counts;
}

void write_counts_tiff(const std::string& path, const Counts16& counts) {
  if (counts.values.size() != static_cast<size_t>(counts.width) * counts.height)
    throw std::invalid_argument("write_counts_tiff: inconsistent frame");
  const uint32_t n = static_cast<uint32_t>(counts.values.size());

  std::vector<uint8_t> buf;
  buf.reserve(8 + 2 + 9 * 12 + 4 + n * 2);
  buf.insert(buf.end(), {'I', 'I'});
  push_le16(buf, 42);
  push_le32(buf, 8);  // IFD immediately after header

  const uint16_t entries = 9;
  const uint32_t data_offset = 8 + 2 + entries * 12 + 4;
  push_le16(buf, entries);
  auto entry = [&buf](uint16_t tag, uint16_t type, uint32_t count, uint32_t value) {
    push_le16(buf, tag);
    push_le16(buf, type);
    push_le32(buf, count);
    push_le32(buf, value);
  };
  entry(256, 4, 1, static_cast<uint32_t>(counts.width));   // ImageWidth
  entry(257, 4, 1, static_cast<uint32_t>(counts.height));  // ImageLength
  entry(258, 3, 1, 16);                                    // BitsPerSample
  entry(259, 3, 1, 1);                                     // Compression: none
  entry(262, 3, 1, 1);                                     // Photometric: BlackIsZero
  entry(273, 4, 1, data_offset);                           // StripOffsets
  entry(277, 3, 1, 1);                                     // SamplesPerPixel
  entry(278, 4, 1, static_cast<uint32_t>(counts.height));  // RowsPerStrip
  entry(279, 4, 1, n * 2);                                 // StripByteCounts
  push_le32(buf, 0);                                       // next IFD: none

  for (uint16_t v : counts.values) push_le16(buf, v);

  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw std::runtime_error("tiff: cannot write '" + path + "'");
  out.write(reinterpret_cast<const char*>(buf.data()), static_cast<std::streamsize>(buf.size()));
}

Counts16 read_counts(const std::string& path) {
  const auto dot = path.rfind('.');
  std::string ext = dot == std::string::npos ? "" : path.substr(dot + 1);
  std::transform(ext.begin(), ext.end(), ext.begin(), [](unsigned char c) { return std::tolower(c); });
  if (ext == "png") return read_counts_png(path);
  if (ext == "tif" || ext == "tiff") return read_counts_tiff(path);
  throw std::runtime_error("read_counts: unsupported extension '" + ext + "' for '" + path + "'");
}

}  // namespace thermoseg
