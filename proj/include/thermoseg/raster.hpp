#pragma once

#include <array>
#include <cstdint>
#include <map>
#include <string>
#include <vector>

namespace thermoseg {

// Row-major intensity image, values in [0, 1], 1 (gray) or 3 (RGB)
// interleaved channels.
struct RasterImage {
  int width = 0;
  int height = 0;
  int channels = 1;
  std::vector<float> data;

  float at(int x, int y, int c = 0) const {
    return data[(static_cast<size_t>(y) * width + x) * channels + c];
  }
  float& at(int x, int y, int c = 0) {
    return data[(static_cast<size_t>(y) * width + x) * channels + c];
  }

  static RasterImage filled(int w, int h, int ch, float value) {
    RasterImage img;
    img.width = w;
    img.height = h;
    img.channels = ch;
    img.data.assign(static_cast<size_t>(w) * h * ch, value);
    return img;
  }
};

// Per-pixel class identifiers. Class 0 is always the background/"other"
// class; the default class set is {0: other, 1: weed, 2: plant}.
struct LabelMask {
  int width = 0;
  int height = 0;
  std::vector<uint8_t> labels;

  uint8_t at(int x, int y) const { return labels[static_cast<size_t>(y) * width + x]; }
  uint8_t& at(int x, int y) { return labels[static_cast<size_t>(y) * width + x]; }

  static LabelMask filled(int w, int h, uint8_t value) {
    LabelMask m;
    m.width = w;
    m.height = h;
    m.labels.assign(static_cast<size_t>(w) * h, value);
    return m;
  }

  bool operator==(const LabelMask& other) const = default;
};

// Raw radiometric frame. Counts convert to degrees Celsius through the
// linear calibration counts * scale + offset; the calibration travels with
// the manifest record, there is no default.
struct ThermalFrame {
  int width = 0;
  int height = 0;
  std::vector<uint16_t> counts;
  double scale = 0.0;   // degrees Celsius per count, > 0
  double offset = 0.0;  // degrees Celsius
};

struct CelsiusGrid {
  int width = 0;
  int height = 0;
  std::vector<double> values;

  double at(int x, int y) const { return values[static_cast<size_t>(y) * width + x]; }
  double& at(int x, int y) { return values[static_cast<size_t>(y) * width + x]; }
};

void validate(const RasterImage& img);
void validate(const LabelMask& mask, int num_classes);
void validate(const ThermalFrame& frame);

using Rgb8 = std::array<uint8_t, 3>;
using Palette = std::map<Rgb8, uint8_t>;

// Annotation colors: background black, weed red, plant blue.
Palette default_palette();

// Maps each pixel color through the palette; throws naming the first
// unmapped coordinate. Single-channel rasters are looked up as gray triples.
LabelMask decode_mask(const RasterImage& raster, const Palette& palette);

// Inverse of decode_mask for rasters restricted to palette colors.
RasterImage encode_mask(const LabelMask& mask, const Palette& palette);

CelsiusGrid thermal_to_celsius(const ThermalFrame& frame);

// BT.601 luma for 3-channel input; identity for single-channel.
RasterImage to_gray(const RasterImage& img);

// Min-max normalizes counts to a [0, 1] intensity image (all zeros when the
// frame is constant). Used to render the thermal frame as a match template.
RasterImage normalize_counts(const ThermalFrame& frame);

}  // namespace thermoseg
