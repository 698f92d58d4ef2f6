#include "thermoseg/raster.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <string>

namespace thermoseg {

void validate(const RasterImage& img) {
  if (img.width <= 0 || img.height <= 0)
    throw std::invalid_argument("raster: non-positive dimensions");
  if (img.channels != 1 && img.channels != 3)
    throw std::invalid_argument("raster: channels must be 1 or 3");
  if (img.data.size() != static_cast<size_t>(img.width) * img.height * img.channels)
    throw std::invalid_argument("raster: data length does not match width*height*channels");
  for (float v : img.data) {
    if (!std::isfinite(v) || v < 0.0f || v > 1.0f)
      throw std::invalid_argument("raster: value outside [0, 1]");
  }
}

void validate(const LabelMask& mask, int num_classes) {
  if (mask.width <= 0 || mask.height <= 0)
    throw std::invalid_argument("mask: non-positive dimensions");
  if (mask.labels.size() != static_cast<size_t>(mask.width) * mask.height)
    throw std::invalid_argument("mask: label length does not match width*height");
  for (uint8_t l : mask.labels) {
    if (l >= num_classes)
      throw std::invalid_argument("mask: label " + std::to_string(int(l)) +
                                  " outside class set of size " + std::to_string(num_classes));
  }
}

void validate(const ThermalFrame& frame) {
  if (frame.width <= 0 || frame.height <= 0)
    throw std::invalid_argument("thermal: non-positive dimensions");
  if (frame.counts.size() != static_cast<size_t>(frame.width) * frame.height)
    throw std::invalid_argument("thermal: counts length does not match width*height");
  if (!(frame.scale > 0.0))
    throw std::invalid_argument("thermal: scale must be > 0");
  if (!std::isfinite(frame.offset))
    throw std::invalid_argument("thermal: offset must be finite");
}

Palette default_palette() {
  return Palette{
      {{0, 0, 0}, 0},    // other / background
      {{255, 0, 0}, 1},  // weed
      {{0, 0, 255}, 2},  // plant
  };
}

static uint8_t quantize8(float v) {
  const float scaled = std::clamp(v, 0.0f, 1.0f) * 255.0f;
  return static_cast<uint8_t>(std::lround(scaled));
}

LabelMask decode_mask(const RasterImage& raster, const Palette& palette) {
  validate(raster);
  LabelMask mask;
  mask.width = raster.width;
  mask.height = raster.height;
  mask.labels.resize(static_cast<size_t>(raster.width) * raster.height);
  for (int y = 0; y < raster.height; ++y) {
    for (int x = 0; x < raster.width; ++x) {
      Rgb8 color;
      if (raster.channels == 3) {
        color = {quantize8(raster.at(x, y, 0)), quantize8(raster.at(x, y, 1)),
                 quantize8(raster.at(x, y, 2))};
      } else {
        const uint8_t g = quantize8(raster.at(x, y));
        color = {g, g, g};
      }
      const auto it = palette.find(color);
      if (it == palette.end()) {
        throw std::invalid_argument("decode_mask: unmapped color (" +
                                    std::to_string(int(color[0])) + "," +
                                    std::to_string(int(color[1])) + "," +
                                    std::to_string(int(color[2])) + ") at (" +
                                    std::to_string(x) + ", " + std::to_string(y) + ")");
      }
      mask.at(x, y) = it->second;
    }
  }
  return mask;
}

RasterImage encode_mask(const LabelMask& mask, const Palette& palette) {
  std::map<uint8_t, Rgb8> inverse;
  for (const auto& [color, cls] : palette) inverse.emplace(cls, color);
  RasterImage img = RasterImage::filled(mask.width, mask.height, 3, 0.0f);
  for (int y = 0; y < mask.height; ++y) {
    for (int x = 0; x < mask.width; ++x) {
      const auto it = inverse.find(mask.at(x, y));
      if (it == inverse.end())
        throw std::invalid_argument("encode_mask: label " + std::to_string(int(mask.at(x, y))) +
                                    " has no palette color");
      for (int c = 0; c < 3; ++c) img.at(x, y, c) = it->second[c] / 255.0f;
    }
  }
  return img;
}

CelsiusGrid thermal_to_celsius(const ThermalFrame& frame) {
  validate(frame);
  CelsiusGrid grid;
  grid.width = frame.width;
  grid.height = frame.height;
  grid.values.resize(frame.counts.size());
  for (size_t i = 0; i < frame.counts.size(); ++i)
    grid.values[i] = frame.counts[i] * frame.scale + frame.offset;
  return grid;
}

RasterImage to_gray(const RasterImage& img) {
  validate(img);
  if (img.channels == 1) return img;
  RasterImage gray = RasterImage::filled(img.width, img.height, 1, 0.0f);
  for (int y = 0; y < img.height; ++y) {
    for (int x = 0; x < img.width; ++x) {
      gray.at(x, y) = 0.299f * img.at(x, y, 0) + 0.587f * img.at(x, y, 1) +
                      0.114f * img.at(x, y, 2);
    }
  }
  return gray;
}

RasterImage normalize_counts(const ThermalFrame& frame) {
  if (frame.width <= 0 || frame.height <= 0 ||
      frame.counts.size() != static_cast<size_t>(frame.width) * frame.height)
    throw std::invalid_argument("normalize_counts: bad frame geometry");
  const auto [lo_it, hi_it] = std::minmax_element(frame.counts.begin(), frame.counts.end());
  const uint16_t lo = *lo_it, hi = *hi_it;
  RasterImage img = RasterImage::filled(frame.width, frame.height, 1, 0.0f);
  if (hi == lo) return img;
  const float span = static_cast<float>(hi - lo);
  for (size_t i = 0; i < frame.counts.size(); ++i)
    img.data[i] = static_cast<float>(frame.counts[i] - lo) / span;
  return img;
}

}  // namespace thermoseg
