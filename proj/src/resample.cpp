#include "thermoseg/resample.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace thermoseg {

RasterImage resize_bilinear(const RasterImage& src, int out_width, int out_height) {
  if (src.width <= 0 || src.height <= 0)
    throw std::invalid_argument("resize_bilinear: empty source");
  if (out_width <= 0 || out_height <= 0)
    throw std::invalid_argument("resize_bilinear: non-positive output size");

  RasterImage dst = RasterImage::filled(out_width, out_height, src.channels, 0.0f);
  const double sx = static_cast<double>(src.width) / out_width;
  const double sy = static_cast<double>(src.height) / out_height;
  for (int y = 0; y < out_height; ++y) {
    const double fy = std::clamp((y + 0.5) * sy - 0.5, 0.0, double(src.height - 1));
    const int y0 = static_cast<int>(fy);
    const int y1 = std::min(y0 + 1, src.height - 1);
    const double wy = fy - y0;
    for (int x = 0; x < out_width; ++x) {
      const double fx = std::clamp((x + 0.5) * sx - 0.5, 0.0, double(src.width - 1));
      const int x0 = static_cast<int>(fx);
      const int x1 = std::min(x0 + 1, src.width - 1);
      const double wx = fx - x0;
      for (int c = 0; c < src.channels; ++c) {
        const double top = src.at(x0, y0, c) * (1.0 - wx) + src.at(x1, y0, c) * wx;
        const double bot = src.at(x0, y1, c) * (1.0 - wx) + src.at(x1, y1, c) * wx;
        dst.at(x, y, c) = static_cast<float>(top * (1.0 - wy) + bot * wy);
      }
    }
  }
  return dst;
}

LabelMask resize_nearest(const LabelMask& src, int out_width, int out_height) {
  if (src.width <= 0 || src.height <= 0)
    throw std::invalid_argument("resize_nearest: empty source");
  if (out_width <= 0 || out_height <= 0)
    throw std::invalid_argument("resize_nearest: non-positive output size");

  LabelMask dst = LabelMask::filled(out_width, out_height, 0);
  const double sx = static_cast<double>(src.width) / out_width;
  const double sy = static_cast<double>(src.height) / out_height;
  for (int y = 0; y < out_height; ++y) {
    const double fy = (y + 0.5) * sy - 0.5;
    const int yi = std::clamp(static_cast<int>(std::floor(fy + 0.5)), 0, src.height - 1);
    for (int x = 0; x < out_width; ++x) {
      const double fx = (x + 0.5) * sx - 0.5;
      const int xi = std::clamp(static_cast<int>(std::floor(fx + 0.5)), 0, src.width - 1);
      dst.at(x, y) = src.at(xi, yi);
    }
  }
  return dst;
}

}  // namespace thermoseg
