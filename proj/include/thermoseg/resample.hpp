#pragma once

#include "thermoseg/raster.hpp"

namespace thermoseg {

// Center-aligned sampling: src = (dst + 0.5) * (src_size / dst_size) - 0.5,
// sample coordinates clamped to the source frame. Labels are never
// interpolated; they go through nearest-neighbor only.

RasterImage resize_bilinear(const RasterImage& src, int out_width, int out_height);

LabelMask resize_nearest(const LabelMask& src, int out_width, int out_height);

}  // namespace thermoseg
