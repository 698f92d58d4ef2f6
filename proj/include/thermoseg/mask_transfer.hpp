#pragma once

#include <cstdint>

#include "thermoseg/match.hpp"
#include "thermoseg/raster.hpp"

namespace thermoseg {

// Temperature statistics over the pixels of one class. When the class has no
// pixels the values are meaningless and present is false.
struct ClassStats {
  int class_id = 0;
  uint64_t pixel_count = 0;
  bool present = false;
  double mean = 0.0;
  double median = 0.0;
  double std_dev = 0.0;  // population standard deviation
  double min = 0.0;
  double max = 0.0;
};

// Crops the RGB-space mask to the box and resamples the crop to the thermal
// frame size with nearest-neighbor labels. Never emits a label absent from
// the crop; with box = full frame and matching dimensions this is the
// identity.
LabelMask transfer_mask(const LabelMask& rgb_mask, const BoundingBox& box, int thermal_width,
                        int thermal_height);

// Statistics over exactly the pixels labelled cls; pixels of other classes
// cannot influence the result.
ClassStats extract_class_stats(const CelsiusGrid& temps, const LabelMask& mask, int cls);

}  // namespace thermoseg
