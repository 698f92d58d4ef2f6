#include "thermoseg/mask_transfer.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "thermoseg/resample.hpp"

namespace thermoseg {

LabelMask transfer_mask(const LabelMask& rgb_mask, const BoundingBox& box, int thermal_width,
                        int thermal_height) {
  if (box.width <= 0 || box.height <= 0)
    throw std::invalid_argument("transfer_mask: empty box");
  if (thermal_width <= 0 || thermal_height <= 0)
    throw std::invalid_argument("transfer_mask: non-positive thermal dimensions");
  if (box.x < 0 || box.y < 0 || box.x + box.width > rgb_mask.width ||
      box.y + box.height > rgb_mask.height)
    throw std::invalid_argument("transfer_mask: box outside mask bounds");

  LabelMask crop = LabelMask::filled(box.width, box.height, 0);
  for (int y = 0; y < box.height; ++y)
    for (int x = 0; x < box.width; ++x) crop.at(x, y) = rgb_mask.at(box.x + x, box.y + y);

  return resize_nearest(crop, thermal_width, thermal_height);
}

ClassStats extract_class_stats(const CelsiusGrid& temps, const LabelMask& mask, int cls) {
  if (temps.width != mask.width || temps.height != mask.height)
    throw std::invalid_argument("extract_class_stats: temperature and mask dimensions differ");

  std::vector<double> values;
  for (size_t i = 0; i < mask.labels.size(); ++i)
    if (mask.labels[i] == cls) values.push_back(temps.values[i]);

  ClassStats stats;
  stats.class_id = cls;
  stats.pixel_count = values.size();
  if (values.empty()) return stats;

  stats.present = true;
  double sum = 0.0;
  for (double v : values) sum += v;
  stats.mean = sum / static_cast<double>(values.size());

  double sq = 0.0;
  for (double v : values) {
    const double d = v - stats.mean;
    sq += d * d;
  }
  stats.std_dev = std::sqrt(sq / static_cast<double>(values.size()));

  std::sort(values.begin(), values.end());
  stats.min = values.front();
  stats.max = values.back();
  const size_t n = values.size();
  stats.median = n % 2 == 1 ? values[n / 2] : 0.5 * (values[n / 2 - 1] + values[n / 2]);
  return stats;
}

}  // namespace thermoseg
