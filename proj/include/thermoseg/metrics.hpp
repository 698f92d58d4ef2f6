#pragma once

#include <json.hpp>

#include <cstdint>
#include <string>
#include <vector>

#include "thermoseg/raster.hpp"

namespace thermoseg {

// Stability constant shared by the metric ratios and the Dice loss.
inline constexpr double kMetricEps = 1e-7;

struct ClassCounts {
  uint64_t tp = 0;
  uint64_t fp = 0;
  uint64_t fn = 0;
  uint64_t tn = 0;
};

// Per-class pixel tallies; tp+fp+fn+tn equals the pixel count for every
// class, and sum_c (tp_c + fn_c) equals the pixel count.
struct ConfusionStats {
  std::vector<ClassCounts> per_class;
  uint64_t pixels = 0;

  int num_classes() const { return static_cast<int>(per_class.size()); }

  // Merge tallies from another mask pair; associative and order-independent,
  // so row stripes or whole images may be accumulated in any order.
  ConfusionStats& operator+=(const ConfusionStats& other);
};

ConfusionStats confusion(const LabelMask& pred, const LabelMask& gt, int num_classes);

// tp / (tp + fp + fn + eps)
double iou(const ConfusionStats& stats, int cls);
// 2*tp / (2*tp + fp + fn + eps)
double dice(const ConfusionStats& stats, int cls);
// (tp + tn) / (tp + fp + fn + tn + eps)
double pixel_accuracy(const ConfusionStats& stats, int cls);

// A class with no predicted and no ground-truth pixels scores 0 by the
// literal formulas; the absent flag lets consumers exclude such classes.
bool class_absent(const ConfusionStats& stats, int cls);

struct MetricsReport {
  std::vector<std::string> class_names;
  std::vector<double> iou;
  std::vector<double> dice;
  std::vector<double> pixel_accuracy;
  std::vector<bool> absent;
  double mean_iou = 0.0;
  double mean_dice = 0.0;
  double mean_pixel_accuracy = 0.0;

  nlohmann::json to_json() const;
  // One row per class plus a mean row, values to 3 decimals.
  std::string to_csv() const;
};

// Unweighted arithmetic means over all classes, background included.
MetricsReport aggregate(const std::vector<double>& iou_per_class,
                        const std::vector<double>& dice_per_class,
                        const std::vector<double>& pa_per_class,
                        const std::vector<std::string>& class_names,
                        const std::vector<bool>& absent = {});

MetricsReport report_from(const ConfusionStats& stats,
                          const std::vector<std::string>& class_names);

}  // namespace thermoseg
