#include "thermoseg/metrics.hpp"

#include <cstdio>
#include <stdexcept>

namespace thermoseg {

ConfusionStats& ConfusionStats::operator+=(const ConfusionStats& other) {
  if (per_class.empty()) {
    *this = other;
    return *this;
  }
  if (other.per_class.size() != per_class.size())
    throw std::invalid_argument("confusion merge: class count mismatch");
  for (size_t c = 0; c < per_class.size(); ++c) {
    per_class[c].tp += other.per_class[c].tp;
    per_class[c].fp += other.per_class[c].fp;
    per_class[c].fn += other.per_class[c].fn;
    per_class[c].tn += other.per_class[c].tn;
  }
  pixels += other.pixels;
  return *this;
}

ConfusionStats confusion(const LabelMask& pred, const LabelMask& gt, int num_classes) {
  if (pred.width != gt.width || pred.height != gt.height)
    throw std::invalid_argument("confusion: mask dimensions differ");
  validate(pred, num_classes);
  validate(gt, num_classes);

  ConfusionStats stats;
  stats.per_class.resize(num_classes);
  stats.pixels = static_cast<uint64_t>(pred.width) * pred.height;
  for (size_t i = 0; i < pred.labels.size(); ++i) {
    const uint8_t p = pred.labels[i];
    const uint8_t g = gt.labels[i];
    if (p == g) {
      stats.per_class[p].tp++;
    } else {
      stats.per_class[p].fp++;
      stats.per_class[g].fn++;
    }
  }
  for (int c = 0; c < num_classes; ++c) {
    auto& cc = stats.per_class[c];
    cc.tn = stats.pixels - cc.tp - cc.fp - cc.fn;
  }
  return stats;
}

double iou(const ConfusionStats& stats, int cls) {
  const auto& c = stats.per_class.at(cls);
  return static_cast<double>(c.tp) / (static_cast<double>(c.tp + c.fp + c.fn) + kMetricEps);
}

double dice(const ConfusionStats& stats, int cls) {
  const auto& c = stats.per_class.at(cls);
  return 2.0 * static_cast<double>(c.tp) /
         (2.0 * static_cast<double>(c.tp) + static_cast<double>(c.fp + c.fn) + kMetricEps);
}

double pixel_accuracy(const ConfusionStats& stats, int cls) {
  const auto& c = stats.per_class.at(cls);
  return static_cast<double>(c.tp + c.tn) /
         (static_cast<double>(c.tp + c.fp + c.fn + c.tn) + kMetricEps);
}

bool class_absent(const ConfusionStats& stats, int cls) {
  const auto& c = stats.per_class.at(cls);
  return c.tp + c.fp + c.fn == 0;
}

namespace {

double mean_of(const std::vector<double>& values) {
  double sum = 0.0;
  for (double v : values) sum += v;
  return values.empty() ? 0.0 : sum / static_cast<double>(values.size());
}

}  // namespace

MetricsReport aggregate(const std::vector<double>& iou_per_class,
                        const std::vector<double>& dice_per_class,
                        const std::vector<double>& pa_per_class,
                        const std::vector<std::string>& class_names,
                        const std::vector<bool>& absent) {
  const size_t n = class_names.size();
  if (iou_per_class.size() != n || dice_per_class.size() != n || pa_per_class.size() != n)
    throw std::invalid_argument("aggregate: one value per class per metric required");
  if (!absent.empty() && absent.size() != n)
    throw std::invalid_argument("aggregate: absent flag length mismatch");

  MetricsReport report;
  report.class_names = class_names;
  report.iou = iou_per_class;
  report.dice = dice_per_class;
  report.pixel_accuracy = pa_per_class;
  report.absent = absent.empty() ? std::vector<bool>(n, false) : absent;
  report.mean_iou = mean_of(iou_per_class);
  report.mean_dice = mean_of(dice_per_class);
  report.mean_pixel_accuracy = mean_of(pa_per_class);
  return report;
}

MetricsReport report_from(const ConfusionStats& stats,
                          const std::vector<std::string>& class_names) {
  if (static_cast<int>(class_names.size()) != stats.num_classes())
    throw std::invalid_argument("report_from: class name count mismatch");
  std::vector<double> iou_v, dice_v, pa_v;
  std::vector<bool> absent_v;
  for (int c = 0; c < stats.num_classes(); ++c) {
    iou_v.push_back(iou(stats, c));
    dice_v.push_back(dice(stats, c));
    pa_v.push_back(pixel_accuracy(stats, c));
    absent_v.push_back(class_absent(stats, c));
  }
  return aggregate(iou_v, dice_v, pa_v, class_names, absent_v);
}

nlohmann::json MetricsReport::to_json() const {
  nlohmann::json per_class = nlohmann::json::array();
  for (size_t c = 0; c < class_names.size(); ++c) {
    per_class.push_back({{"class", class_names[c]},
                         {"iou", iou[c]},
                         {"dice", dice[c]},
                         {"pixel_accuracy", pixel_accuracy[c]},
                         {"absent", static_cast<bool>(absent[c])}});
  }
  return nlohmann::json{{"per_class", per_class},
                        {"mean_iou", mean_iou},
                        {"mean_dice", mean_dice},
                        {"mean_pixel_accuracy", mean_pixel_accuracy}};
}

std::string MetricsReport::to_csv() const {
  std::string csv = "class,iou,dice,pixel_accuracy,absent\n";
  char row[160];
  for (size_t c = 0; c < class_names.size(); ++c) {
    std::snprintf(row, sizeof(row), "%s,%.3f,%.3f,%.3f,%d\n", class_names[c].c_str(), iou[c],
                  dice[c], pixel_accuracy[c], absent[c] ? 1 : 0);
    csv += row;
  }
  std::snprintf(row, sizeof(row), "mean,%.3f,%.3f,%.3f,\n", mean_iou, mean_dice,
                mean_pixel_accuracy);
  csv += row;
  return csv;
}

}  // namespace thermoseg
