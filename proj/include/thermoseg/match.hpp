#pragma once

#include <optional>
#include <vector>

#include "thermoseg/manifest.hpp"
#include "thermoseg/ncc.hpp"
#include "thermoseg/raster.hpp"

namespace thermoseg {

struct MatchConfig {
  double scale_min = 0.1;
  double scale_max = 1.0;
  double scale_step = 0.05;
  double accept_threshold = 0.5;   // NCC score in [-1, 1]
  double time_window_sec = 2.0;    // candidate selection half-window

  void validate() const;
  // Linear grid scale_min, scale_min+step, ... while <= scale_max.
  std::vector<double> scales() const;
};

struct MatchResult {
  double scale = 0.0;
  int x = 0;  // top-left of the matched region, scene coordinates
  int y = 0;
  double score = 0.0;
  int scaled_width = 0;  // template dimensions after resizing by scale
  int scaled_height = 0;
};

// Matched iff the best score over all applicable scales reaches the accept
// threshold; Failed keeps the best score seen for diagnostics.
struct MatchOutcome {
  std::optional<MatchResult> result;  // engaged iff matched
  double best_score = 0.0;

  bool matched() const { return result.has_value(); }
};

// Slides the template over the scene at every grid scale (template resized
// bilinearly, scene never resampled) and returns the global best. Ties break
// deterministically: higher score, then larger scale, then smaller y, then
// smaller x — independent of evaluation order. Scales whose resized template
// exceeds the scene (or degenerates to zero variance) are skipped; throws if
// no scale is applicable.
MatchOutcome multi_scale_match(const RasterImage& scene, const RasterImage& tmpl,
                               const MatchConfig& config);

// All gen_thermal records within the time window of the thermal record,
// sorted by ascending time distance then id.
std::vector<SampleRecord> select_candidates(const Manifest& manifest,
                                            const SampleRecord& thermal,
                                            const MatchConfig& config);

struct BoundingBox {
  int x = 0;
  int y = 0;
  int width = 0;
  int height = 0;
  bool clamped = false;

  bool operator==(const BoundingBox&) const = default;
};

// Maps the matched region from scene (GAN-translated) coordinates back to
// the original RGB frame via the uniform resize factor r = rgb_w / scene_w.
// Throws if the two axes disagree on r by more than 1%.
BoundingBox bbox_in_rgb(const MatchResult& result, int scene_width, int scene_height,
                        int rgb_width, int rgb_height);

}  // namespace thermoseg
