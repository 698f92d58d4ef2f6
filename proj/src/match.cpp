#include "thermoseg/match.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "thermoseg/resample.hpp"

namespace thermoseg {

void MatchConfig::validate() const {
  if (!(scale_min > 0.0) || !(scale_min <= scale_max) || !(scale_max <= 1.0))
    throw std::invalid_argument("match config: need 0 < scale_min <= scale_max <= 1");
  if (!(scale_step > 0.0)) throw std::invalid_argument("match config: scale_step must be > 0");
  if (accept_threshold < -1.0 || accept_threshold > 1.0)
    throw std::invalid_argument("match config: accept_threshold outside [-1, 1]");
  if (time_window_sec < 0.0)
    throw std::invalid_argument("match config: time_window_sec must be >= 0");
}

std::vector<double> MatchConfig::scales() const {
  validate();
  std::vector<double> grid;
  for (int k = 0;; ++k) {
    const double s = scale_min + k * scale_step;
    if (s > scale_max + 1e-9) break;
    grid.push_back(std::min(s, scale_max));
  }
  return grid;
}

MatchOutcome multi_scale_match(const RasterImage& scene, const RasterImage& tmpl,
                               const MatchConfig& config) {
  if (scene.channels != 1 || tmpl.channels != 1)
    throw std::invalid_argument("multi_scale_match: inputs must be single-channel");

  bool any_scale = false;
  bool have_best = false;
  MatchResult best;
  for (double s : config.scales()) {
    const int sw = std::max(1, static_cast<int>(std::lround(tmpl.width * s)));
    const int sh = std::max(1, static_cast<int>(std::lround(tmpl.height * s)));
    if (sw > scene.width || sh > scene.height) continue;

    const RasterImage scaled = resize_bilinear(tmpl, sw, sh);
    CorrelationSurface surface;
    try {
      surface = ncc_map(scene, scaled);
    } catch (const std::invalid_argument&) {
      continue;  // resizing collapsed the template to a constant patch
    }
    any_scale = true;

    // Scan order (y then x ascending, strict >) realizes the smaller-y,
    // smaller-x tie break within a scale; larger scales overwrite equal
    // scores across scales.
    MatchResult local;
    bool have_local = false;
    for (int y = 0; y < surface.height; ++y) {
      for (int x = 0; x < surface.width; ++x) {
        const double score = surface.at(x, y);
        if (!have_local || score > local.score) {
          local = MatchResult{s, x, y, score, sw, sh};
          have_local = true;
        }
      }
    }
    if (have_local && (!have_best || local.score > best.score ||
                       (local.score == best.score && local.scale > best.scale))) {
      best = local;
      have_best = true;
    }
  }
  if (!any_scale)
    throw std::invalid_argument("multi_scale_match: no applicable scale (template never fits)");

  MatchOutcome outcome;
  outcome.best_score = best.score;
  if (best.score >= config.accept_threshold) outcome.result = best;
  return outcome;
}

std::vector<SampleRecord> select_candidates(const Manifest& manifest,
                                            const SampleRecord& thermal,
                                            const MatchConfig& config) {
  if (thermal.modality != Modality::thermal)
    throw std::invalid_argument("select_candidates: record '" + thermal.id + "' is not thermal");
  std::vector<SampleRecord> candidates;
  for (const auto& rec : manifest.records) {
    if (rec.modality != Modality::gen_thermal) continue;
    if (std::abs(rec.timestamp_sec - thermal.timestamp_sec) <= config.time_window_sec)
      candidates.push_back(rec);
  }
  std::sort(candidates.begin(), candidates.end(),
            [&](const SampleRecord& a, const SampleRecord& b) {
              const double da = std::abs(a.timestamp_sec - thermal.timestamp_sec);
              const double db = std::abs(b.timestamp_sec - thermal.timestamp_sec);
              if (da != db) return da < db;
              return a.id < b.id;
            });
  return candidates;
}

BoundingBox bbox_in_rgb(const MatchResult& result, int scene_width, int scene_height,
                        int rgb_width, int rgb_height) {
  if (scene_width <= 0 || scene_height <= 0 || rgb_width <= 0 || rgb_height <= 0)
    throw std::invalid_argument("bbox_in_rgb: non-positive dimensions");
  const double rx = static_cast<double>(rgb_width) / scene_width;
  const double ry = static_cast<double>(rgb_height) / scene_height;
  if (std::abs(rx - ry) > 0.01 * rx)
    throw std::invalid_argument("bbox_in_rgb: scene and RGB aspect ratios disagree beyond 1%");

  BoundingBox box;
  box.x = static_cast<int>(std::lround(result.x * rx));
  box.y = static_cast<int>(std::lround(result.y * rx));
  box.width = static_cast<int>(std::lround(result.scaled_width * rx));
  box.height = static_cast<int>(std::lround(result.scaled_height * rx));

  if (box.x < 0) { box.width += box.x; box.x = 0; box.clamped = true; }
  if (box.y < 0) { box.height += box.y; box.y = 0; box.clamped = true; }
  if (box.x + box.width > rgb_width) { box.width = rgb_width - box.x; box.clamped = true; }
  if (box.y + box.height > rgb_height) { box.height = rgb_height - box.y; box.clamped = true; }
  if (box.width <= 0 || box.height <= 0)
    throw std::invalid_argument("bbox_in_rgb: matched region falls outside the RGB frame");
  return box;
}

}  // namespace thermoseg
