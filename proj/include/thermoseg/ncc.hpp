#pragma once

#include <vector>

#include "thermoseg/raster.hpp"

namespace thermoseg {

// Dense NCC surface over all template placements; entry (x, y) scores the
// window whose top-left corner is (x, y) in scene coordinates.
struct CorrelationSurface {
  int width = 0;
  int height = 0;
  std::vector<double> scores;

  double at(int x, int y) const { return scores[static_cast<size_t>(y) * width + x]; }
  double& at(int x, int y) { return scores[static_cast<size_t>(y) * width + x]; }
};

// Zero-mean, unit-variance normalized cross-correlation of a single-channel
// template against every scene window. Window sums and sums of squares come
// from integral images, so per-window statistics are O(1); only the cross
// term walks the template. Windows with (numerically) zero variance score 0
// so degenerate regions never win. Throws if the template does not fit the
// scene or has zero variance.
CorrelationSurface ncc_map(const RasterImage& scene, const RasterImage& tmpl);

}  // namespace thermoseg
