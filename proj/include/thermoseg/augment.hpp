#pragma once

#include <json.hpp>

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "thermoseg/raster.hpp"

namespace thermoseg {

// The training-time augmentation chain, in application order:
//   1. horizontal flip                      p = 0.5
//   2. shift-scale-rotate                   p = 1.0 (scale 0.5, shift 0.1, rotate 0,
//                                            constant-zero border)
//   3. pad to target size                   always
//   4. random crop to target size           always
//   5. Gaussian noise                       p = 0.2
//   6. perspective                          p = 0.5
//   7. one of {CLAHE, brightness-contrast, gamma}      p = 0.9
//   8. one of {sharpen, blur<=3, motion blur<=3}       p = 0.9
//   9. one of {brightness-contrast, hue-saturation}    p = 0.9
// Geometric transforms (1-4, 6) hit image and mask with identical
// parameters, bilinear for the image and nearest-neighbor for labels;
// photometric transforms touch the image only.
struct AugmentationSpec {
  int target_size = 256;

  double p_hflip = 0.5;

  double p_shift_scale_rotate = 1.0;
  double scale_limit = 0.5;
  double shift_limit = 0.1;
  double rotate_limit = 0.0;  // degrees

  double p_gauss_noise = 0.2;
  double noise_sigma_min = 0.01;
  double noise_sigma_max = 0.05;

  double p_perspective = 0.5;
  double perspective_scale_min = 0.05;
  double perspective_scale_max = 0.10;

  double p_color_group = 0.9;    // CLAHE | brightness-contrast | gamma
  double p_sharpen_group = 0.9;  // sharpen | blur | motion blur
  double p_hsv_group = 0.9;      // brightness-contrast | hue-saturation

  int clahe_tile_grid = 8;
  double clahe_clip_limit = 4.0;
  double brightness_limit = 0.2;
  double contrast_limit = 0.2;
  double gamma_min = 0.8;
  double gamma_max = 1.2;
  double sharpen_alpha_min = 0.2;
  double sharpen_alpha_max = 0.5;
  double sharpen_lightness_min = 0.5;
  double sharpen_lightness_max = 1.0;
  int blur_limit = 3;
  double hue_shift_limit_deg = 40.0;
  double sat_shift_limit = 30.0 / 255.0;
  double val_shift_limit = 20.0 / 255.0;

  static AugmentationSpec table_defaults(int target_size);
  // Every probability zero; with target_size equal to the input size the
  // pipeline is exactly the identity.
  static AugmentationSpec identity(int target_size);

  void validate() const;
};

// One applied transform with the exact parameters it sampled. Geometric
// steps carry everything needed to replay the mask path.
struct TraceStep {
  std::string name;
  bool geometric = false;
  std::vector<std::pair<std::string, double>> params;

  double param(const std::string& key) const;
};

struct AugmentTrace {
  std::vector<TraceStep> steps;

  nlohmann::json to_json() const;
};

struct AugmentResult {
  RasterImage image;
  LabelMask mask;
  AugmentTrace trace;
};

// Pure function of (image, mask, spec, seed); all randomness comes from one
// SplitRng stream consumed in pipeline order.
AugmentResult augment(const RasterImage& image, const LabelMask& mask,
                      const AugmentationSpec& spec, uint64_t seed);

// Exposed for fixtures and replay checks: flip is its own inverse,
// flip_mask_h(flip_mask_h(m)) == m.
RasterImage flip_image_h(const RasterImage& img);
LabelMask flip_mask_h(const LabelMask& mask);

}  // namespace thermoseg
