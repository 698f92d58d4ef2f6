#pragma once

#include <cstdint>
#include <vector>

#include "thermoseg/metrics.hpp"
#include "thermoseg/raster.hpp"

namespace thermoseg {

// Dense per-pixel C-vector grid (logits or probabilities), row-major with
// the class axis fastest.
struct Tensor3 {
  int height = 0;
  int width = 0;
  int channels = 0;
  std::vector<double> data;

  double at(int y, int x, int c) const {
    return data[(static_cast<size_t>(y) * width + x) * channels + c];
  }
  double& at(int y, int x, int c) {
    return data[(static_cast<size_t>(y) * width + x) * channels + c];
  }

  static Tensor3 zeros(int h, int w, int c) {
    Tensor3 t;
    t.height = h;
    t.width = w;
    t.channels = c;
    t.data.assign(static_cast<size_t>(h) * w * c, 0.0);
    return t;
  }
};

using ProbabilityTensor = Tensor3;

// Exactly one 1 per pixel.
struct OneHotTensor {
  int height = 0;
  int width = 0;
  int channels = 0;
  std::vector<uint8_t> data;

  uint8_t at(int y, int x, int c) const {
    return data[(static_cast<size_t>(y) * width + x) * channels + c];
  }

  static OneHotTensor from_mask(const LabelMask& mask, int num_classes);
};

void validate(const OneHotTensor& gt);
// Per-pixel rows must sum to 1 within tol.
void validate_probability(const Tensor3& p, double tol = 1e-6);

// Per-pixel softmax with max subtraction; throws on non-finite logits.
ProbabilityTensor softmax(const Tensor3& logits);

// Multi-class Dice loss on softmaxed logits with squared-probability
// denominators:
//   L = 1 - (1/C) * sum_c (2*sum_i p*g + eps) / (sum_i p^2 + sum_i g^2 + eps)
double dice_loss(const Tensor3& logits, const OneHotTensor& gt, double eps = kMetricEps);

// dL/dlogits by the chain rule through the softmax; matches central finite
// differences. Each pixel's gradient sums to 0 across classes.
Tensor3 dice_loss_grad(const Tensor3& logits, const OneHotTensor& gt, double eps = kMetricEps);

}  // namespace thermoseg
