#include "thermoseg/dice_loss.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace thermoseg {

namespace {

void check_tensor(const Tensor3& t, const char* what) {
  if (t.height <= 0 || t.width <= 0 || t.channels <= 0)
    throw std::invalid_argument(std::string(what) + ": non-positive dimensions");
  if (t.data.size() != static_cast<size_t>(t.height) * t.width * t.channels)
    throw std::invalid_argument(std::string(what) + ": data length mismatch");
}

void check_same_shape(const Tensor3& logits, const OneHotTensor& gt) {
  if (logits.height != gt.height || logits.width != gt.width || logits.channels != gt.channels)
    throw std::invalid_argument("dice_loss: logits and ground truth shapes differ");
}

}  // namespace

OneHotTensor OneHotTensor::from_mask(const LabelMask& mask, int num_classes) {
  thermoseg::validate(mask, num_classes);
  OneHotTensor gt;
  gt.height = mask.height;
  gt.width = mask.width;
  gt.channels = num_classes;
  gt.data.assign(static_cast<size_t>(mask.height) * mask.width * num_classes, 0);
  for (size_t i = 0; i < mask.labels.size(); ++i)
    gt.data[i * num_classes + mask.labels[i]] = 1;
  return gt;
}

void validate(const OneHotTensor& gt) {
  if (gt.height <= 0 || gt.width <= 0 || gt.channels <= 0)
    throw std::invalid_argument("one-hot: non-positive dimensions");
  if (gt.data.size() != static_cast<size_t>(gt.height) * gt.width * gt.channels)
    throw std::invalid_argument("one-hot: data length mismatch");
  const size_t pixels = static_cast<size_t>(gt.height) * gt.width;
  for (size_t i = 0; i < pixels; ++i) {
    int ones = 0;
    for (int c = 0; c < gt.channels; ++c) {
      const uint8_t v = gt.data[i * gt.channels + c];
      if (v > 1) throw std::invalid_argument("one-hot: value outside {0, 1}");
      ones += v;
    }
    if (ones != 1) throw std::invalid_argument("one-hot: pixel without exactly one 1");
  }
}

void validate_probability(const Tensor3& p, double tol) {
  check_tensor(p, "probability");
  const size_t pixels = static_cast<size_t>(p.height) * p.width;
  for (size_t i = 0; i < pixels; ++i) {
    double sum = 0.0;
    for (int c = 0; c < p.channels; ++c) {
      const double v = p.data[i * p.channels + c];
      if (!(v >= 0.0 && v <= 1.0))
        throw std::invalid_argument("probability: value outside [0, 1]");
      sum += v;
    }
    if (std::abs(sum - 1.0) > tol)
      throw std::invalid_argument("probability: pixel row does not sum to 1");
  }
}

ProbabilityTensor softmax(const Tensor3& logits) {
  check_tensor(logits, "softmax");
  Tensor3 p = Tensor3::zeros(logits.height, logits.width, logits.channels);
  const size_t pixels = static_cast<size_t>(logits.height) * logits.width;
  const int C = logits.channels;
  for (size_t i = 0; i < pixels; ++i) {
    double max_logit = logits.data[i * C];
    for (int c = 0; c < C; ++c) {
      const double z = logits.data[i * C + c];
      if (!std::isfinite(z)) throw std::invalid_argument("softmax: non-finite logit");
      max_logit = std::max(max_logit, z);
    }
    double sum = 0.0;
    for (int c = 0; c < C; ++c) {
      const double e = std::exp(logits.data[i * C + c] - max_logit);
      p.data[i * C + c] = e;
      sum += e;
    }
    for (int c = 0; c < C; ++c) p.data[i * C + c] /= sum;
  }
  return p;
}

double dice_loss(const Tensor3& logits, const OneHotTensor& gt, double eps) {
  check_same_shape(logits, gt);
  const ProbabilityTensor p = softmax(logits);
  const size_t pixels = static_cast<size_t>(logits.height) * logits.width;
  const int C = logits.channels;

  double dice_sum = 0.0;
  for (int c = 0; c < C; ++c) {
    double intersection = 0.0, p_sq = 0.0, g_sq = 0.0;
    for (size_t i = 0; i < pixels; ++i) {
      const double pv = p.data[i * C + c];
      const double gv = gt.data[i * C + c];
      intersection += pv * gv;
      p_sq += pv * pv;
      g_sq += gv;  // g is 0/1, so g^2 == g
    }
    dice_sum += (2.0 * intersection + eps) / (p_sq + g_sq + eps);
  }
  return 1.0 - dice_sum / C;
}

Tensor3 dice_loss_grad(const Tensor3& logits, const OneHotTensor& gt, double eps) {
  check_same_shape(logits, gt);
  const ProbabilityTensor p = softmax(logits);
  const size_t pixels = static_cast<size_t>(logits.height) * logits.width;
  const int C = logits.channels;

  // Per-class sums of Eq. terms: A = sum p*g, B = sum p^2, G = sum g.
  std::vector<double> A(C, 0.0), B(C, 0.0), G(C, 0.0);
  for (size_t i = 0; i < pixels; ++i) {
    for (int c = 0; c < C; ++c) {
      const double pv = p.data[i * C + c];
      const double gv = gt.data[i * C + c];
      A[c] += pv * gv;
      B[c] += pv * pv;
      G[c] += gv;
    }
  }

  // dL/dp_{i,c} = -(1/C) * [2g*(B+G+eps) - (2A+eps)*2p] / (B+G+eps)^2
  std::vector<double> denom(C), numer(C);
  for (int c = 0; c < C; ++c) {
    denom[c] = B[c] + G[c] + eps;
    numer[c] = 2.0 * A[c] + eps;
  }

  Tensor3 grad = Tensor3::zeros(logits.height, logits.width, C);
  std::vector<double> dldp(C);
  for (size_t i = 0; i < pixels; ++i) {
    double dot = 0.0;  // sum_c dL/dp_c * p_c, for the softmax Jacobian
    for (int c = 0; c < C; ++c) {
      const double pv = p.data[i * C + c];
      const double gv = gt.data[i * C + c];
      dldp[c] = -(2.0 * gv * denom[c] - numer[c] * 2.0 * pv) / (denom[c] * denom[c] * C);
      dot += dldp[c] * pv;
    }
    for (int c = 0; c < C; ++c) {
      const double pv = p.data[i * C + c];
      grad.data[i * C + c] = pv * (dldp[c] - dot);
    }
  }
  return grad;
}

}  // namespace thermoseg
