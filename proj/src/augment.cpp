#include "thermoseg/augment.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <stdexcept>

#include "thermoseg/rng.hpp"

namespace thermoseg {

namespace {

constexpr double kPi = 3.14159265358979323846;

// ---------------------------------------------------------------------------
// Warping primitives. Every geometric transform maps destination pixels back
// to source coordinates; the image samples bilinearly with a constant-zero
// border, the mask takes the nearest source label with class-0 border.

template <typename MapFn>
RasterImage warp_image(const RasterImage& src, int out_w, int out_h, MapFn map) {
  RasterImage dst = RasterImage::filled(out_w, out_h, src.channels, 0.0f);
  for (int y = 0; y < out_h; ++y) {
    for (int x = 0; x < out_w; ++x) {
      const auto [sx, sy] = map(x, y);
      const int x0 = static_cast<int>(std::floor(sx));
      const int y0 = static_cast<int>(std::floor(sy));
      const double wx = sx - x0;
      const double wy = sy - y0;
      for (int c = 0; c < src.channels; ++c) {
        double acc = 0.0;
        for (int dy = 0; dy <= 1; ++dy) {
          for (int dx = 0; dx <= 1; ++dx) {
            const int xi = x0 + dx, yi = y0 + dy;
            if (xi < 0 || xi >= src.width || yi < 0 || yi >= src.height) continue;
            const double w = (dx ? wx : 1.0 - wx) * (dy ? wy : 1.0 - wy);
            acc += w * src.at(xi, yi, c);
          }
        }
        dst.at(x, y, c) = static_cast<float>(std::clamp(acc, 0.0, 1.0));
      }
    }
  }
  return dst;
}

template <typename MapFn>
LabelMask warp_mask(const LabelMask& src, int out_w, int out_h, MapFn map) {
  LabelMask dst = LabelMask::filled(out_w, out_h, 0);
  for (int y = 0; y < out_h; ++y) {
    for (int x = 0; x < out_w; ++x) {
      const auto [sx, sy] = map(x, y);
      const int xi = static_cast<int>(std::floor(sx + 0.5));
      const int yi = static_cast<int>(std::floor(sy + 0.5));
      if (xi < 0 || xi >= src.width || yi < 0 || yi >= src.height) continue;
      dst.at(x, y) = src.at(xi, yi);
    }
  }
  return dst;
}

struct AffineParams {
  double scale = 1.0;
  double angle_deg = 0.0;
  double dx = 0.0;  // pixels
  double dy = 0.0;
};

// Inverse mapping of "rotate+scale about the center, then translate".
auto affine_inverse_map(const AffineParams& p, int w, int h) {
  const double cx = (w - 1) / 2.0;
  const double cy = (h - 1) / 2.0;
  const double theta = p.angle_deg * kPi / 180.0;
  const double cos_t = std::cos(theta);
  const double sin_t = std::sin(theta);
  const double inv_s = 1.0 / p.scale;
  return [=](int x, int y) {
    const double rx = x - cx - p.dx;
    const double ry = y - cy - p.dy;
    const double sx = (cos_t * rx + sin_t * ry) * inv_s + cx;
    const double sy = (-sin_t * rx + cos_t * ry) * inv_s + cy;
    return std::pair<double, double>{sx, sy};
  };
}

auto homography_map(const std::array<double, 9>& m) {
  return [m](int x, int y) {
    const double w = m[6] * x + m[7] * y + m[8];
    return std::pair<double, double>{(m[0] * x + m[1] * y + m[2]) / w,
                                     (m[3] * x + m[4] * y + m[5]) / w};
  };
}

// Solve the 8x8 system for a homography through 4 point pairs (dst -> src),
// h22 fixed to 1. Gaussian elimination with partial pivoting.
std::array<double, 9> homography_from_corners(const std::array<std::pair<double, double>, 4>& dst,
                                              const std::array<std::pair<double, double>, 4>& src) {
  double a[8][9] = {};
  for (int i = 0; i < 4; ++i) {
    const auto [x, y] = dst[i];
    const auto [u, v] = src[i];
    double* r0 = a[2 * i];
    double* r1 = a[2 * i + 1];
    r0[0] = x; r0[1] = y; r0[2] = 1; r0[6] = -x * u; r0[7] = -y * u; r0[8] = u;
    r1[3] = x; r1[4] = y; r1[5] = 1; r1[6] = -x * v; r1[7] = -y * v; r1[8] = v;
  }
  for (int col = 0; col < 8; ++col) {
    int pivot = col;
    for (int row = col + 1; row < 8; ++row)
      if (std::abs(a[row][col]) > std::abs(a[pivot][col])) pivot = row;
    if (std::abs(a[pivot][col]) < 1e-12)
      throw std::runtime_error("perspective: degenerate corner configuration");
    std::swap(a[col], a[pivot]);
    for (int row = col + 1; row < 8; ++row) {
      const double f = a[row][col] / a[col][col];
      for (int k = col; k < 9; ++k) a[row][k] -= f * a[col][k];
    }
  }
  std::array<double, 9> h{};
  h[8] = 1.0;
  for (int col = 7; col >= 0; --col) {
    double s = a[col][8];
    for (int k = col + 1; k < 8; ++k) s -= a[col][k] * h[k];
    h[col] = s / a[col][col];
  }
  return h;
}

RasterImage pad_image(const RasterImage& src, int left, int top, int right, int bottom) {
  RasterImage dst = RasterImage::filled(src.width + left + right, src.height + top + bottom,
                                        src.channels, 0.0f);
  for (int y = 0; y < src.height; ++y)
    for (int x = 0; x < src.width; ++x)
      for (int c = 0; c < src.channels; ++c) dst.at(x + left, y + top, c) = src.at(x, y, c);
  return dst;
}

LabelMask pad_mask(const LabelMask& src, int left, int top, int right, int bottom) {
  LabelMask dst = LabelMask::filled(src.width + left + right, src.height + top + bottom, 0);
  for (int y = 0; y < src.height; ++y)
    for (int x = 0; x < src.width; ++x) dst.at(x + left, y + top) = src.at(x, y);
  return dst;
}

RasterImage crop_image(const RasterImage& src, int x0, int y0, int w, int h) {
  RasterImage dst = RasterImage::filled(w, h, src.channels, 0.0f);
  for (int y = 0; y < h; ++y)
    for (int x = 0; x < w; ++x)
      for (int c = 0; c < src.channels; ++c) dst.at(x, y, c) = src.at(x0 + x, y0 + y, c);
  return dst;
}

LabelMask crop_mask(const LabelMask& src, int x0, int y0, int w, int h) {
  LabelMask dst = LabelMask::filled(w, h, 0);
  for (int y = 0; y < h; ++y)
    for (int x = 0; x < w; ++x) dst.at(x, y) = src.at(x0 + x, y0 + y);
  return dst;
}

// ---------------------------------------------------------------------------
// Photometric ops (image only).

void apply_gauss_noise(RasterImage& img, double sigma, SplitRng& rng) {
  for (float& v : img.data)
    v = static_cast<float>(std::clamp(v + sigma * rng.normal(), 0.0, 1.0));
}

void apply_brightness_contrast(RasterImage& img, double alpha, double beta) {
  for (float& v : img.data) v = static_cast<float>(std::clamp(v * alpha + beta, 0.0, 1.0));
}

void apply_gamma(RasterImage& img, double gamma) {
  for (float& v : img.data)
    v = static_cast<float>(std::pow(std::clamp(double(v), 0.0, 1.0), gamma));
}

// 3x3 convolution with reflect-101 borders.
void convolve3(RasterImage& img, const double kernel[3][3]) {
  const RasterImage src = img;
  auto reflect = [](int i, int n) {
    if (i < 0) return -i;
    if (i >= n) return 2 * n - 2 - i;
    return i;
  };
  for (int y = 0; y < img.height; ++y) {
    for (int x = 0; x < img.width; ++x) {
      for (int c = 0; c < img.channels; ++c) {
        double acc = 0.0;
        for (int dy = -1; dy <= 1; ++dy)
          for (int dx = -1; dx <= 1; ++dx)
            acc += kernel[dy + 1][dx + 1] *
                   src.at(reflect(x + dx, img.width), reflect(y + dy, img.height), c);
        img.at(x, y, c) = static_cast<float>(std::clamp(acc, 0.0, 1.0));
      }
    }
  }
}

// (1 - alpha) * identity + alpha * [[-1,-1,-1],[-1,8+lightness,-1],[-1,-1,-1]]
void apply_sharpen(RasterImage& img, double alpha, double lightness) {
  const double center = (1.0 - alpha) + alpha * (8.0 + lightness);
  const double kernel[3][3] = {{-alpha, -alpha, -alpha},
                               {-alpha, center, -alpha},
                               {-alpha, -alpha, -alpha}};
  convolve3(img, kernel);
}

void apply_box_blur3(RasterImage& img) {
  const double k = 1.0 / 9.0;
  const double kernel[3][3] = {{k, k, k}, {k, k, k}, {k, k, k}};
  convolve3(img, kernel);
}

void apply_motion_blur3(RasterImage& img, int direction) {
  const double t = 1.0 / 3.0;
  double kernel[3][3] = {};
  switch (direction) {
    case 0: kernel[1][0] = kernel[1][1] = kernel[1][2] = t; break;  // horizontal
    case 1: kernel[0][1] = kernel[1][1] = kernel[2][1] = t; break;  // vertical
    case 2: kernel[0][0] = kernel[1][1] = kernel[2][2] = t; break;  // diagonal
    default: kernel[0][2] = kernel[1][1] = kernel[2][0] = t; break; // anti-diagonal
  }
  convolve3(img, kernel);
}

void rgb_to_hsv(double r, double g, double b, double& h, double& s, double& v) {
  const double mx = std::max({r, g, b});
  const double mn = std::min({r, g, b});
  const double d = mx - mn;
  v = mx;
  s = mx > 0.0 ? d / mx : 0.0;
  if (d <= 0.0) {
    h = 0.0;
    return;
  }
  if (mx == r)
    h = 60.0 * std::fmod((g - b) / d, 6.0);
  else if (mx == g)
    h = 60.0 * ((b - r) / d + 2.0);
  else
    h = 60.0 * ((r - g) / d + 4.0);
  if (h < 0.0) h += 360.0;
}

void hsv_to_rgb(double h, double s, double v, double& r, double& g, double& b) {
  const double c = v * s;
  const double hp = h / 60.0;
  const double x = c * (1.0 - std::abs(std::fmod(hp, 2.0) - 1.0));
  double r1 = 0, g1 = 0, b1 = 0;
  if (hp < 1) { r1 = c; g1 = x; }
  else if (hp < 2) { r1 = x; g1 = c; }
  else if (hp < 3) { g1 = c; b1 = x; }
  else if (hp < 4) { g1 = x; b1 = c; }
  else if (hp < 5) { r1 = x; b1 = c; }
  else { r1 = c; b1 = x; }
  const double m = v - c;
  r = r1 + m;
  g = g1 + m;
  b = b1 + m;
}

void apply_hue_saturation(RasterImage& img, double hue_deg, double sat_shift, double val_shift) {
  if (img.channels == 1) {
    // Grayscale has no hue or saturation; only the value shift applies.
    for (float& v : img.data) v = static_cast<float>(std::clamp(v + val_shift, 0.0, 1.0));
    return;
  }
  for (int y = 0; y < img.height; ++y) {
    for (int x = 0; x < img.width; ++x) {
      double h, s, v;
      rgb_to_hsv(img.at(x, y, 0), img.at(x, y, 1), img.at(x, y, 2), h, s, v);
      h = std::fmod(h + hue_deg + 360.0, 360.0);
      s = std::clamp(s + sat_shift, 0.0, 1.0);
      v = std::clamp(v + val_shift, 0.0, 1.0);
      double r, g, b;
      hsv_to_rgb(h, s, v, r, g, b);
      img.at(x, y, 0) = static_cast<float>(std::clamp(r, 0.0, 1.0));
      img.at(x, y, 1) = static_cast<float>(std::clamp(g, 0.0, 1.0));
      img.at(x, y, 2) = static_cast<float>(std::clamp(b, 0.0, 1.0));
    }
  }
}

// Contrast-limited adaptive histogram equalization over a tile grid, 256
// bins, tile LUTs blended bilinearly per pixel.
void clahe_channel(std::vector<float>& chan, int w, int h, int grid, double clip_limit) {
  const int bins = 256;
  std::vector<std::vector<double>> luts(static_cast<size_t>(grid) * grid,
                                        std::vector<double>(bins, 0.0));
  for (int ty = 0; ty < grid; ++ty) {
    const int y0 = ty * h / grid, y1 = (ty + 1) * h / grid;
    for (int tx = 0; tx < grid; ++tx) {
      const int x0 = tx * w / grid, x1 = (tx + 1) * w / grid;
      const int area = std::max(1, (x1 - x0) * (y1 - y0));
      std::vector<int> hist(bins, 0);
      for (int y = y0; y < y1; ++y)
        for (int x = x0; x < x1; ++x)
          hist[std::min(bins - 1, static_cast<int>(chan[size_t(y) * w + x] * bins))]++;

      const int limit = std::max(1, static_cast<int>(clip_limit * area / bins));
      int excess = 0;
      for (int& count : hist) {
        if (count > limit) {
          excess += count - limit;
          count = limit;
        }
      }
      const int bonus = excess / bins;
      int remainder = excess % bins;
      for (int b = 0; b < bins; ++b) {
        hist[b] += bonus;
        if (remainder > 0) { hist[b]++; --remainder; }
      }

      auto& lut = luts[size_t(ty) * grid + tx];
      int cum = 0;
      for (int b = 0; b < bins; ++b) {
        cum += hist[b];
        lut[b] = static_cast<double>(cum) / area;
      }
    }
  }

  for (int y = 0; y < h; ++y) {
    const double fy = (y + 0.5) * grid / h - 0.5;
    const int ty0 = std::clamp(static_cast<int>(std::floor(fy)), 0, grid - 1);
    const int ty1 = std::min(ty0 + 1, grid - 1);
    const double wy = std::clamp(fy - ty0, 0.0, 1.0);
    for (int x = 0; x < w; ++x) {
      const double fx = (x + 0.5) * grid / w - 0.5;
      const int tx0 = std::clamp(static_cast<int>(std::floor(fx)), 0, grid - 1);
      const int tx1 = std::min(tx0 + 1, grid - 1);
      const double wx = std::clamp(fx - tx0, 0.0, 1.0);
      const int b = std::min(bins - 1, static_cast<int>(chan[size_t(y) * w + x] * bins));
      const double top = luts[size_t(ty0) * grid + tx0][b] * (1.0 - wx) +
                         luts[size_t(ty0) * grid + tx1][b] * wx;
      const double bot = luts[size_t(ty1) * grid + tx0][b] * (1.0 - wx) +
                         luts[size_t(ty1) * grid + tx1][b] * wx;
      chan[size_t(y) * w + x] =
          static_cast<float>(std::clamp(top * (1.0 - wy) + bot * wy, 0.0, 1.0));
    }
  }
}

void apply_clahe(RasterImage& img, int grid, double clip_limit) {
  if (img.channels == 1) {
    clahe_channel(img.data, img.width, img.height, grid, clip_limit);
    return;
  }
  // Equalize luma only, keep chroma (BT.601 YCbCr).
  const size_t n = static_cast<size_t>(img.width) * img.height;
  std::vector<float> luma(n);
  std::vector<double> cb(n), cr(n);
  for (size_t i = 0; i < n; ++i) {
    const double r = img.data[i * 3], g = img.data[i * 3 + 1], b = img.data[i * 3 + 2];
    const double y = 0.299 * r + 0.587 * g + 0.114 * b;
    luma[i] = static_cast<float>(std::clamp(y, 0.0, 1.0));
    cb[i] = 0.564 * (b - y);
    cr[i] = 0.713 * (r - y);
  }
  clahe_channel(luma, img.width, img.height, grid, clip_limit);
  for (size_t i = 0; i < n; ++i) {
    const double y = luma[i];
    const double r = y + cr[i] / 0.713;
    const double b = y + cb[i] / 0.564;
    const double g = (y - 0.299 * r - 0.114 * b) / 0.587;
    img.data[i * 3] = static_cast<float>(std::clamp(r, 0.0, 1.0));
    img.data[i * 3 + 1] = static_cast<float>(std::clamp(g, 0.0, 1.0));
    img.data[i * 3 + 2] = static_cast<float>(std::clamp(b, 0.0, 1.0));
  }
}

}  // namespace

RasterImage flip_image_h(const RasterImage& img) {
  RasterImage out = img;
  for (int y = 0; y < img.height; ++y)
    for (int x = 0; x < img.width; ++x)
      for (int c = 0; c < img.channels; ++c) out.at(x, y, c) = img.at(img.width - 1 - x, y, c);
  return out;
}

LabelMask flip_mask_h(const LabelMask& mask) {
  LabelMask out = mask;
  for (int y = 0; y < mask.height; ++y)
    for (int x = 0; x < mask.width; ++x) out.at(x, y) = mask.at(mask.width - 1 - x, y);
  return out;
}

AugmentationSpec AugmentationSpec::table_defaults(int target_size) {
  AugmentationSpec spec;
  spec.target_size = target_size;
  return spec;
}

AugmentationSpec AugmentationSpec::identity(int target_size) {
  AugmentationSpec spec;
  spec.target_size = target_size;
  spec.p_hflip = 0.0;
  spec.p_shift_scale_rotate = 0.0;
  spec.p_gauss_noise = 0.0;
  spec.p_perspective = 0.0;
  spec.p_color_group = 0.0;
  spec.p_sharpen_group = 0.0;
  spec.p_hsv_group = 0.0;
  return spec;
}

void AugmentationSpec::validate() const {
  if (target_size <= 0) throw std::invalid_argument("augment: target_size must be > 0");
  for (double p : {p_hflip, p_shift_scale_rotate, p_gauss_noise, p_perspective, p_color_group,
                   p_sharpen_group, p_hsv_group}) {
    if (p < 0.0 || p > 1.0) throw std::invalid_argument("augment: probability outside [0, 1]");
  }
  if (scale_limit < 0.0 || scale_limit >= 1.0)
    throw std::invalid_argument("augment: scale_limit outside [0, 1)");
  if (clahe_tile_grid < 1) throw std::invalid_argument("augment: clahe_tile_grid must be >= 1");
}

double TraceStep::param(const std::string& key) const {
  for (const auto& [name_, value] : params)
    if (name_ == key) return value;
  throw std::out_of_range("trace step '" + name + "' has no param '" + key + "'");
}

nlohmann::json AugmentTrace::to_json() const {
  nlohmann::json steps_json = nlohmann::json::array();
  for (const auto& step : steps) {
    nlohmann::json params_json = nlohmann::json::object();
    for (const auto& [key, value] : step.params) params_json[key] = value;
    steps_json.push_back(
        {{"name", step.name}, {"geometric", step.geometric}, {"params", params_json}});
  }
  return nlohmann::json{{"steps", steps_json}};
}

AugmentResult augment(const RasterImage& image, const LabelMask& mask,
                      const AugmentationSpec& spec, uint64_t seed) {
  spec.validate();
  validate(image);
  if (image.width != mask.width || image.height != mask.height)
    throw std::invalid_argument("augment: image and mask dimensions differ");

  SplitRng rng(seed);
  AugmentResult out{image, mask, {}};
  auto record = [&out](std::string name, bool geometric,
                       std::vector<std::pair<std::string, double>> params) {
    out.trace.steps.push_back({std::move(name), geometric, std::move(params)});
  };

  // 1. horizontal flip
  if (rng.next_double() < spec.p_hflip) {
    out.image = flip_image_h(out.image);
    out.mask = flip_mask_h(out.mask);
    record("hflip", true, {});
  }

  // 2. shift-scale-rotate
  if (rng.next_double() < spec.p_shift_scale_rotate) {
    AffineParams p;
    p.scale = 1.0 + rng.uniform(-spec.scale_limit, spec.scale_limit);
    p.angle_deg = rng.uniform(-spec.rotate_limit, spec.rotate_limit);
    p.dx = rng.uniform(-spec.shift_limit, spec.shift_limit) * out.image.width;
    p.dy = rng.uniform(-spec.shift_limit, spec.shift_limit) * out.image.height;
    const auto map = affine_inverse_map(p, out.image.width, out.image.height);
    out.image = warp_image(out.image, out.image.width, out.image.height, map);
    out.mask = warp_mask(out.mask, out.mask.width, out.mask.height, map);
    record("shift_scale_rotate", true,
           {{"scale", p.scale}, {"angle_deg", p.angle_deg}, {"dx", p.dx}, {"dy", p.dy}});
  }

  // 3. pad to target (centered, constant-zero border)
  {
    const int pad_w = std::max(0, spec.target_size - out.image.width);
    const int pad_h = std::max(0, spec.target_size - out.image.height);
    const int left = pad_w / 2, right = pad_w - pad_w / 2;
    const int top = pad_h / 2, bottom = pad_h - pad_h / 2;
    out.image = pad_image(out.image, left, top, right, bottom);
    out.mask = pad_mask(out.mask, left, top, right, bottom);
    record("pad", true,
           {{"left", double(left)}, {"top", double(top)}, {"right", double(right)},
            {"bottom", double(bottom)}});
  }

  // 4. random crop to target
  {
    const int w = out.image.width, h = out.image.height;
    if (w < spec.target_size || h < spec.target_size)
      throw std::invalid_argument("augment: target size larger than padded input");
    const int x0 = static_cast<int>(rng.next_below(uint64_t(w - spec.target_size) + 1));
    const int y0 = static_cast<int>(rng.next_below(uint64_t(h - spec.target_size) + 1));
    out.image = crop_image(out.image, x0, y0, spec.target_size, spec.target_size);
    out.mask = crop_mask(out.mask, x0, y0, spec.target_size, spec.target_size);
    record("crop", true,
           {{"x", double(x0)}, {"y", double(y0)}, {"width", double(spec.target_size)},
            {"height", double(spec.target_size)}});
  }

  // 5. Gaussian noise
  if (rng.next_double() < spec.p_gauss_noise) {
    const double sigma = rng.uniform(spec.noise_sigma_min, spec.noise_sigma_max);
    apply_gauss_noise(out.image, sigma, rng);
    record("gauss_noise", false, {{"sigma", sigma}});
  }

  // 6. perspective
  if (rng.next_double() < spec.p_perspective) {
    const double s = rng.uniform(spec.perspective_scale_min, spec.perspective_scale_max);
    const double w = out.image.width, h = out.image.height;
    std::array<std::pair<double, double>, 4> dst = {
        {{0.0, 0.0}, {w - 1, 0.0}, {w - 1, h - 1}, {0.0, h - 1}}};
    std::array<std::pair<double, double>, 4> src;
    for (int i = 0; i < 4; ++i) {
      src[i] = {dst[i].first + rng.uniform(-s, s) * w, dst[i].second + rng.uniform(-s, s) * h};
    }
    const auto H = homography_from_corners(dst, src);
    const auto map = homography_map(H);
    out.image = warp_image(out.image, out.image.width, out.image.height, map);
    out.mask = warp_mask(out.mask, out.mask.width, out.mask.height, map);
    record("perspective", true,
           {{"m00", H[0]}, {"m01", H[1]}, {"m02", H[2]}, {"m10", H[3]}, {"m11", H[4]},
            {"m12", H[5]}, {"m20", H[6]}, {"m21", H[7]}, {"m22", H[8]}});
  }

  // 7. one of CLAHE / brightness-contrast / gamma
  if (rng.next_double() < spec.p_color_group) {
    switch (rng.next_below(3)) {
      case 0:
        apply_clahe(out.image, spec.clahe_tile_grid, spec.clahe_clip_limit);
        record("clahe", false,
               {{"tile_grid", double(spec.clahe_tile_grid)}, {"clip_limit", spec.clahe_clip_limit}});
        break;
      case 1: {
        const double alpha = 1.0 + rng.uniform(-spec.contrast_limit, spec.contrast_limit);
        const double beta = rng.uniform(-spec.brightness_limit, spec.brightness_limit);
        apply_brightness_contrast(out.image, alpha, beta);
        record("brightness_contrast", false, {{"alpha", alpha}, {"beta", beta}});
        break;
      }
      default: {
        const double gamma = rng.uniform(spec.gamma_min, spec.gamma_max);
        apply_gamma(out.image, gamma);
        record("gamma", false, {{"gamma", gamma}});
        break;
      }
    }
  }

  // 8. one of sharpen / blur / motion blur
  if (rng.next_double() < spec.p_sharpen_group) {
    switch (rng.next_below(3)) {
      case 0: {
        const double alpha = rng.uniform(spec.sharpen_alpha_min, spec.sharpen_alpha_max);
        const double lightness = rng.uniform(spec.sharpen_lightness_min, spec.sharpen_lightness_max);
        apply_sharpen(out.image, alpha, lightness);
        record("sharpen", false, {{"alpha", alpha}, {"lightness", lightness}});
        break;
      }
      case 1:
        apply_box_blur3(out.image);
        record("blur", false, {{"kernel", 3.0}});
        break;
      default: {
        const int direction = static_cast<int>(rng.next_below(4));
        apply_motion_blur3(out.image, direction);
        record("motion_blur", false, {{"kernel", 3.0}, {"direction", double(direction)}});
        break;
      }
    }
  }

  // 9. one of brightness-contrast / hue-saturation
  if (rng.next_double() < spec.p_hsv_group) {
    if (rng.next_below(2) == 0) {
      const double alpha = 1.0 + rng.uniform(-spec.contrast_limit, spec.contrast_limit);
      const double beta = rng.uniform(-spec.brightness_limit, spec.brightness_limit);
      apply_brightness_contrast(out.image, alpha, beta);
      record("brightness_contrast", false, {{"alpha", alpha}, {"beta", beta}});
    } else {
      const double hue = rng.uniform(-spec.hue_shift_limit_deg, spec.hue_shift_limit_deg);
      const double sat = rng.uniform(-spec.sat_shift_limit, spec.sat_shift_limit);
      const double val = rng.uniform(-spec.val_shift_limit, spec.val_shift_limit);
      apply_hue_saturation(out.image, hue, sat, val);
      record("hue_saturation", false, {{"hue_deg", hue}, {"sat_shift", sat}, {"val_shift", val}});
    }
  }

  return out;
}

}  // namespace thermoseg
