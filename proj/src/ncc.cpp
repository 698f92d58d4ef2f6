#include "thermoseg/ncc.hpp"

#include <cmath>
#include <stdexcept>
#include <vector>

namespace thermoseg {

CorrelationSurface ncc_map(const RasterImage& scene, const RasterImage& tmpl) {
  if (scene.channels != 1 || tmpl.channels != 1)
    throw std::invalid_argument("ncc_map: inputs must be single-channel");
  if (scene.width <= 0 || scene.height <= 0 || tmpl.width <= 0 || tmpl.height <= 0)
    throw std::invalid_argument("ncc_map: empty input");
  if (tmpl.width > scene.width || tmpl.height > scene.height)
    throw std::invalid_argument("ncc_map: template larger than scene");

  const int tw = tmpl.width, th = tmpl.height;
  const double n = static_cast<double>(tw) * th;

  double t_sum = 0.0;
  for (float v : tmpl.data) t_sum += v;
  const double t_mean = t_sum / n;
  double t_var_sum = 0.0;
  for (float v : tmpl.data) {
    const double d = v - t_mean;
    t_var_sum += d * d;
  }
  if (t_var_sum <= 0.0) throw std::invalid_argument("ncc_map: zero-variance template");

  // Zero-mean template; the cross term then reduces to sum(s * tz).
  std::vector<double> tz(tmpl.data.size());
  for (size_t i = 0; i < tmpl.data.size(); ++i) tz[i] = tmpl.data[i] - t_mean;

  // Integral images of the scene and its squares, (w+1) x (h+1).
  const int iw = scene.width + 1;
  std::vector<double> sum1(static_cast<size_t>(iw) * (scene.height + 1), 0.0);
  std::vector<double> sum2(static_cast<size_t>(iw) * (scene.height + 1), 0.0);
  for (int y = 0; y < scene.height; ++y) {
    double row1 = 0.0, row2 = 0.0;
    for (int x = 0; x < scene.width; ++x) {
      const double v = scene.at(x, y);
      row1 += v;
      row2 += v * v;
      const size_t idx = static_cast<size_t>(y + 1) * iw + (x + 1);
      sum1[idx] = sum1[idx - iw] + row1;
      sum2[idx] = sum2[idx - iw] + row2;
    }
  }
  auto window = [&](const std::vector<double>& integral, int x, int y) {
    const size_t a = static_cast<size_t>(y) * iw + x;
    const size_t b = static_cast<size_t>(y + th) * iw + x;
    return integral[b + tw] - integral[b] - integral[a + tw] + integral[a];
  };

  // Integral-image differences of a flat region collapse to rounding noise;
  // anything this small counts as zero variance.
  const double zero_var = 1e-10 * n;

  CorrelationSurface surface;
  surface.width = scene.width - tw + 1;
  surface.height = scene.height - th + 1;
  surface.scores.assign(static_cast<size_t>(surface.width) * surface.height, 0.0);

  for (int y = 0; y < surface.height; ++y) {
    for (int x = 0; x < surface.width; ++x) {
      const double s_sum = window(sum1, x, y);
      const double s_var_sum = window(sum2, x, y) - s_sum * s_sum / n;
      if (s_var_sum <= zero_var) continue;  // score stays 0

      double cross = 0.0;
      const double* trow = tz.data();
      for (int ty = 0; ty < th; ++ty) {
        const float* srow = &scene.data[static_cast<size_t>(y + ty) * scene.width + x];
        for (int tx = 0; tx < tw; ++tx) cross += srow[tx] * trow[tx];
        trow += tw;
      }
      surface.at(x, y) = cross / std::sqrt(s_var_sum * t_var_sum);
    }
  }
  return surface;
}

}  // namespace thermoseg
