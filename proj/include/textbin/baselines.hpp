// Reference binarizers: Otsu global thresholding and Niblack local
// thresholding (integral-image mean/variance).
#pragma once

#include <cmath>
#include <stdexcept>
#include <vector>

#include "textbin/edge_detect.hpp"
#include "textbin/image.hpp"

namespace textbin {

struct NiblackParams {
  int window = 15;  // odd, >= 3
  double k = -0.2;  // dark-text orientation: text iff value < m + k*s
};

// Threshold t splits gray levels into [0, t) and [t, 255]; returns the t
// maximizing between-class variance, smallest t on ties.
inline int otsu_threshold(const Histogram& h) {
  if (h.total == 0) throw std::invalid_argument("otsu_threshold: empty histogram");
  std::uint64_t total = h.total;
  std::uint64_t sum_all = 0;
  for (int i = 0; i < 256; ++i) sum_all += h.bins[i] * static_cast<std::uint64_t>(i);

  int best_t = 0;
  double best_var = -1.0;
  std::uint64_t n0 = 0, s0 = 0;
  for (int t = 0; t < 256; ++t) {
    // classes for this t: below = [0, t), at-or-above = [t, 255]
    std::uint64_t n1 = total - n0;
    if (n0 > 0 && n1 > 0) {
      double mu0 = static_cast<double>(s0) / n0;
      double mu1 = static_cast<double>(sum_all - s0) / n1;
      double w0 = static_cast<double>(n0) / total;
      double w1 = static_cast<double>(n1) / total;
      double var = w0 * w1 * (mu0 - mu1) * (mu0 - mu1);
      if (var > best_var) {
        best_var = var;
        best_t = t;
      }
    } else if (best_var < 0.0) {
      best_var = 0.0;
      best_t = std::min(best_t, t);
    }
    n0 += h.bins[t];
    s0 += h.bins[t] * static_cast<std::uint64_t>(t);
  }
  return best_t;
}

// Otsu split with the minority class rendered as foreground (white text).
inline BinaryImage otsu_binarize(const GrayImage& img) {
  int t = otsu_threshold(histogram(img));
  BinaryImage b = binarize_at(img, t);
  return orient_minority_foreground(b);
}

namespace detail {

// Summed-area tables over an edge-replicated padding of the image.
struct LocalStats {
  int width, height, radius;
  std::vector<std::uint64_t> sum, sum_sq;  // (w+2r+1) x (h+2r+1) integrals
  int stride;

  LocalStats(const GrayImage& img, int window)
      : width(img.width), height(img.height), radius(window / 2) {
    int pw = width + 2 * radius, ph = height + 2 * radius;
    stride = pw + 1;
    sum.assign(static_cast<std::size_t>(stride) * (ph + 1), 0);
    sum_sq.assign(sum.size(), 0);
    for (int y = 0; y < ph; ++y) {
      for (int x = 0; x < pw; ++x) {
        int sx = std::clamp(x - radius, 0, width - 1);
        int sy = std::clamp(y - radius, 0, height - 1);
        std::uint64_t v = img.at(sx, sy);
        std::size_t i = static_cast<std::size_t>(y + 1) * stride + (x + 1);
        std::size_t up = i - stride;
        sum[i] = v + sum[i - 1] + sum[up] - sum[up - 1];
        sum_sq[i] = v * v + sum_sq[i - 1] + sum_sq[up] - sum_sq[up - 1];
      }
    }
  }

  // mean and stddev of the window centered at (x, y) in image coordinates
  void at(int x, int y, double& mean, double& stddev) const {
    int side = 2 * radius + 1;
    // window occupies padded rows/cols [x, x+side) x [y, y+side)
    std::size_t a = static_cast<std::size_t>(y) * stride + x;
    std::size_t b = static_cast<std::size_t>(y) * stride + x + side;
    std::size_t c = static_cast<std::size_t>(y + side) * stride + x;
    std::size_t d = static_cast<std::size_t>(y + side) * stride + x + side;
    double n = static_cast<double>(side) * side;
    double s = static_cast<double>(sum[d] - sum[b] - sum[c] + sum[a]);
    double s2 = static_cast<double>(sum_sq[d] - sum_sq[b] - sum_sq[c] + sum_sq[a]);
    mean = s / n;
    double var = s2 / n - mean * mean;
    stddev = std::sqrt(std::max(0.0, var));
  }
};

}  // namespace detail

inline BinaryImage niblack_binarize(const GrayImage& img, const NiblackParams& params = {}) {
  if (params.window < 3 || params.window % 2 == 0)
    throw std::invalid_argument("niblack: window must be odd and >= 3");
  detail::LocalStats stats(img, params.window);
  BinaryImage out(img.width, img.height);
  for (int y = 0; y < img.height; ++y) {
    for (int x = 0; x < img.width; ++x) {
      double m, s;
      stats.at(x, y, m, s);
      out.set(x, y, img.at(x, y) < m + params.k * s);
    }
  }
  return out;
}

}  // namespace textbin
