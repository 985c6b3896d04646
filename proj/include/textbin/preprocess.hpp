// Preprocessing chain: entropy-gated sigmoid contrast enhancement,
// 3x3 mask smoothing, and conditional grayscale extension.
#pragma once

#include <algorithm>
#include <array>
#include <cmath>

#include "textbin/image.hpp"

namespace textbin {

struct SmoothingMask {
  std::array<std::array<int, 3>, 3> weights{{{1, 1, 1}, {1, 2, 1}, {1, 1, 1}}};
  int divisor = 10;  // must equal the weight sum so constants are fixed points
};

struct PreprocessParams {
  // Published gate value is 38, which does not fit the [0,8] bit scale of a
  // 256-bin proportion entropy; 4.75 bits is this library's default.
  double entropy_threshold = 4.75;
  double contrast_steepness = 15.0;  // v
  double extension_gap = 80.0;       // stretch when max - min < gap
  SmoothingMask smoothing_mask{};
};

// Shannon entropy of the gray-level distribution, in bits. Range [0, 8].
inline double entropy(const Histogram& h) {
  if (h.total == 0) throw std::invalid_argument("entropy: empty histogram");
  double H = 0.0;
  for (auto b : h.bins) {
    if (b == 0) continue;
    double p = static_cast<double>(b) / static_cast<double>(h.total);
    H -= p * std::log2(p);
  }
  return H;
}

inline double mean_gray(const GrayImage& img) {
  std::uint64_t sum = 0;
  for (auto v : img.data) sum += v;
  return static_cast<double>(sum) / static_cast<double>(img.data.size());
}

// Sigmoid stretch around the image mean: C = 255 / (1 + exp((avg - T) / v)).
inline GrayImage enhance_contrast(const GrayImage& img, double v) {
  if (v <= 0) throw std::invalid_argument("enhance_contrast: v must be > 0");
  double avg = mean_gray(img);
  // 256-entry lookup keeps it one exp per gray level
  std::array<std::uint8_t, 256> lut;
  for (int t = 0; t < 256; ++t)
    lut[t] = round_u8(255.0 / (1.0 + std::exp((avg - t) / v)));
  GrayImage out(img.width, img.height);
  for (std::size_t i = 0; i < img.data.size(); ++i) out.data[i] = lut[img.data[i]];
  return out;
}

// 3x3 weighted smoothing with edge-replicated borders.
inline GrayImage smooth(const GrayImage& img, const SmoothingMask& mask = {}) {
  GrayImage out(img.width, img.height);
  for (int y = 0; y < img.height; ++y) {
    for (int x = 0; x < img.width; ++x) {
      long acc = 0;
      for (int dy = -1; dy <= 1; ++dy) {
        int sy = std::clamp(y + dy, 0, img.height - 1);
        for (int dx = -1; dx <= 1; ++dx) {
          int sx = std::clamp(x + dx, 0, img.width - 1);
          acc += static_cast<long>(mask.weights[dy + 1][dx + 1]) * img.at(sx, sy);
        }
      }
      out.at(x, y) = round_u8(static_cast<double>(acc) / mask.divisor);
    }
  }
  return out;
}

// Linear stretch to [0,255] when the occupied span is narrower than `gap`.
inline GrayImage extend_grayscale(const GrayImage& img, double gap) {
  auto [mn_it, mx_it] = std::minmax_element(img.data.begin(), img.data.end());
  int mn = *mn_it, mx = *mx_it;
  if (mx == mn || mx - mn >= gap) return img;
  double beta = 255.0 / (mx - mn);
  std::array<std::uint8_t, 256> lut{};
  for (int t = mn; t <= mx; ++t) lut[t] = round_u8((t - mn) * beta);
  GrayImage out(img.width, img.height);
  for (std::size_t i = 0; i < img.data.size(); ++i) out.data[i] = lut[img.data[i]];
  return out;
}

// Full chain: entropy gate -> contrast -> smooth -> extend.
inline GrayImage preprocess(const GrayImage& img, const PreprocessParams& params = {}) {
  GrayImage cur = img;
  if (entropy(histogram(cur)) < params.entropy_threshold)
    cur = enhance_contrast(cur, params.contrast_steepness);
  cur = smooth(cur, params.smoothing_mask);
  return extend_grayscale(cur, params.extension_gap);
}

}  // namespace textbin
