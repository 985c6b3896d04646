// Iterative (isodata-style) global thresholding and erosion-subtraction
// edge extraction producing single-pixel-wide object boundaries.
#pragma once

#include <array>
#include <cmath>
#include <vector>

#include "textbin/image.hpp"

namespace textbin {

struct IterativeThresholdParams {
  double tolerance = 0.5;  // stop when |T_{k+1} - T_k| < tolerance
  int max_iterations = 256;
};

struct IterativeThresholdResult {
  double threshold = 0.0;
  int iterations = 0;
  std::vector<double> history;  // T^0, T^1, ...; threshold == history.back()
};

// T^0 = (Zmin + Zmax) / 2; then T_{k+1} = (Z1 + Z2) / 2 where Z1/Z2 are the
// mean gray of the below-threshold and at-or-above classes. The power
// coefficient N(i,j) is fixed at 1. An empty class contributes the current
// threshold as its mean.
inline IterativeThresholdResult iterative_threshold(const GrayImage& img,
                                                    const IterativeThresholdParams& params = {}) {
  Histogram h = histogram(img);
  int zmin = 0, zmax = 255;
  while (h.bins[zmin] == 0) ++zmin;
  while (h.bins[zmax] == 0) --zmax;

  IterativeThresholdResult res;
  if (zmin == zmax) {
    res.threshold = zmin;
    res.iterations = 1;
    res.history = {res.threshold};
    return res;
  }

  // prefix sums over the histogram make each iteration O(1) in image size
  std::array<std::uint64_t, 257> cnt{}, sum{};
  for (int i = 0; i < 256; ++i) {
    cnt[i + 1] = cnt[i] + h.bins[i];
    sum[i + 1] = sum[i] + h.bins[i] * static_cast<std::uint64_t>(i);
  }

  double t = (zmin + zmax) / 2.0;
  res.history.push_back(t);
  for (int k = 0; k < params.max_iterations; ++k) {
    // gray level i is "below" iff i < t
    int cut = std::min(256, static_cast<int>(std::ceil(t)));
    std::uint64_t n1 = cnt[cut], n2 = cnt[256] - n1;
    std::uint64_t s1 = sum[cut], s2 = sum[256] - s1;
    double z1 = n1 ? static_cast<double>(s1) / n1 : t;
    double z2 = n2 ? static_cast<double>(s2) / n2 : t;
    double next = (z1 + z2) / 2.0;
    res.history.push_back(next);
    bool done = std::abs(next - t) < params.tolerance;
    t = next;
    if (done) break;
  }
  res.threshold = t;
  res.iterations = static_cast<int>(res.history.size());
  return res;
}

// Foreground iff f(x,y) >= t.
inline BinaryImage binarize_at(const GrayImage& img, double t) {
  BinaryImage out(img.width, img.height);
  for (std::size_t i = 0; i < img.data.size(); ++i)
    out.data[i] = img.data[i] >= t ? 1 : 0;
  return out;
}

struct StructuringElement {
  std::array<std::array<bool, 3>, 3> shape{{{true, true, true}, {true, true, true}, {true, true, true}}};
};

// Out-of-bounds neighbors count as background.
inline BinaryImage erode(const BinaryImage& img, const StructuringElement& se = {}) {
  BinaryImage out(img.width, img.height);
  for (int y = 0; y < img.height; ++y) {
    for (int x = 0; x < img.width; ++x) {
      bool keep = true;
      for (int dy = -1; dy <= 1 && keep; ++dy) {
        for (int dx = -1; dx <= 1 && keep; ++dx) {
          if (!se.shape[dy + 1][dx + 1]) continue;
          int sx = x + dx, sy = y + dy;
          if (sx < 0 || sy < 0 || sx >= img.width || sy >= img.height || !img.at(sx, sy))
            keep = false;
        }
      }
      out.set(x, y, keep);
    }
  }
  return out;
}

// Boundary extraction: B minus erode(B).
inline BinaryImage boundary(const BinaryImage& img, const StructuringElement& se = {}) {
  BinaryImage er = erode(img, se);
  BinaryImage out(img.width, img.height);
  for (std::size_t i = 0; i < img.data.size(); ++i)
    out.data[i] = (img.data[i] && !er.data[i]) ? 1 : 0;
  return out;
}

// Orient the thresholded image so foreground is the minority class; with
// out-of-bounds-as-background erosion this suppresses the spurious
// full-frame edge a majority foreground would produce. Stroke boundaries
// are identical under complement.
inline BinaryImage orient_minority_foreground(const BinaryImage& img) {
  return img.count_true() * 2 > img.pixel_count() ? img.complemented() : img;
}

inline BinaryImage extract_edges(const GrayImage& img,
                                 const IterativeThresholdParams& params = {},
                                 const StructuringElement& se = {}) {
  IterativeThresholdResult t = iterative_threshold(img, params);
  BinaryImage b = orient_minority_foreground(binarize_at(img, t.threshold));
  return boundary(b, se);
}

}  // namespace textbin
