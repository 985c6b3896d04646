// Character-size uniformity check: scan the sorted size array with a
// left/right pointer window, collect windows of mutually similar sizes,
// and take the minimum window-minimum as the removal threshold T_s.
#pragma once

#include <algorithm>
#include <functional>
#include <stdexcept>
#include <vector>

#include "textbin/edge_boxes.hpp"

namespace textbin {

struct SizeWindow {
  int start_index = 0, end_index = 0;  // inclusive, into the sorted array
  std::vector<double> member_sizes;
  double window_min = 0.0;

  int count() const { return end_index - start_index + 1; }
};

struct SlidingWindowResult {
  std::vector<double> sorted_sizes;
  std::vector<SizeWindow> windows;  // valid windows only (>= 2 members)
  double t_s = 0.0;                 // 0 when no valid window exists
};

namespace detail {

// th_for(lp) yields the admission threshold for a window anchored at lp.
inline SlidingWindowResult uniformity_scan(std::vector<double> sizes,
                                           const std::function<double(double)>& th_for) {
  if (sizes.empty()) throw std::invalid_argument("uniformity_threshold: empty size list");
  std::sort(sizes.begin(), sizes.end());
  SlidingWindowResult res;
  res.sorted_sizes = sizes;

  const int n = static_cast<int>(sizes.size());
  int lp = 0;
  while (lp < n) {
    double th = th_for(sizes[lp]);
    int rp = lp + 1;
    // expand while the next element stays within th of the left end marker
    while (rp < n && sizes[rp] - sizes[lp] <= th) ++rp;
    if (rp - lp >= 2) {
      SizeWindow w;
      w.start_index = lp;
      w.end_index = rp - 1;
      w.member_sizes.assign(sizes.begin() + lp, sizes.begin() + rp);
      w.window_min = sizes[lp];
      res.windows.push_back(std::move(w));
    }
    lp = rp;  // a lone element is not evidence of uniformity; restart there
  }

  double ts = 0.0;
  for (const auto& w : res.windows)
    ts = (ts == 0.0) ? w.window_min : std::min(ts, w.window_min);
  res.t_s = ts;
  return res;
}

}  // namespace detail

// Absolute difference threshold th.
inline SlidingWindowResult uniformity_threshold(const std::vector<double>& sizes, double th) {
  if (th <= 0) throw std::invalid_argument("uniformity_threshold: th must be > 0");
  return detail::uniformity_scan(sizes, [th](double) { return th; });
}

// Relative mode: a member joins while A[j] <= (1 + ratio) * LP.
inline SlidingWindowResult uniformity_threshold_relative(const std::vector<double>& sizes,
                                                         double ratio) {
  if (ratio <= 0) throw std::invalid_argument("uniformity_threshold: ratio must be > 0");
  return detail::uniformity_scan(sizes, [ratio](double lp) { return ratio * lp; });
}

// Partition box indices by size >= t_s.
struct SizePartition {
  std::vector<std::size_t> retained;
  std::vector<std::size_t> removed;
};

inline SizePartition apply_size_threshold(const std::vector<double>& sizes, double t_s) {
  if (t_s < 0) throw std::invalid_argument("apply_size_threshold: t_s must be >= 0");
  SizePartition p;
  for (std::size_t i = 0; i < sizes.size(); ++i)
    (sizes[i] >= t_s ? p.retained : p.removed).push_back(i);
  return p;
}

enum class SizeMetric { height, width, area };

inline double box_size(const EdgeBox& b, SizeMetric m) {
  switch (m) {
    case SizeMetric::width: return b.width();
    case SizeMetric::area: return static_cast<double>(b.area());
    case SizeMetric::height: default: return b.height();
  }
}

}  // namespace textbin
