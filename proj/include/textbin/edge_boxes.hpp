// 8-connected component labeling (two-pass union-find), edge-box
// construction, and the geometric box filters: aspect-ratio band and the
// nested-box containment rule.
#pragma once

#include <cstdint>
#include <numeric>
#include <vector>

#include "textbin/image.hpp"

namespace textbin {

struct EdgeBox {
  std::int32_t label = 0;
  int x_min = 0, y_min = 0, x_max = 0, y_max = 0;  // inclusive
  std::int64_t pixel_count = 0;

  int width() const { return x_max - x_min + 1; }
  int height() const { return y_max - y_min + 1; }
  std::int64_t area() const { return static_cast<std::int64_t>(width()) * height(); }
  double aspect_ratio() const { return static_cast<double>(width()) / height(); }

  // strict containment on all four coordinates
  bool strictly_contains(const EdgeBox& o) const {
    return o.x_min > x_min && o.y_min > y_min && o.x_max < x_max && o.y_max < y_max;
  }

  bool operator==(const EdgeBox&) const = default;
};

struct LabeledEdgeMap {
  int width = 0, height = 0;
  std::vector<std::int32_t> labels;  // 0 = background
  std::vector<EdgeBox> boxes;        // boxes[k].label == k + 1
};

namespace detail {

class UnionFind {
 public:
  std::int32_t make_set() {
    parent_.push_back(static_cast<std::int32_t>(parent_.size()));
    return parent_.back();
  }
  std::int32_t find(std::int32_t x) {
    std::int32_t root = x;
    while (parent_[root] != root) root = parent_[root];
    while (parent_[x] != root) {  // path compression
      std::int32_t next = parent_[x];
      parent_[x] = root;
      x = next;
    }
    return root;
  }
  void unite(std::int32_t a, std::int32_t b) {
    a = find(a);
    b = find(b);
    if (a != b) parent_[std::max(a, b)] = std::min(a, b);
  }

 private:
  std::vector<std::int32_t> parent_;
};

}  // namespace detail

inline LabeledEdgeMap label_components(const BinaryImage& edges) {
  LabeledEdgeMap out;
  out.width = edges.width;
  out.height = edges.height;
  out.labels.assign(edges.pixel_count(), 0);

  detail::UnionFind uf;
  std::vector<std::int32_t> provisional(edges.pixel_count(), -1);
  uf.make_set();  // slot 0 reserved for background

  // first pass: provisional labels from the already-scanned half-neighborhood
  for (int y = 0; y < edges.height; ++y) {
    for (int x = 0; x < edges.width; ++x) {
      if (!edges.at(x, y)) continue;
      std::size_t idx = static_cast<std::size_t>(y) * edges.width + x;
      std::int32_t lbl = -1;
      const int noff[4][2] = {{-1, 0}, {-1, -1}, {0, -1}, {1, -1}};  // W, NW, N, NE
      for (auto [dx, dy] : noff) {
        int nx = x + dx, ny = y + dy;
        if (nx < 0 || ny < 0 || nx >= edges.width) continue;
        std::int32_t nl = provisional[static_cast<std::size_t>(ny) * edges.width + nx];
        if (nl < 0) continue;
        if (lbl < 0)
          lbl = nl;
        else
          uf.unite(lbl, nl);
      }
      if (lbl < 0) lbl = uf.make_set();
      provisional[idx] = lbl;
    }
  }

  // second pass: map roots to consecutive labels and accumulate boxes
  std::vector<std::int32_t> root_to_final;
  std::vector<std::int32_t> remap;
  for (int y = 0; y < edges.height; ++y) {
    for (int x = 0; x < edges.width; ++x) {
      std::size_t idx = static_cast<std::size_t>(y) * edges.width + x;
      if (provisional[idx] < 0) continue;
      std::int32_t root = uf.find(provisional[idx]);
      if (static_cast<std::size_t>(root) >= remap.size()) remap.resize(root + 1, 0);
      if (remap[root] == 0) {
        remap[root] = static_cast<std::int32_t>(out.boxes.size()) + 1;
        EdgeBox b;
        b.label = remap[root];
        b.x_min = b.x_max = x;
        b.y_min = b.y_max = y;
        out.boxes.push_back(b);
      }
      std::int32_t fl = remap[root];
      out.labels[idx] = fl;
      EdgeBox& b = out.boxes[fl - 1];
      b.x_min = std::min(b.x_min, x);
      b.x_max = std::max(b.x_max, x);
      b.y_min = std::min(b.y_min, y);
      b.y_max = std::max(b.y_max, y);
      ++b.pixel_count;
    }
  }
  return out;
}

// Keep boxes with lo <= width/height <= hi (inclusive).
inline std::vector<EdgeBox> filter_aspect_ratio(const std::vector<EdgeBox>& boxes,
                                                double lo = 0.1, double hi = 10.0) {
  std::vector<EdgeBox> kept;
  kept.reserve(boxes.size());
  for (const auto& b : boxes) {
    double r = b.aspect_ratio();
    if (r >= lo && r <= hi) kept.push_back(b);
  }
  return kept;
}

// Nested-box rule, evaluated in one pass over the input set:
//  - a box strictly containing 1 or 2 boxes rejects those internals
//    (character inner boundaries) and is itself kept;
//  - a box strictly containing 3 or more boxes is rejected as a container
//    frame and its internals survive it.
// Containment counts every box fully inside (transitively nested ones too).
inline std::vector<EdgeBox> containment_filter(const std::vector<EdgeBox>& boxes) {
  const std::size_t n = boxes.size();
  std::vector<int> n_int(n, 0);
  std::vector<std::vector<std::size_t>> inside(n);  // inside[i] = boxes inside boxes[i]
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      if (i != j && boxes[i].strictly_contains(boxes[j])) {
        ++n_int[i];
        inside[i].push_back(j);
      }

  std::vector<char> rejected(n, 0);
  for (std::size_t i = 0; i < n; ++i) {
    if (n_int[i] == 0) continue;
    if (n_int[i] < 3)
      for (std::size_t j : inside[i]) rejected[j] = 1;
    else
      rejected[i] = 1;
  }

  std::vector<EdgeBox> kept;
  kept.reserve(n);
  for (std::size_t i = 0; i < n; ++i)
    if (!rejected[i]) kept.push_back(boxes[i]);
  return kept;
}

}  // namespace textbin
