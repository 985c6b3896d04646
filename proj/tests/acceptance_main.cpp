// Acceptance suite: prints one pass/fail line per criterion and exits
// nonzero if any fails.

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <map>
#include <queue>
#include <random>
#include <string>
#include <vector>

#include "textbin/textbin.hpp"

using namespace textbin;
using Clock = std::chrono::steady_clock;

namespace {

int g_failures = 0;

void report(int num, const std::string& name, bool ok, const std::string& detail = "") {
  std::printf("criterion %d (%s): %s%s%s\n", num, name.c_str(), ok ? "PASS" : "FAIL",
              detail.empty() ? "" : " - ", detail.c_str());
  if (!ok) ++g_failures;
}

double seconds_since(Clock::time_point t0) {
  return std::chrono::duration<double>(Clock::now() - t0).count();
}

// ---- criterion 1: labeling vs BFS flood fill --------------------------------

std::vector<int> bfs_partition(const BinaryImage& img) {
  std::vector<int> part(img.pixel_count(), -1);
  int next = 0;
  for (int y = 0; y < img.height; ++y)
    for (int x = 0; x < img.width; ++x) {
      std::size_t idx = static_cast<std::size_t>(y) * img.width + x;
      if (!img.at(x, y) || part[idx] >= 0) continue;
      std::queue<std::pair<int, int>> q;
      q.push({x, y});
      part[idx] = next;
      while (!q.empty()) {
        auto [cx, cy] = q.front();
        q.pop();
        for (int dy = -1; dy <= 1; ++dy)
          for (int dx = -1; dx <= 1; ++dx) {
            int nx = cx + dx, ny = cy + dy;
            if (nx < 0 || ny < 0 || nx >= img.width || ny >= img.height) continue;
            std::size_t ni = static_cast<std::size_t>(ny) * img.width + nx;
            if (img.at(nx, ny) && part[ni] < 0) {
              part[ni] = next;
              q.push({nx, ny});
            }
          }
      }
      ++next;
    }
  return part;
}

void criterion_labeling() {
  auto t0 = Clock::now();
  std::mt19937 rng(1001);
  bool ok = true;
  for (int trial = 0; trial < 200 && ok; ++trial) {
    BinaryImage img(32, 32);
    int density = 10 + static_cast<int>(rng() % 80);
    for (auto& v : img.data) v = (static_cast<int>(rng() % 100) < density);
    auto lm = label_components(img);
    auto oracle = bfs_partition(img);
    std::map<std::int32_t, int> fwd;
    std::map<int, std::int32_t> rev;
    for (std::size_t i = 0; i < oracle.size() && ok; ++i) {
      bool fga = lm.labels[i] != 0, fgb = oracle[i] >= 0;
      if (fga != fgb) ok = false;
      if (!fga) continue;
      auto [it, ins] = fwd.try_emplace(lm.labels[i], oracle[i]);
      if (!ins && it->second != oracle[i]) ok = false;
      auto [rit, rins] = rev.try_emplace(oracle[i], lm.labels[i]);
      if (!rins && rit->second != lm.labels[i]) ok = false;
    }
    fwd.clear();
    rev.clear();
  }
  double dt = seconds_since(t0);
  report(1, "labeling oracle equivalence", ok && dt < 5.0,
         "200 images, " + std::to_string(dt).substr(0, 5) + " s");
}

// ---- criterion 2: Otsu vs exhaustive sweep ----------------------------------

int otsu_oracle(const Histogram& h) {
  int best_t = 0;
  double best = -1.0;
  for (int t = 0; t < 256; ++t) {
    std::uint64_t n0 = 0, n1 = 0, s0 = 0, s1 = 0;
    for (int i = 0; i < t; ++i) {
      n0 += h.bins[i];
      s0 += h.bins[i] * static_cast<std::uint64_t>(i);
    }
    for (int i = t; i < 256; ++i) {
      n1 += h.bins[i];
      s1 += h.bins[i] * static_cast<std::uint64_t>(i);
    }
    if (n0 == 0 || n1 == 0) {
      if (best < 0.0) {
        best = 0.0;
        best_t = t;
      }
      continue;
    }
    double mu0 = static_cast<double>(s0) / n0;
    double mu1 = static_cast<double>(s1) / n1;
    double w0 = static_cast<double>(n0) / h.total;
    double w1 = static_cast<double>(n1) / h.total;
    double var = w0 * w1 * (mu0 - mu1) * (mu0 - mu1);
    if (var > best) {
      best = var;
      best_t = t;
    }
  }
  return best_t;
}

void criterion_otsu() {
  std::mt19937 rng(1002);
  bool ok = true;
  for (int trial = 0; trial < 100 && ok; ++trial) {
    Histogram h;
    int levels = 1 + static_cast<int>(rng() % 256);
    for (int i = 0; i < levels; ++i) {
      int bin = static_cast<int>(rng() % 256);
      std::uint64_t count = rng() % 1000;
      h.bins[bin] += count;
      h.total += count;
    }
    if (h.total == 0) {
      h.bins[0] = 1;
      h.total = 1;
    }
    if (otsu_threshold(h) != otsu_oracle(h)) ok = false;
  }
  report(2, "otsu oracle equivalence", ok, "100 histograms, exact");
}

// ---- criterion 3: iterative-threshold convergence ---------------------------

double recurrence_oracle(const GrayImage& img) {
  int zmin = 255, zmax = 0;
  for (auto v : img.data) {
    zmin = std::min<int>(zmin, v);
    zmax = std::max<int>(zmax, v);
  }
  double t = (zmin + zmax) / 2.0;
  for (int k = 0; k < 256; ++k) {
    double s1 = 0, s2 = 0;
    long n1 = 0, n2 = 0;
    for (auto v : img.data) {
      if (v < t) {
        s1 += v;
        ++n1;
      } else {
        s2 += v;
        ++n2;
      }
    }
    double z1 = n1 ? s1 / n1 : t;
    double z2 = n2 ? s2 / n2 : t;
    double next = (z1 + z2) / 2.0;
    bool done = std::abs(next - t) < 0.5;
    t = next;
    if (done) break;
  }
  return t;
}

void criterion_iterative() {
  std::mt19937 rng(1003);
  bool ok = true;
  std::vector<GrayImage> cases;
  for (int trial = 0; trial < 100; ++trial) {
    GrayImage img(24, 24);
    for (auto& v : img.data) v = static_cast<std::uint8_t>(rng() & 0xff);
    cases.push_back(std::move(img));
  }
  cases.emplace_back(8, 8, 80);  // constant
  GrayImage two(10, 2);
  for (std::size_t i = 0; i < two.data.size(); ++i) two.data[i] = (i % 2) ? 200 : 50;
  cases.push_back(two);

  for (const auto& img : cases) {
    auto res = iterative_threshold(img);
    if (res.history.size() > 257) ok = false;
    if (std::abs(res.threshold - recurrence_oracle(img)) >= 0.5) ok = false;
  }
  auto anchor = iterative_threshold(two);
  if (anchor.threshold != 125.0) ok = false;
  report(3, "iterative-threshold convergence", ok, "102 images, anchor {50,200} -> 125");
}

// ---- criterion 4: edge-width property on rectangles -------------------------

void criterion_edges() {
  bool ok = true;
  for (int n = 3; n <= 20 && ok; ++n) {
    int canvas = 2 * n + 9;  // rectangle stays the minority class
    GrayImage img(canvas, canvas, 0);
    int x0 = 4, y0 = 4;
    for (int y = y0; y < y0 + n; ++y)
      for (int x = x0; x < x0 + n; ++x) img.at(x, y) = 200;
    BinaryImage edges = extract_edges(img);
    for (int y = 0; y < canvas && ok; ++y)
      for (int x = 0; x < canvas; ++x) {
        bool on_ring = x >= x0 && x < x0 + n && y >= y0 && y < y0 + n &&
                       (x == x0 || x == x0 + n - 1 || y == y0 || y == y0 + n - 1);
        if (edges.at(x, y) != on_ring) {
          ok = false;
          break;
        }
      }
  }
  report(4, "one-pixel perimeter rings 3x3..20x20", ok);
}

// ---- criterion 5: containment filter fixtures -------------------------------

void criterion_containment() {
  auto box = [](int l, int x0, int y0, int x1, int y1) {
    EdgeBox b;
    b.label = l;
    b.x_min = x0;
    b.y_min = y0;
    b.x_max = x1;
    b.y_max = y1;
    b.pixel_count = 1;
    return b;
  };
  auto labels = [](const std::vector<EdgeBox>& v) {
    std::vector<int> out;
    for (const auto& b : v) out.push_back(b.label);
    std::sort(out.begin(), out.end());
    return out;
  };
  EdgeBox outer = box(1, 0, 0, 40, 40);
  std::vector<EdgeBox> inners = {box(2, 2, 2, 10, 10), box(3, 14, 2, 22, 10),
                                 box(4, 2, 14, 10, 22), box(5, 14, 14, 22, 22)};
  bool ok = true;
  for (int n = 1; n <= 4; ++n) {
    std::vector<EdgeBox> input = {outer};
    input.insert(input.end(), inners.begin(), inners.begin() + n);
    std::vector<int> expected;
    if (n <= 2)
      expected = {1};
    else
      for (int i = 0; i < n; ++i) expected.push_back(i + 2);
    if (labels(containment_filter(input)) != expected) ok = false;
  }
  report(5, "containment rule fixtures 1..4-inside-1", ok);
}

// ---- criterion 6: sliding-window scan vs maximal-run oracle -----------------

void criterion_sliding() {
  auto t0 = Clock::now();
  std::mt19937 rng(1006);
  bool ok = true;
  for (int trial = 0; trial < 10000 && ok; ++trial) {
    std::vector<double> sizes;
    int n = 1 + static_cast<int>(rng() % 8);
    for (int i = 0; i < n; ++i) sizes.push_back(1 + static_cast<int>(rng() % 20));
    double th = 1 + static_cast<int>(rng() % 10);

    auto res = uniformity_threshold(sizes, th);

    // oracle: greedy maximal runs on the sorted array
    std::vector<double> sorted = sizes;
    std::sort(sorted.begin(), sorted.end());
    std::vector<std::pair<int, int>> runs;
    std::size_t i = 0;
    while (i < sorted.size()) {
      std::size_t j = i;
      while (j + 1 < sorted.size() && sorted[j + 1] - sorted[i] <= th) ++j;
      if (j > i) runs.push_back({static_cast<int>(i), static_cast<int>(j)});
      i = j + 1;
    }
    double ts = 0.0;
    for (auto [a, b] : runs) ts = (ts == 0.0) ? sorted[a] : std::min(ts, sorted[a]);

    if (res.windows.size() != runs.size() || res.t_s != ts) ok = false;
    for (std::size_t w = 0; ok && w < runs.size(); ++w)
      if (res.windows[w].start_index != runs[w].first ||
          res.windows[w].end_index != runs[w].second)
        ok = false;
  }
  double dt = seconds_since(t0);
  report(6, "sliding-window oracle equivalence", ok && dt < 10.0,
         "10000 cases, " + std::to_string(dt).substr(0, 5) + " s");
}

// ---- criteria 7 + 8: end-to-end benchmark and determinism -------------------

std::string run_benchmark_csv(double& mean_sliding, double& subset_gap) {
  std::vector<ComparisonRow> rows;
  for (const auto& c : benchmark_corpus(42)) {
    SynthOutput s = generate(c.spec);
    auto r = compare_methods(c.name, s.image, s.truth);
    rows.insert(rows.end(), r.begin(), r.end());
  }
  double sliding_sum = 0, subset_sliding = 0, subset_otsu = 0;
  int sliding_n = 0, subset_n = 0;
  for (const auto& r : rows) {
    bool textured = r.image.rfind("checkerboard", 0) == 0 || r.image.rfind("noise", 0) == 0;
    if (r.method == "sliding") {
      sliding_sum += r.report.f_measure;
      ++sliding_n;
      if (textured) {
        subset_sliding += r.report.f_measure;
        ++subset_n;
      }
    } else if (r.method == "otsu" && textured) {
      subset_otsu += r.report.f_measure;
    }
  }
  mean_sliding = sliding_sum / sliding_n;
  subset_gap = (subset_sliding - subset_otsu) / subset_n;
  return comparison_csv(rows);
}

void criteria_benchmark() {
  auto t0 = Clock::now();
  double mean_sliding = 0, subset_gap = 0;
  std::string csv1 = run_benchmark_csv(mean_sliding, subset_gap);
  double dt = seconds_since(t0);

  char detail[160];
  std::snprintf(detail, sizeof(detail), "mean F=%.3f (>=0.90), texture gap=%.3f (>=0.10), %.1f s (<30)",
                mean_sliding, subset_gap, dt);
  report(7, "end-to-end synthetic benchmark", mean_sliding >= 0.90 && subset_gap >= 0.10 && dt < 30.0,
         detail);

  double m2, g2;
  std::string csv2 = run_benchmark_csv(m2, g2);
  report(8, "benchmark determinism", csv1 == csv2, "two runs, byte-identical CSV");
}

// ---- criterion 9: preprocess property suite ---------------------------------

void criterion_preprocess() {
  std::mt19937 rng(1009);
  bool ok = true;
  for (int trial = 0; trial < 500 && ok; ++trial) {
    int w = 4 + static_cast<int>(rng() % 20), h = 4 + static_cast<int>(rng() % 20);
    int lo = static_cast<int>(rng() % 200);
    int span = 1 + static_cast<int>(rng() % (256 - lo));
    GrayImage img(w, h);
    for (auto& v : img.data) v = static_cast<std::uint8_t>(lo + static_cast<int>(rng() % span) - 1 + 1);

    double H = entropy(histogram(img));
    if (H < 0.0 || H > 8.0) ok = false;

    GrayImage enh = enhance_contrast(img, 15.0);
    for (std::size_t i = 0; i < img.data.size() && ok; ++i)
      for (std::size_t j = 0; j < img.data.size(); ++j)
        if (img.data[i] <= img.data[j] && enh.data[i] > enh.data[j]) {
          ok = false;
          break;
        }

    auto [mn, mx] = std::minmax_element(img.data.begin(), img.data.end());
    GrayImage sm = smooth(img);
    for (auto v : sm.data)
      if (v < *mn || v > *mx) ok = false;

    GrayImage ext = extend_grayscale(img, 80.0);
    if (ext.data != img.data) {  // fired: span must be exact
      auto [emn, emx] = std::minmax_element(ext.data.begin(), ext.data.end());
      if (*emn != 0 || *emx != 255) ok = false;
    }
    if (!(extend_grayscale(ext, 80.0) == ext)) ok = false;
  }
  report(9, "preprocess property suite", ok, "500 images");
}

}  // namespace

int main() {
  criterion_labeling();
  criterion_otsu();
  criterion_iterative();
  criterion_edges();
  criterion_containment();
  criterion_sliding();
  criteria_benchmark();
  criterion_preprocess();
  if (g_failures) {
    std::printf("%d criterion(s) FAILED\n", g_failures);
    return 1;
  }
  std::printf("all criteria passed\n");
  return 0;
}
