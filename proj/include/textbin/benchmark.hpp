// Synthetic benchmark corpus and the three-way method comparison
// (sliding-window pipeline vs Otsu vs Niblack) with CSV/table reporting.
#pragma once

#include <algorithm>
#include <cstdio>
#include <string>
#include <vector>

#include "textbin/baselines.hpp"
#include "textbin/metrics.hpp"
#include "textbin/pipeline.hpp"
#include "textbin/synth.hpp"

namespace textbin {

struct BenchmarkCase {
  std::string name;
  SynthSpec spec;
};

// 12 images: 4 textures x {uniform dark, uniform light, mixed two-size}.
// 256x256 canvas, glyph heights 21-35, texture elements <= 8 px.
inline std::vector<BenchmarkCase> benchmark_corpus(std::uint32_t seed = 42) {
  struct Tex {
    const char* name;
    TextureSpec spec;
  };
  const Tex textures[] = {
      {"checkerboard", {TextureKind::checkerboard, 160, 1, 0, 100, 170, 60}},
      {"constant", {TextureKind::constant, 160, 4, 0, 100, 170, 60}},
      {"noise", {TextureKind::noise, 130, 4, 0, 100, 170, 60}},
      {"stripes", {TextureKind::stripes, 160, 2, 90, 152, 168, 60}},
  };

  auto words = [](TextPolarity pol, bool mixed) {
    std::vector<TextItem> t;
    if (mixed) {
      t.push_back({"BIG", 30, 40, 35, pol});
      t.push_back({"TEXT", 50, 150, 21, pol});
    } else {
      t.push_back({"TEXT", 40, 60, 28, pol});
      t.push_back({"DEMO", 60, 150, 28, pol});
    }
    return t;
  };

  std::vector<BenchmarkCase> corpus;
  for (const auto& tex : textures) {
    SynthSpec base;
    base.width = base.height = 256;
    base.texture = tex.spec;
    base.seed = seed;

    BenchmarkCase dark{std::string(tex.name) + "_dark", base};
    dark.spec.text = words(TextPolarity::dark_on_light, false);
    BenchmarkCase light{std::string(tex.name) + "_light", base};
    light.spec.text = words(TextPolarity::light_on_dark, false);
    BenchmarkCase mixed{std::string(tex.name) + "_mixed", base};
    mixed.spec.text = words(TextPolarity::dark_on_light, true);

    corpus.push_back(std::move(dark));
    corpus.push_back(std::move(light));
    corpus.push_back(std::move(mixed));
  }
  return corpus;
}

struct ComparisonRow {
  std::string image;
  std::string method;
  EvalReport report;
};

inline std::vector<ComparisonRow> compare_methods(const std::string& name, const GrayImage& img,
                                                  const BinaryImage& truth,
                                                  const PipelineConfig& cfg = {}) {
  std::vector<ComparisonRow> rows;
  rows.push_back({name, "niblack", evaluate(niblack_binarize(img, cfg.niblack_params()), truth)});
  rows.push_back({name, "otsu", evaluate(otsu_binarize(img), truth)});
  rows.push_back({name, "sliding", evaluate(binarize_pipeline(img, cfg).output, truth)});
  return rows;
}

inline void sort_rows(std::vector<ComparisonRow>& rows) {
  std::sort(rows.begin(), rows.end(), [](const ComparisonRow& a, const ComparisonRow& b) {
    return a.image != b.image ? a.image < b.image : a.method < b.method;
  });
}

inline std::string comparison_csv(std::vector<ComparisonRow> rows) {
  sort_rows(rows);
  std::string out = "image,method,precision,recall,f_measure\n";
  char buf[64];
  for (const auto& r : rows) {
    std::snprintf(buf, sizeof(buf), "%.6f,%.6f,%.6f", r.report.precision, r.report.recall,
                  r.report.f_measure);
    out += r.image + "," + r.method + "," + buf + "\n";
  }
  return out;
}

inline std::string comparison_table(std::vector<ComparisonRow> rows) {
  sort_rows(rows);
  std::size_t name_w = 5;
  for (const auto& r : rows) name_w = std::max(name_w, r.image.size());
  char buf[160];
  std::snprintf(buf, sizeof(buf), "%-*s  %-8s %9s %9s %9s\n", static_cast<int>(name_w), "image",
                "method", "precision", "recall", "f");
  std::string out = buf;
  for (const auto& r : rows) {
    std::snprintf(buf, sizeof(buf), "%-*s  %-8s %9.4f %9.4f %9.4f\n", static_cast<int>(name_w),
                  r.image.c_str(), r.method.c_str(), r.report.precision, r.report.recall,
                  r.report.f_measure);
    out += buf;
  }
  return out;
}

}  // namespace textbin
