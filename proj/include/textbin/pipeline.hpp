// Full binarization pipeline: preprocess -> edge extraction -> edge-box
// labeling and filtering -> size-uniformity threshold -> rendering of the
// retained boxes as white text on black background.
#pragma once

#include <optional>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "textbin/config.hpp"
#include "textbin/edge_boxes.hpp"
#include "textbin/edge_detect.hpp"
#include "textbin/preprocess.hpp"
#include "textbin/sliding_window.hpp"

namespace textbin {

struct StageReport {
  double entropy_bits = 0.0;
  bool contrast_enhanced = false;
  double threshold_star = 0.0;  // iterative threshold T*
  int threshold_iterations = 0;
  std::size_t edge_pixels = 0;
  std::size_t components = 0;
  std::size_t after_aspect_filter = 0;
  std::size_t after_containment_filter = 0;
  std::size_t size_windows = 0;
  double t_s = 0.0;
  std::size_t retained_boxes = 0;
  std::size_t removed_boxes = 0;
  std::size_t polarity_ties = 0;

  std::string to_text() const {
    std::ostringstream out;
    out << "entropy_bits = " << entropy_bits << '\n'
        << "contrast_enhanced = " << (contrast_enhanced ? "true" : "false") << '\n'
        << "threshold_star = " << threshold_star << '\n'
        << "threshold_iterations = " << threshold_iterations << '\n'
        << "edge_pixels = " << edge_pixels << '\n'
        << "components = " << components << '\n'
        << "after_aspect_filter = " << after_aspect_filter << '\n'
        << "after_containment_filter = " << after_containment_filter << '\n'
        << "size_windows = " << size_windows << '\n'
        << "t_s = " << t_s << '\n'
        << "retained_boxes = " << retained_boxes << '\n'
        << "removed_boxes = " << removed_boxes << '\n'
        << "polarity_ties = " << polarity_ties << '\n';
    return out.str();
  }
};

// Numbered snapshots of every intermediate stage, for --dump-stages.
struct StageImages {
  std::vector<std::pair<std::string, GrayImage>> gray;
  std::vector<std::pair<std::string, BinaryImage>> binary;
};

struct PipelineResult {
  BinaryImage output;
  StageReport report;
  std::vector<EdgeBox> labeled_boxes;  // all components, pre-filter
  std::vector<EdgeBox> retained;
  std::optional<StageImages> stages;
};

namespace detail {

// Text polarity of one box: the global-threshold class occupying the
// smaller share of the one-pixel frame surrounding the box (the box is
// tight around the strokes, so the surround is background and text is the
// minority class there). A 50/50 tie falls back to the below-threshold
// (darker) class.
inline bool box_polarity(const BinaryImage& global, const EdgeBox& b, bool& tie) {
  std::size_t on = 0, total = 0;
  auto sample = [&](int x, int y) {
    if (x < 0 || y < 0 || x >= global.width || y >= global.height) return;
    on += global.at(x, y);
    ++total;
  };
  for (int x = b.x_min - 1; x <= b.x_max + 1; ++x) {
    sample(x, b.y_min - 1);
    sample(x, b.y_max + 1);
  }
  for (int y = b.y_min; y <= b.y_max; ++y) {
    sample(b.x_min - 1, y);
    sample(b.x_max + 1, y);
  }
  if (total == 0) {  // box covers the whole image
    tie = true;
    return false;
  }
  std::size_t off = total - on;
  tie = (on == off);
  if (tie) return false;
  return on < off;
}

}  // namespace detail

// Paint each retained box: pixels whose global-threshold class matches the
// box's text polarity become foreground, everything else background.
inline BinaryImage render_binary(const BinaryImage& global_binary,
                                 const std::vector<EdgeBox>& retained,
                                 StageReport* report = nullptr) {
  BinaryImage out(global_binary.width, global_binary.height);
  for (const auto& b : retained) {
    bool tie = false;
    bool polarity = detail::box_polarity(global_binary, b, tie);
    if (tie && report) ++report->polarity_ties;
    for (int y = b.y_min; y <= b.y_max; ++y)
      for (int x = b.x_min; x <= b.x_max; ++x)
        if (global_binary.at(x, y) == polarity) out.set(x, y, true);
  }
  return out;
}

inline PipelineResult binarize_pipeline(const GrayImage& input, const PipelineConfig& cfg = {},
                                        bool keep_stages = false) {
  PipelineResult res;
  StageReport& rep = res.report;
  if (keep_stages) res.stages.emplace();

  auto dump_gray = [&](const std::string& name, const GrayImage& img) {
    if (res.stages) res.stages->gray.emplace_back(name, img);
  };
  auto dump_bin = [&](const std::string& name, const BinaryImage& img) {
    if (res.stages) res.stages->binary.emplace_back(name, img);
  };
  dump_gray("00_input", input);

  // preprocessing, staged so the report can record the entropy gate
  PreprocessParams pp = cfg.preprocess_params();
  rep.entropy_bits = entropy(histogram(input));
  GrayImage pre = input;
  if (rep.entropy_bits < pp.entropy_threshold) {
    rep.contrast_enhanced = true;
    pre = enhance_contrast(pre, pp.contrast_steepness);
    dump_gray("01_contrast", pre);
  }
  pre = smooth(pre, pp.smoothing_mask);
  dump_gray("02_smoothed", pre);
  pre = extend_grayscale(pre, pp.extension_gap);
  dump_gray("03_extended", pre);

  // global threshold and edge map
  IterativeThresholdResult thr = iterative_threshold(pre, cfg.threshold_params());
  rep.threshold_star = thr.threshold;
  rep.threshold_iterations = thr.iterations;
  BinaryImage global_binary = binarize_at(pre, thr.threshold);
  dump_bin("04_thresholded", global_binary);
  BinaryImage edges = boundary(orient_minority_foreground(global_binary));
  rep.edge_pixels = edges.count_true();
  dump_bin("05_edges", edges);

  // edge boxes and geometric filters
  LabeledEdgeMap labeled = label_components(edges);
  rep.components = labeled.boxes.size();
  res.labeled_boxes = labeled.boxes;
  std::vector<EdgeBox> boxes = filter_aspect_ratio(labeled.boxes, cfg.aspect_min, cfg.aspect_max);
  rep.after_aspect_filter = boxes.size();
  if (cfg.containment_filter) boxes = containment_filter(boxes);
  rep.after_containment_filter = boxes.size();

  // size-uniformity threshold over the surviving boxes
  std::vector<EdgeBox> retained;
  if (!boxes.empty()) {
    std::vector<double> sizes;
    sizes.reserve(boxes.size());
    for (const auto& b : boxes) sizes.push_back(box_size(b, cfg.size_metric));
    SlidingWindowResult sw = cfg.size_th_mode == SizeThMode::relative
                                 ? uniformity_threshold_relative(sizes, cfg.size_th_value)
                                 : uniformity_threshold(sizes, cfg.size_th_value);
    rep.size_windows = sw.windows.size();
    rep.t_s = sw.t_s;
    SizePartition part = apply_size_threshold(sizes, sw.t_s);
    for (std::size_t i : part.retained) retained.push_back(boxes[i]);
    rep.removed_boxes = part.removed.size();
  }
  rep.retained_boxes = retained.size();
  res.retained = retained;

  res.output = render_binary(global_binary, retained, &rep);
  dump_bin("06_output", res.output);
  return res;
}

inline PipelineResult binarize_pipeline(const ColorImage& input, const PipelineConfig& cfg = {},
                                        bool keep_stages = false) {
  return binarize_pipeline(to_grayscale(input), cfg, keep_stages);
}

}  // namespace textbin
