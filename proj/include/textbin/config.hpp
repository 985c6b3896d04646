// Pipeline configuration and the flat `key = value` config grammar.
// Unknown keys are an error so typos never silently fall back to defaults.
#pragma once

#include <map>
#include <sstream>
#include <string>

#include "textbin/baselines.hpp"
#include "textbin/errors.hpp"
#include "textbin/preprocess.hpp"
#include "textbin/sliding_window.hpp"

namespace textbin {

enum class SizeThMode { relative, absolute };

struct PipelineConfig {
  // preprocessing (published gate value: 38; see preprocess.hpp)
  double entropy_threshold = 4.75;
  double contrast_steepness = 15.0;
  double extension_gap = 80.0;

  // iterative thresholding
  double convergence_tolerance = 0.5;
  int max_iterations = 256;

  // edge-box filters
  double aspect_min = 0.1;
  double aspect_max = 10.0;
  bool containment_filter = true;

  // sliding-window size check
  SizeMetric size_metric = SizeMetric::height;
  SizeThMode size_th_mode = SizeThMode::relative;
  double size_th_value = 0.2;  // ratio in relative mode, gray in absolute mode

  // Niblack baseline
  int niblack_window = 15;
  double niblack_k = -0.2;

  PreprocessParams preprocess_params() const {
    PreprocessParams p;
    p.entropy_threshold = entropy_threshold;
    p.contrast_steepness = contrast_steepness;
    p.extension_gap = extension_gap;
    return p;
  }
  IterativeThresholdParams threshold_params() const {
    return {convergence_tolerance, max_iterations};
  }
  NiblackParams niblack_params() const { return {niblack_window, niblack_k}; }
};

namespace detail {

inline std::string trim(const std::string& s) {
  std::size_t a = s.find_first_not_of(" \t\r");
  if (a == std::string::npos) return "";
  std::size_t b = s.find_last_not_of(" \t\r");
  return s.substr(a, b - a + 1);
}

inline double parse_double(const std::string& key, const std::string& v) {
  try {
    std::size_t pos = 0;
    double d = std::stod(v, &pos);
    if (pos != v.size()) throw std::invalid_argument(v);
    return d;
  } catch (const std::exception&) {
    throw ConfigError("bad numeric value for '" + key + "': " + v);
  }
}

inline int parse_int(const std::string& key, const std::string& v) {
  try {
    std::size_t pos = 0;
    int i = std::stoi(v, &pos);
    if (pos != v.size()) throw std::invalid_argument(v);
    return i;
  } catch (const std::exception&) {
    throw ConfigError("bad integer value for '" + key + "': " + v);
  }
}

inline bool parse_bool(const std::string& key, const std::string& v) {
  if (v == "true" || v == "1") return true;
  if (v == "false" || v == "0") return false;
  throw ConfigError("bad boolean value for '" + key + "': " + v);
}

}  // namespace detail

inline const char* to_string(SizeMetric m) {
  switch (m) {
    case SizeMetric::width: return "width";
    case SizeMetric::area: return "area";
    default: return "height";
  }
}

inline const char* to_string(SizeThMode m) {
  return m == SizeThMode::absolute ? "absolute" : "relative";
}

inline PipelineConfig parse_config(std::istream& in) {
  PipelineConfig cfg;
  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    std::size_t hash = line.find('#');
    if (hash != std::string::npos) line = line.substr(0, hash);
    line = detail::trim(line);
    if (line.empty()) continue;
    std::size_t eq = line.find('=');
    if (eq == std::string::npos)
      throw ConfigError("line " + std::to_string(lineno) + ": expected key = value");
    std::string key = detail::trim(line.substr(0, eq));
    std::string val = detail::trim(line.substr(eq + 1));

    if (key == "entropy_threshold") cfg.entropy_threshold = detail::parse_double(key, val);
    else if (key == "contrast_steepness") cfg.contrast_steepness = detail::parse_double(key, val);
    else if (key == "extension_gap") cfg.extension_gap = detail::parse_double(key, val);
    else if (key == "convergence_tolerance") cfg.convergence_tolerance = detail::parse_double(key, val);
    else if (key == "max_iterations") cfg.max_iterations = detail::parse_int(key, val);
    else if (key == "aspect_min") cfg.aspect_min = detail::parse_double(key, val);
    else if (key == "aspect_max") cfg.aspect_max = detail::parse_double(key, val);
    else if (key == "containment_filter") cfg.containment_filter = detail::parse_bool(key, val);
    else if (key == "size_metric") {
      if (val == "height") cfg.size_metric = SizeMetric::height;
      else if (val == "width") cfg.size_metric = SizeMetric::width;
      else if (val == "area") cfg.size_metric = SizeMetric::area;
      else throw ConfigError("bad size_metric: " + val);
    } else if (key == "size_th_mode") {
      if (val == "relative") cfg.size_th_mode = SizeThMode::relative;
      else if (val == "absolute") cfg.size_th_mode = SizeThMode::absolute;
      else throw ConfigError("bad size_th_mode: " + val);
    } else if (key == "size_th_value") cfg.size_th_value = detail::parse_double(key, val);
    else if (key == "niblack_window") cfg.niblack_window = detail::parse_int(key, val);
    else if (key == "niblack_k") cfg.niblack_k = detail::parse_double(key, val);
    else throw ConfigError("line " + std::to_string(lineno) + ": unknown key '" + key + "'");
  }
  return cfg;
}

inline PipelineConfig parse_config_string(const std::string& text) {
  std::istringstream in(text);
  return parse_config(in);
}

inline std::string dump_config(const PipelineConfig& cfg) {
  std::ostringstream out;
  out.precision(17);
  out << "entropy_threshold = " << cfg.entropy_threshold << '\n'
      << "contrast_steepness = " << cfg.contrast_steepness << '\n'
      << "extension_gap = " << cfg.extension_gap << '\n'
      << "convergence_tolerance = " << cfg.convergence_tolerance << '\n'
      << "max_iterations = " << cfg.max_iterations << '\n'
      << "aspect_min = " << cfg.aspect_min << '\n'
      << "aspect_max = " << cfg.aspect_max << '\n'
      << "containment_filter = " << (cfg.containment_filter ? "true" : "false") << '\n'
      << "size_metric = " << to_string(cfg.size_metric) << '\n'
      << "size_th_mode = " << to_string(cfg.size_th_mode) << '\n'
      << "size_th_value = " << cfg.size_th_value << '\n'
      << "niblack_window = " << cfg.niblack_window << '\n'
      << "niblack_k = " << cfg.niblack_k << '\n';
  return out.str();
}

}  // namespace textbin
