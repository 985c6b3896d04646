// textbin: sliding-window text binarization CLI.
//
// Subcommands: binarize, synth, eval, compare. Exit codes: 0 success,
// 1 I/O error, 2 config error, 3 image format error.

#include <CLI11.hpp>
#include <filesystem>
#include <fstream>
#include <iostream>

#include "textbin/textbin.hpp"

namespace fs = std::filesystem;
using namespace textbin;

namespace {

PipelineConfig load_config(const std::string& path) {
  if (path.empty()) return {};
  std::ifstream f(path);
  if (!f) throw IoError("cannot open config: " + path);
  return parse_config(f);
}

void write_text(const fs::path& path, const std::string& text) {
  std::ofstream f(path);
  if (!f) throw IoError("cannot open for writing: " + path.string());
  f << text;
}

void dump_stage_images(const fs::path& dir, const PipelineResult& res) {
  fs::create_directories(dir);
  for (const auto& [name, img] : res.stages->gray) write_gray(img, (dir / (name + ".pgm")).string());
  for (const auto& [name, img] : res.stages->binary)
    write_binary(img, (dir / (name + ".pbm")).string());
  write_text(dir / "report.txt", res.report.to_text());
}

std::string box_dump(const std::vector<EdgeBox>& boxes) {
  std::ostringstream out;
  for (const auto& b : boxes)
    out << b.label << ' ' << b.x_min << ' ' << b.y_min << ' ' << b.x_max << ' ' << b.y_max << ' '
        << b.pixel_count << '\n';
  return out.str();
}

int cmd_binarize(const std::string& input, const std::string& output, const std::string& config,
                 const std::string& dump_dir, const std::string& boxes_path,
                 const std::string& method) {
  PipelineConfig cfg = load_config(config);
  GrayImage img = read_gray(input);

  BinaryImage result;
  if (method == "otsu") {
    result = otsu_binarize(img);
  } else if (method == "niblack") {
    result = niblack_binarize(img, cfg.niblack_params());
  } else {
    PipelineResult res = binarize_pipeline(img, cfg, !dump_dir.empty());
    result = res.output;
    if (!dump_dir.empty()) dump_stage_images(dump_dir, res);
    if (!boxes_path.empty()) write_text(boxes_path, box_dump(res.labeled_boxes));
  }
  write_binary(result, output);
  return 0;
}

int cmd_synth(const std::string& spec_path, const std::string& out_dir, bool benchmark) {
  fs::create_directories(out_dir);
  if (benchmark) {
    for (const auto& c : benchmark_corpus()) {
      SynthOutput s = generate(c.spec);
      write_gray(s.image, (fs::path(out_dir) / (c.name + ".pgm")).string());
      write_binary(s.truth, (fs::path(out_dir) / (c.name + ".truth.pbm")).string());
    }
    return 0;
  }
  std::ifstream f(spec_path);
  if (!f) throw IoError("cannot open synth spec: " + spec_path);
  SynthSpec spec = parse_synth_spec(f);
  SynthOutput s = generate(spec);
  write_gray(s.image, (fs::path(out_dir) / "image.pgm").string());
  write_binary(s.truth, (fs::path(out_dir) / "truth.pbm").string());
  return 0;
}

int cmd_eval(const std::string& pred_path, const std::string& truth_path) {
  EvalReport r = evaluate(read_binary(pred_path), read_binary(truth_path));
  std::printf("true_positive = %llu\n", static_cast<unsigned long long>(r.true_positive));
  std::printf("false_positive = %llu\n", static_cast<unsigned long long>(r.false_positive));
  std::printf("false_negative = %llu\n", static_cast<unsigned long long>(r.false_negative));
  std::printf("precision = %.3f\n", r.precision);
  std::printf("recall = %.3f\n", r.recall);
  std::printf("f_measure = %.3f\n", r.f_measure);
  return 0;
}

int cmd_compare(const std::string& corpus_dir, const std::string& config) {
  PipelineConfig cfg = load_config(config);
  std::vector<std::string> names;
  for (const auto& entry : fs::directory_iterator(corpus_dir)) {
    fs::path p = entry.path();
    if (p.extension() != ".pgm") continue;
    fs::path truth = p;
    truth.replace_extension();
    truth += ".truth.pbm";
    if (fs::exists(truth)) names.push_back(p.stem().string());
  }
  if (names.empty()) throw ConfigError("no image/truth pairs in corpus dir: " + corpus_dir);
  std::sort(names.begin(), names.end());

  std::vector<ComparisonRow> rows;
  for (const auto& name : names) {
    GrayImage img = read_gray((fs::path(corpus_dir) / (name + ".pgm")).string());
    BinaryImage truth = read_binary((fs::path(corpus_dir) / (name + ".truth.pbm")).string());
    auto r = compare_methods(name, img, truth, cfg);
    rows.insert(rows.end(), r.begin(), r.end());
  }
  std::string table = comparison_table(rows);
  std::cout << table;
  write_text(fs::path(corpus_dir) / "comparison.txt", table);
  write_text(fs::path(corpus_dir) / "comparison.csv", comparison_csv(rows));
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Sliding-window text binarization for textured backgrounds"};
  app.require_subcommand(1);

  std::string input, output, config, dump_dir, boxes_path, method = "sliding";
  auto* binarize = app.add_subcommand("binarize", "Binarize an image");
  binarize->add_option("input", input, "Input PGM/PPM image")->required();
  binarize->add_option("output", output, "Output PBM image")->required();
  binarize->add_option("--config", config, "Pipeline config file (key = value)");
  binarize->add_option("--dump-stages", dump_dir, "Directory for per-stage images + report.txt");
  binarize->add_option("--dump-boxes", boxes_path, "Sidecar file for labeled edge boxes");
  binarize->add_option("--method", method, "sliding | otsu | niblack")
      ->check(CLI::IsMember({"sliding", "otsu", "niblack"}));

  std::string spec_path, out_dir;
  bool benchmark = false;
  auto* synth = app.add_subcommand("synth", "Generate synthetic images with ground truth");
  synth->add_option("spec", spec_path, "Synth spec file (key = value)");
  synth->add_option("outdir", out_dir, "Output directory");
  synth->add_flag("--benchmark", benchmark, "Write the 12-image benchmark corpus instead");

  std::string pred_path, truth_path;
  auto* eval = app.add_subcommand("eval", "Evaluate a binarization against ground truth");
  eval->add_option("pred", pred_path, "Predicted PBM")->required();
  eval->add_option("truth", truth_path, "Ground-truth PBM")->required();

  std::string corpus_dir, compare_config;
  auto* compare = app.add_subcommand("compare", "Run all methods over a corpus directory");
  compare->add_option("corpus", corpus_dir, "Directory of NAME.pgm + NAME.truth.pbm pairs")
      ->required();
  compare->add_option("--config", compare_config, "Pipeline config file");

  CLI11_PARSE(app, argc, argv);

  try {
    if (binarize->parsed()) return cmd_binarize(input, output, config, dump_dir, boxes_path, method);
    if (synth->parsed()) {
      if (benchmark && out_dir.empty()) std::swap(spec_path, out_dir);
      if (!benchmark && spec_path.empty()) throw ConfigError("synth needs a spec file or --benchmark");
      if (out_dir.empty()) throw ConfigError("synth needs an output directory");
      return cmd_synth(spec_path, out_dir, benchmark);
    }
    if (eval->parsed()) return cmd_eval(pred_path, truth_path);
    if (compare->parsed()) return cmd_compare(corpus_dir, compare_config);
  } catch (const ConfigError& e) {
    std::cerr << "config error: " << e.what() << '\n';
    return 2;
  } catch (const FormatError& e) {
    std::cerr << "format error: " << e.what() << '\n';
    return 3;
  } catch (const IoError& e) {
    std::cerr << "io error: " << e.what() << '\n';
    return 1;
  } catch (const std::filesystem::filesystem_error& e) {
    std::cerr << "io error: " << e.what() << '\n';
    return 1;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 1;
  }
  return 0;
}
