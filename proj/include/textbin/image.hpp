// Core image value types: 8-bit grayscale, RGB color, boolean raster,
// and the 256-bin gray histogram used by the thresholding stages.
#pragma once

#include <array>
#include <cmath>
#include <cstdint>
#include <stdexcept>
#include <vector>

namespace textbin {

inline int clamp255(double v) {
  if (v < 0.0) return 0;
  if (v > 255.0) return 255;
  return static_cast<int>(v);
}

// Round half-up to the nearest integer, then clamp to [0,255].
inline std::uint8_t round_u8(double v) {
  return static_cast<std::uint8_t>(clamp255(std::floor(v + 0.5)));
}

struct GrayImage {
  int width = 0;
  int height = 0;
  std::vector<std::uint8_t> data;  // row-major, width*height

  GrayImage() = default;
  GrayImage(int w, int h, std::uint8_t fill = 0)
      : width(w), height(h), data(static_cast<std::size_t>(w) * h, fill) {
    if (w <= 0 || h <= 0) throw std::invalid_argument("GrayImage: non-positive size");
  }

  std::uint8_t at(int x, int y) const { return data[static_cast<std::size_t>(y) * width + x]; }
  std::uint8_t& at(int x, int y) { return data[static_cast<std::size_t>(y) * width + x]; }
  std::size_t pixel_count() const { return data.size(); }

  bool operator==(const GrayImage&) const = default;
};

struct ColorImage {
  int width = 0;
  int height = 0;
  std::vector<std::uint8_t> data;  // row-major RGB triples, 3*width*height

  ColorImage() = default;
  ColorImage(int w, int h)
      : width(w), height(h), data(static_cast<std::size_t>(3) * w * h, 0) {
    if (w <= 0 || h <= 0) throw std::invalid_argument("ColorImage: non-positive size");
  }

  const std::uint8_t* rgb(int x, int y) const {
    return &data[(static_cast<std::size_t>(y) * width + x) * 3];
  }
  std::uint8_t* rgb(int x, int y) {
    return &data[(static_cast<std::size_t>(y) * width + x) * 3];
  }

  bool operator==(const ColorImage&) const = default;
};

// true = foreground (rendered white), false = background (black).
struct BinaryImage {
  int width = 0;
  int height = 0;
  std::vector<std::uint8_t> data;  // 0 or 1, row-major

  BinaryImage() = default;
  BinaryImage(int w, int h, bool fill = false)
      : width(w), height(h), data(static_cast<std::size_t>(w) * h, fill ? 1 : 0) {
    if (w <= 0 || h <= 0) throw std::invalid_argument("BinaryImage: non-positive size");
  }

  bool at(int x, int y) const { return data[static_cast<std::size_t>(y) * width + x] != 0; }
  void set(int x, int y, bool v) { data[static_cast<std::size_t>(y) * width + x] = v ? 1 : 0; }
  std::size_t pixel_count() const { return data.size(); }

  std::size_t count_true() const {
    std::size_t n = 0;
    for (auto v : data) n += v;
    return n;
  }

  BinaryImage complemented() const {
    BinaryImage out(width, height);
    for (std::size_t i = 0; i < data.size(); ++i) out.data[i] = data[i] ? 0 : 1;
    return out;
  }

  bool operator==(const BinaryImage&) const = default;
};

struct Histogram {
  std::array<std::uint64_t, 256> bins{};
  std::uint64_t total = 0;
};

inline Histogram histogram(const GrayImage& img) {
  if (img.data.empty()) throw std::invalid_argument("histogram: empty image");
  Histogram h;
  for (auto v : img.data) ++h.bins[v];
  h.total = img.data.size();
  return h;
}

// ITU-R BT.601 luma, round half-up.
inline GrayImage to_grayscale(const ColorImage& img) {
  GrayImage out(img.width, img.height);
  for (std::size_t i = 0, n = out.data.size(); i < n; ++i) {
    const std::uint8_t* p = &img.data[i * 3];
    out.data[i] = round_u8(0.299 * p[0] + 0.587 * p[1] + 0.114 * p[2]);
  }
  return out;
}

}  // namespace textbin
