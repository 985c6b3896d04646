// Binary NetPBM I/O: P5 (gray), P6 (color), P4 (bitmap), maxval 255 only.
// Writers emit a canonical header so write-then-read round-trips bit-exactly.
//
// PBM convention: bit 1 = black. BinaryImage true = foreground/white, so
// foreground is written as bit 0.
#pragma once

#include <cstdio>
#include <fstream>
#include <sstream>
#include <string>
#include <variant>

#include "textbin/errors.hpp"
#include "textbin/image.hpp"

namespace textbin {

namespace detail {

inline int pnm_next_char(std::istream& in) {
  int c = in.get();
  while (c == '#') {  // comment runs to end of line
    while (c != '\n' && c != EOF) c = in.get();
    c = in.get();
  }
  return c;
}

inline long pnm_read_int(std::istream& in, const std::string& what) {
  int c = pnm_next_char(in);
  while (c == ' ' || c == '\t' || c == '\r' || c == '\n') c = pnm_next_char(in);
  if (c < '0' || c > '9') throw FormatError("malformed header: expected " + what);
  long v = 0;
  while (c >= '0' && c <= '9') {
    v = v * 10 + (c - '0');
    if (v > 1000000000L) throw FormatError("malformed header: " + what + " out of range");
    c = in.get();
  }
  // c is the single whitespace terminating the token (or EOF)
  if (c != ' ' && c != '\t' && c != '\r' && c != '\n' && c != EOF)
    throw FormatError("malformed header: junk after " + what);
  return v;
}

inline void pnm_read_payload(std::istream& in, std::vector<std::uint8_t>& buf) {
  in.read(reinterpret_cast<char*>(buf.data()), static_cast<std::streamsize>(buf.size()));
  if (static_cast<std::size_t>(in.gcount()) != buf.size())
    throw FormatError("truncated payload");
}

inline std::ifstream open_read(const std::string& path) {
  std::ifstream f(path, std::ios::binary);
  if (!f) throw IoError("cannot open for reading: " + path);
  return f;
}

inline std::ofstream open_write(const std::string& path) {
  std::ofstream f(path, std::ios::binary);
  if (!f) throw IoError("cannot open for writing: " + path);
  return f;
}

}  // namespace detail

inline std::size_t pbm_row_bytes(int width) { return (static_cast<std::size_t>(width) + 7) / 8; }

using AnyImage = std::variant<GrayImage, ColorImage, BinaryImage>;

inline AnyImage read_image(std::istream& in) {
  char m0 = static_cast<char>(in.get());
  char m1 = static_cast<char>(in.get());
  if (in.eof() || m0 != 'P' || (m1 != '4' && m1 != '5' && m1 != '6'))
    throw FormatError("malformed header: not a binary NetPBM file (P4/P5/P6)");

  long w = detail::pnm_read_int(in, "width");
  long h = detail::pnm_read_int(in, "height");
  if (w <= 0 || h <= 0) throw FormatError("malformed header: non-positive dimensions");

  if (m1 == '4') {
    BinaryImage img(static_cast<int>(w), static_cast<int>(h));
    std::vector<std::uint8_t> row(pbm_row_bytes(img.width));
    for (int y = 0; y < img.height; ++y) {
      detail::pnm_read_payload(in, row);
      for (int x = 0; x < img.width; ++x) {
        bool black = (row[x / 8] >> (7 - x % 8)) & 1;
        img.set(x, y, !black);  // bit 0 = white = foreground
      }
    }
    return img;
  }

  long maxval = detail::pnm_read_int(in, "maxval");
  if (maxval != 255) throw FormatError("unsupported maxval " + std::to_string(maxval));

  if (m1 == '5') {
    GrayImage img(static_cast<int>(w), static_cast<int>(h));
    detail::pnm_read_payload(in, img.data);
    return img;
  }
  ColorImage img(static_cast<int>(w), static_cast<int>(h));
  detail::pnm_read_payload(in, img.data);
  return img;
}

inline AnyImage read_image(const std::string& path) {
  auto f = detail::open_read(path);
  return read_image(f);
}

inline GrayImage read_gray(const std::string& path) {
  AnyImage img = read_image(path);
  if (auto* g = std::get_if<GrayImage>(&img)) return *g;
  if (auto* c = std::get_if<ColorImage>(&img)) return to_grayscale(*c);
  throw FormatError("expected a grayscale or color image: " + path);
}

inline BinaryImage read_binary(const std::string& path) {
  AnyImage img = read_image(path);
  if (auto* b = std::get_if<BinaryImage>(&img)) return *b;
  throw FormatError("expected a PBM (P4) image: " + path);
}

inline void write_gray(const GrayImage& img, std::ostream& out) {
  out << "P5\n" << img.width << ' ' << img.height << "\n255\n";
  out.write(reinterpret_cast<const char*>(img.data.data()),
            static_cast<std::streamsize>(img.data.size()));
}

inline void write_color(const ColorImage& img, std::ostream& out) {
  out << "P6\n" << img.width << ' ' << img.height << "\n255\n";
  out.write(reinterpret_cast<const char*>(img.data.data()),
            static_cast<std::streamsize>(img.data.size()));
}

inline void write_binary(const BinaryImage& img, std::ostream& out) {
  out << "P4\n" << img.width << ' ' << img.height << '\n';
  std::vector<std::uint8_t> row(pbm_row_bytes(img.width));
  for (int y = 0; y < img.height; ++y) {
    std::fill(row.begin(), row.end(), 0);
    for (int x = 0; x < img.width; ++x)
      if (!img.at(x, y)) row[x / 8] |= static_cast<std::uint8_t>(1u << (7 - x % 8));
    out.write(reinterpret_cast<const char*>(row.data()), static_cast<std::streamsize>(row.size()));
  }
}

inline void write_gray(const GrayImage& img, const std::string& path) {
  auto f = detail::open_write(path);
  write_gray(img, f);
  if (!f) throw IoError("write failed: " + path);
}

inline void write_color(const ColorImage& img, const std::string& path) {
  auto f = detail::open_write(path);
  write_color(img, f);
  if (!f) throw IoError("write failed: " + path);
}

inline void write_binary(const BinaryImage& img, const std::string& path) {
  auto f = detail::open_write(path);
  write_binary(img, f);
  if (!f) throw IoError("write failed: " + path);
}

}  // namespace textbin
