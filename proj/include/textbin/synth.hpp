// Deterministic synthetic textual images with pixel-exact ground truth.
// Glyphs come from the embedded 5x7 font, scaled by integer factors; the
// noise texture uses the LCG x <- 1664525*x + 1013904223 (mod 2^32) so the
// raster is identical across platforms for a given seed.
#pragma once

#include <algorithm>
#include <cstdint>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "textbin/errors.hpp"
#include "textbin/font5x7.hpp"
#include "textbin/image.hpp"

namespace textbin {

enum class TextureKind { constant, checkerboard, stripes, noise };

struct TextureSpec {
  TextureKind kind = TextureKind::constant;
  int value = 160;       // constant level; also the base level for noise
  int period = 4;        // checkerboard / stripes element size (pixels)
  int angle = 0;         // stripes only: 0, 45, or 90 degrees
  int low = 100;         // darker texture level (checkerboard / stripes)
  int high = 170;        // lighter texture level
  int amplitude = 60;    // noise only: values in [value-amplitude, value+amplitude]
};

enum class TextPolarity { dark_on_light, light_on_dark };

struct TextItem {
  std::string text;
  int x = 0, y = 0;               // top-left of the first glyph
  int glyph_height = 21;          // must be a multiple of 7
  TextPolarity polarity = TextPolarity::dark_on_light;
};

struct SynthSpec {
  int width = 256, height = 256;
  TextureSpec texture;
  std::vector<TextItem> text;
  std::uint32_t seed = 42;
};

struct SynthOutput {
  GrayImage image;
  BinaryImage truth;  // exactly the glyph stroke pixels
};

namespace detail {

class Lcg {
 public:
  explicit Lcg(std::uint32_t seed) : state_(seed) {}
  std::uint32_t next() {
    state_ = state_ * 1664525u + 1013904223u;
    return state_;
  }
  // uniform in [0, n)
  std::uint32_t next_below(std::uint32_t n) { return (next() >> 8) % n; }

 private:
  std::uint32_t state_;
};

inline std::uint8_t texture_value(const TextureSpec& t, int x, int y, Lcg& rng) {
  switch (t.kind) {
    case TextureKind::constant:
      return static_cast<std::uint8_t>(t.value);
    case TextureKind::checkerboard: {
      bool dark = ((x / t.period) + (y / t.period)) % 2 == 0;
      return static_cast<std::uint8_t>(dark ? t.low : t.high);
    }
    case TextureKind::stripes: {
      int coord = t.angle == 0 ? y : (t.angle == 90 ? x : x + y);
      bool dark = (coord / t.period) % 2 == 0;
      return static_cast<std::uint8_t>(dark ? t.low : t.high);
    }
    case TextureKind::noise: {
      int span = 2 * t.amplitude + 1;
      int v = t.value - t.amplitude + static_cast<int>(rng.next_below(static_cast<std::uint32_t>(span)));
      return static_cast<std::uint8_t>(std::clamp(v, 0, 255));
    }
  }
  return 0;
}

}  // namespace detail

// Glyph advance: width 5*scale plus a 1*scale gap.
inline int text_pixel_width(const std::string& s, int scale) {
  if (s.empty()) return 0;
  return static_cast<int>(s.size()) * 6 * scale - scale;
}

inline SynthOutput generate(const SynthSpec& spec) {
  if (spec.width <= 0 || spec.height <= 0)
    throw std::invalid_argument("generate: non-positive canvas");
  if (spec.texture.kind == TextureKind::stripes && spec.texture.angle != 0 &&
      spec.texture.angle != 45 && spec.texture.angle != 90)
    throw std::invalid_argument("generate: stripes angle must be 0, 45 or 90");

  SynthOutput out{GrayImage(spec.width, spec.height), BinaryImage(spec.width, spec.height)};
  detail::Lcg rng(spec.seed);
  // row-major fill keeps the noise raster deterministic
  for (int y = 0; y < spec.height; ++y)
    for (int x = 0; x < spec.width; ++x)
      out.image.at(x, y) = detail::texture_value(spec.texture, x, y, rng);

  for (const auto& item : spec.text) {
    if (item.glyph_height <= 0 || item.glyph_height % kFontHeight != 0)
      throw std::invalid_argument("generate: glyph height must be a positive multiple of 7");
    int scale = item.glyph_height / kFontHeight;
    std::uint8_t ink = item.polarity == TextPolarity::dark_on_light ? 0 : 255;
    int pen_x = item.x;
    for (char ch : item.text) {
      const auto& rows = glyph_rows(ch);
      if (pen_x < 0 || item.y < 0 || pen_x + kFontWidth * scale > spec.width ||
          item.y + item.glyph_height > spec.height)
        throw std::invalid_argument("generate: glyph outside canvas");
      for (int gy = 0; gy < kFontHeight; ++gy) {
        for (int gx = 0; gx < kFontWidth; ++gx) {
          if (!((rows[gy] >> (kFontWidth - 1 - gx)) & 1)) continue;
          for (int sy = 0; sy < scale; ++sy) {
            for (int sx = 0; sx < scale; ++sx) {
              int px = pen_x + gx * scale + sx;
              int py = item.y + gy * scale + sy;
              out.image.at(px, py) = ink;
              out.truth.set(px, py, true);
            }
          }
        }
      }
      pen_x += 6 * scale;
    }
  }
  return out;
}

// --- SynthSpec config grammar (same flat key = value style) -----------------
//
//   width = 256
//   height = 256
//   seed = 42
//   texture = constant | checkerboard | stripes | noise
//   texture_value / texture_period / texture_angle / texture_low /
//   texture_high / texture_amplitude = <int>
//   text = STRING X Y HEIGHT dark|light        (repeatable)

inline SynthSpec parse_synth_spec(std::istream& in) {
  SynthSpec spec;
  spec.text.clear();
  std::string line;
  int lineno = 0;
  auto fail = [&](const std::string& msg) {
    throw ConfigError("synth spec line " + std::to_string(lineno) + ": " + msg);
  };
  while (std::getline(in, line)) {
    ++lineno;
    std::size_t hash = line.find('#');
    if (hash != std::string::npos) line = line.substr(0, hash);
    auto trim = [](const std::string& s) {
      std::size_t a = s.find_first_not_of(" \t\r");
      if (a == std::string::npos) return std::string();
      std::size_t b = s.find_last_not_of(" \t\r");
      return s.substr(a, b - a + 1);
    };
    line = trim(line);
    if (line.empty()) continue;
    std::size_t eq = line.find('=');
    if (eq == std::string::npos) fail("expected key = value");
    std::string key = trim(line.substr(0, eq));
    std::string val = trim(line.substr(eq + 1));
    auto as_int = [&](const std::string& v) {
      try {
        std::size_t pos = 0;
        int i = std::stoi(v, &pos);
        if (pos != v.size()) throw std::invalid_argument(v);
        return i;
      } catch (const std::exception&) {
        fail("bad integer '" + v + "'");
        return 0;
      }
    };

    if (key == "width") spec.width = as_int(val);
    else if (key == "height") spec.height = as_int(val);
    else if (key == "seed") spec.seed = static_cast<std::uint32_t>(as_int(val));
    else if (key == "texture") {
      if (val == "constant") spec.texture.kind = TextureKind::constant;
      else if (val == "checkerboard") spec.texture.kind = TextureKind::checkerboard;
      else if (val == "stripes") spec.texture.kind = TextureKind::stripes;
      else if (val == "noise") spec.texture.kind = TextureKind::noise;
      else fail("unknown texture '" + val + "'");
    } else if (key == "texture_value") spec.texture.value = as_int(val);
    else if (key == "texture_period") spec.texture.period = as_int(val);
    else if (key == "texture_angle") spec.texture.angle = as_int(val);
    else if (key == "texture_low") spec.texture.low = as_int(val);
    else if (key == "texture_high") spec.texture.high = as_int(val);
    else if (key == "texture_amplitude") spec.texture.amplitude = as_int(val);
    else if (key == "text") {
      std::istringstream ts(val);
      TextItem item;
      std::string pol;
      if (!(ts >> item.text >> item.x >> item.y >> item.glyph_height >> pol))
        fail("text wants: STRING X Y HEIGHT dark|light");
      if (pol == "dark") item.polarity = TextPolarity::dark_on_light;
      else if (pol == "light") item.polarity = TextPolarity::light_on_dark;
      else fail("text polarity must be dark or light");
      spec.text.push_back(std::move(item));
    } else fail("unknown key '" + key + "'");
  }
  return spec;
}

inline SynthSpec parse_synth_spec_string(const std::string& text) {
  std::istringstream in(text);
  return parse_synth_spec(in);
}

}  // namespace textbin
