#include <catch2/catch_amalgamated.hpp>

#include <random>

#include "textbin/preprocess.hpp"

using namespace textbin;

namespace {

GrayImage random_gray(int w, int h, std::uint32_t seed, int lo = 0, int hi = 255) {
  std::mt19937 rng(seed);
  std::uniform_int_distribution<int> d(lo, hi);
  GrayImage img(w, h);
  for (auto& v : img.data) v = static_cast<std::uint8_t>(d(rng));
  return img;
}

}  // namespace

TEST_CASE("entropy anchors") {
  GrayImage constant(4, 4, 77);
  CHECK(entropy(histogram(constant)) == 0.0);

  GrayImage two(2, 1);
  two.data = {10, 200};
  CHECK_THAT(entropy(histogram(two)), Catch::Matchers::WithinAbs(1.0, 1e-12));

  GrayImage uniform(256, 1);
  for (int i = 0; i < 256; ++i) uniform.data[i] = static_cast<std::uint8_t>(i);
  CHECK_THAT(entropy(histogram(uniform)), Catch::Matchers::WithinAbs(8.0, 1e-12));
}

TEST_CASE("entropy stays in [0,8], zero only for single-level images") {
  for (std::uint32_t s = 0; s < 50; ++s) {
    GrayImage img = random_gray(16, 16, s);
    double H = entropy(histogram(img));
    CHECK(H >= 0.0);
    CHECK(H <= 8.0);
    Histogram h = histogram(img);
    int nonzero = 0;
    for (auto b : h.bins) nonzero += b > 0;
    CHECK((H == 0.0) == (nonzero == 1));
  }
}

TEST_CASE("enhance_contrast sigmoid anchors") {
  SECTION("pixel at the mean maps to 128") {
    GrayImage constant(3, 3, 91);
    GrayImage out = enhance_contrast(constant, 15.0);
    for (auto v : out.data) CHECK(v == 128);
  }
  SECTION("pixel ten steepness units above the mean saturates") {
    // mean 100, pixel 150 = mean + 10 * v with v = 5
    GrayImage img(2, 1);
    img.data = {50, 150};
    GrayImage out = enhance_contrast(img, 5.0);
    CHECK(out.data[1] == 255);
  }
  SECTION("avg 100, T 115, v 15 gives 186") {
    GrayImage img(4, 1);
    img.data = {85, 115, 100, 100};  // mean exactly 100
    GrayImage out = enhance_contrast(img, 15.0);
    CHECK(out.data[1] == 186);  // round(255 / (1 + e^-1))
  }
}

TEST_CASE("enhance_contrast preserves pixel ordering") {
  for (std::uint32_t s = 0; s < 20; ++s) {
    GrayImage img = random_gray(12, 12, 100 + s);
    GrayImage out = enhance_contrast(img, 15.0);
    for (std::size_t i = 0; i < img.data.size(); ++i)
      for (std::size_t j = 0; j < img.data.size(); ++j)
        if (img.data[i] <= img.data[j]) CHECK(out.data[i] <= out.data[j]);
  }
}

TEST_CASE("smooth fixed points and anchors") {
  GrayImage constant(5, 5, 77);
  CHECK(smooth(constant) == constant);

  GrayImage spot(5, 5, 0);
  spot.at(2, 2) = 255;
  CHECK(smooth(spot).at(2, 2) == 51);  // round(2 * 255 / 10)

  GrayImage one(1, 1, 133);
  CHECK(smooth(one) == one);
}

TEST_CASE("smooth never exceeds the input range") {
  for (std::uint32_t s = 0; s < 20; ++s) {
    GrayImage img = random_gray(9, 7, 200 + s);
    auto [mn, mx] = std::minmax_element(img.data.begin(), img.data.end());
    GrayImage out = smooth(img);
    for (auto v : out.data) {
      CHECK(v >= *mn);
      CHECK(v <= *mx);
    }
  }
}

TEST_CASE("extend_grayscale anchors") {
  GrayImage img(2, 1);
  img.data = {100, 150};
  GrayImage out = extend_grayscale(img, 80.0);
  CHECK(out.data[0] == 0);
  CHECK(out.data[1] == 255);

  img.data = {0, 200};
  CHECK(extend_grayscale(img, 80.0) == img);  // span 200 >= 80

  GrayImage three(3, 1);
  three.data = {100, 120, 150};
  out = extend_grayscale(three, 80.0);
  CHECK(out.data[0] == 0);
  CHECK(out.data[1] == 102);  // round(20 * 255 / 50)
  CHECK(out.data[2] == 255);

  GrayImage constant(2, 2, 99);
  CHECK(extend_grayscale(constant, 80.0) == constant);
}

TEST_CASE("extend_grayscale is span-exact and idempotent") {
  for (std::uint32_t s = 0; s < 30; ++s) {
    GrayImage img = random_gray(8, 8, 300 + s, 60, 130);  // span < 80 guaranteed
    GrayImage out = extend_grayscale(img, 80.0);
    auto [mn, mx] = std::minmax_element(out.data.begin(), out.data.end());
    if (img.data != out.data) {  // fired
      CHECK(*mn == 0);
      CHECK(*mx == 255);
    }
    CHECK(extend_grayscale(out, 80.0) == out);
  }
}

TEST_CASE("preprocess gate semantics") {
  SECTION("high-entropy image skips contrast enhancement") {
    GrayImage img = random_gray(32, 32, 17);  // near-uniform levels, H ~ 7+
    PreprocessParams p;
    REQUIRE(entropy(histogram(img)) >= p.entropy_threshold);
    CHECK(preprocess(img, p) == extend_grayscale(smooth(img, p.smoothing_mask), p.extension_gap));
  }
  SECTION("constant image stays constant") {
    GrayImage constant(6, 6, 42);
    GrayImage out = preprocess(constant);
    for (auto v : out.data) CHECK(v == out.data[0]);
  }
  SECTION("low-entropy two-level image reaches full span") {
    GrayImage img(16, 16);
    for (int y = 0; y < 16; ++y)
      for (int x = 0; x < 16; ++x) img.at(x, y) = (x % 2) ? 110 : 90;
    GrayImage out = preprocess(img);
    auto [mn, mx] = std::minmax_element(out.data.begin(), out.data.end());
    CHECK(*mn == 0);
    CHECK(*mx == 255);
  }
}
