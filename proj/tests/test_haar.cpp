#include <doctest.h>

#include <cmath>
#include <vector>

#include "support/oracles.hpp"
#include "wavecgh/errors.hpp"
#include "wavecgh/haar.hpp"

using namespace wavecgh;
using wavecgh::testing::random_image;

namespace {

double max_abs_diff(const RealImage& a, const RealImage& b) {
  REQUIRE(a.same_size(b));
  double worst = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i) {
    worst = std::max(worst, std::abs(a.data()[i] - b.data()[i]));
  }
  return worst;
}

}  // namespace

TEST_CASE("constant image has no detail") {
  RealImage image(16, 16);
  std::fill(image.data().begin(), image.data().end(), 1.0);
  const HaarPyramid pyramid = haar_analyze(image, 3);
  for (double v : pyramid.approx.data()) CHECK(v == doctest::Approx(1.0).epsilon(1e-15));
  for (const auto& bands : pyramid.details) {
    for (double v : bands.h.data()) CHECK(v == 0.0);
    for (double v : bands.v.data()) CHECK(v == 0.0);
    for (double v : bands.d.data()) CHECK(v == 0.0);
  }
}

TEST_CASE("single-level coefficients of a unit impulse") {
  const RealImage image(2, 2, {1.0, 0.0, 0.0, 0.0});
  const HaarPyramid pyramid = haar_analyze(image, 1);
  CHECK(pyramid.approx.at(0, 0) == 0.25);
  CHECK(pyramid.details[0].h.at(0, 0) == 0.25);
  CHECK(pyramid.details[0].v.at(0, 0) == 0.25);
  CHECK(pyramid.details[0].d.at(0, 0) == 0.25);

  SUBCASE("round trip restores the impulse") {
    const RealImage back = haar_synthesize(pyramid);
    CHECK(back.at(0, 0) == doctest::Approx(1.0).epsilon(1e-15));
    CHECK(back.at(1, 0) == doctest::Approx(0.0).scale(1.0).epsilon(1e-15));
    CHECK(back.at(0, 1) == doctest::Approx(0.0).scale(1.0).epsilon(1e-15));
    CHECK(back.at(1, 1) == doctest::Approx(0.0).scale(1.0).epsilon(1e-15));
  }
}

TEST_CASE("analyze/synthesize round trip on random images") {
  int seed = 100;
  for (int n : {8, 16, 32, 64}) {
    for (int rep = 0; rep < 12; ++rep) {
      const RealImage image = random_image(n, n, seed++);
      const HaarPyramid pyramid = haar_analyze(image, 3);
      CHECK(max_abs_diff(haar_synthesize(pyramid), image) <= 1e-12);
    }
  }
}

TEST_CASE("zero pyramid synthesizes to zero") {
  RealImage zero(8, 8);
  const HaarPyramid pyramid = haar_analyze(zero, 2);
  const RealImage out = haar_synthesize(pyramid);
  for (double v : out.data()) CHECK(v == 0.0);
}

TEST_CASE("constant approximation passes straight through") {
  RealImage image(32, 32);
  std::fill(image.data().begin(), image.data().end(), 0.375);
  HaarPyramid pyramid = haar_analyze(image, 3);
  const RealImage out = haar_synthesize(pyramid);
  for (double v : out.data()) CHECK(v == doctest::Approx(0.375).epsilon(1e-14));
}

TEST_CASE("expand_residual sign pattern") {
  SUBCASE("zero details give a zero residual") {
    RealImage z(4, 4);
    const RealImage residual = expand_residual(z, z, z);
    for (double v : residual.data()) CHECK(v == 0.0);
  }

  SUBCASE("1x1 details evaluate the four sign combinations") {
    const RealImage h(1, 1, {0.25});
    const RealImage v(1, 1, {0.25});
    const RealImage d(1, 1, {0.25});
    const RealImage residual = expand_residual(h, v, d);
    CHECK(residual.at(0, 0) == 0.75);
    CHECK(residual.at(1, 0) == -0.25);
    CHECK(residual.at(0, 1) == -0.25);
    CHECK(residual.at(1, 1) == -0.25);
  }

  SUBCASE("size mismatch is rejected") {
    RealImage a(2, 2), b(4, 4);
    CHECK_THROWS_AS(expand_residual(a, a, b), ValidationError);
  }
}

TEST_CASE("residual identity: replicated approximation plus residual is the finer level") {
  const RealImage image = random_image(8, 8, 42);
  const HaarPyramid pyramid = haar_analyze(image, 1);
  const RealImage up = upsample_replicate(pyramid.approx, 2);
  const RealImage residual =
      expand_residual(pyramid.details[0].h, pyramid.details[0].v, pyramid.details[0].d);
  RealImage sum(8, 8);
  for (std::size_t i = 0; i < sum.size(); ++i) {
    sum.data()[i] = up.data()[i] + residual.data()[i];
  }
  CHECK(max_abs_diff(sum, image) <= 1e-12);
}

TEST_CASE("residual identity holds at every pyramid level") {
  const RealImage image = random_image(32, 32, 4242);
  const HaarPyramid full = haar_analyze(image, 3);
  // Approximations at decreasing depth, the original being depth zero.
  const std::vector<RealImage> approx = {
      image, haar_analyze(image, 1).approx, haar_analyze(image, 2).approx, full.approx};
  for (int level = 3; level >= 1; --level) {
    const auto& bands = full.details[level - 1];
    const RealImage up = upsample_replicate(approx[level], 2);
    const RealImage residual = expand_residual(bands.h, bands.v, bands.d);
    RealImage sum(up.width(), up.height());
    for (std::size_t i = 0; i < sum.size(); ++i) {
      sum.data()[i] = up.data()[i] + residual.data()[i];
    }
    CHECK(max_abs_diff(sum, approx[level - 1]) <= 1e-12);
  }
}

TEST_CASE("analysis is linear") {
  const RealImage x = random_image(16, 16, 1);
  const RealImage y = random_image(16, 16, 2);
  const double alpha = 1.25, beta = -0.5;
  RealImage combo(16, 16);
  for (std::size_t i = 0; i < combo.size(); ++i) {
    combo.data()[i] = alpha * x.data()[i] + beta * y.data()[i];
  }
  const HaarPyramid px = haar_analyze(x, 2);
  const HaarPyramid py = haar_analyze(y, 2);
  const HaarPyramid pc = haar_analyze(combo, 2);

  auto check_band = [&](const RealImage& bc, const RealImage& bx, const RealImage& by) {
    for (std::size_t i = 0; i < bc.size(); ++i) {
      CHECK(bc.data()[i] ==
            doctest::Approx(alpha * bx.data()[i] + beta * by.data()[i]).epsilon(1e-12));
    }
  };
  check_band(pc.approx, px.approx, py.approx);
  for (int level = 0; level < 2; ++level) {
    check_band(pc.details[level].h, px.details[level].h, py.details[level].h);
    check_band(pc.details[level].v, px.details[level].v, py.details[level].v);
    check_band(pc.details[level].d, px.details[level].d, py.details[level].d);
  }
}

TEST_CASE("upsample_replicate") {
  SUBCASE("single pixel") {
    const RealImage one(1, 1, {2.0});
    const RealImage up = upsample_replicate(one, 2);
    CHECK(up.width() == 2);
    for (double v : up.data()) CHECK(v == 2.0);
  }

  SUBCASE("checkerboard blocks") {
    const RealImage checker(2, 2, {1.0, 0.0, 0.0, 1.0});
    const RealImage up = upsample_replicate(checker, 2);
    CHECK(up.at(0, 0) == 1.0);
    CHECK(up.at(1, 1) == 1.0);
    CHECK(up.at(2, 0) == 0.0);
    CHECK(up.at(3, 1) == 0.0);
    CHECK(up.at(2, 2) == 1.0);
    CHECK(up.at(3, 3) == 1.0);
  }

  SUBCASE("factor below two is rejected") {
    const RealImage one(1, 1, {2.0});
    CHECK_THROWS_AS(upsample_replicate(one, 1), ValidationError);
    CHECK_THROWS_AS(upsample_replicate(one, 3), ValidationError);
  }
}

TEST_CASE("analysis dimension checks") {
  CHECK_THROWS_AS(haar_analyze(RealImage(6, 6), 2), ValidationError);
  CHECK_THROWS_AS(haar_analyze(RealImage(8, 4), 1), ValidationError);
  CHECK_THROWS_AS(haar_analyze(RealImage(8, 8), 0), ValidationError);
  CHECK_NOTHROW(haar_analyze(RealImage(6, 6), 1));
}
