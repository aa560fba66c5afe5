#include "guderley/jump.hpp"

#include <cmath>

#include "doctest.h"
#include "guderley/errors.hpp"
#include "test_util.hpp"

using namespace guderley;
using testutil::close_rel;
using testutil::uniform;

namespace {
Params gas(double gamma) { return make_params(gamma, 2, 1.5); }
} // namespace

TEST_CASE("jump of a hand-evaluated point, gamma = 3") {
  PhasePoint post = jump(gas(3.0), {0.0, -0.5});
  CHECK(post.V == doctest::Approx(-0.375).epsilon(1e-14));
  CHECK(post.C == doctest::Approx(-std::sqrt(0.859375)).epsilon(1e-14));
}

TEST_CASE("jump of the origin is the reflected strong-shock state") {
  for (double gamma : {1.2, 1.4, 1.5, 5.0 / 3.0, 2.0, 2.5, 3.0}) {
    PhasePoint post = jump(gas(gamma), {0.0, 0.0});
    PhasePoint P1 = p1_state(gamma);
    CHECK(post.V == doctest::Approx(P1.V).epsilon(1e-14));
    CHECK(post.C == doctest::Approx(-P1.C).epsilon(1e-14));
  }
}

TEST_CASE("sonic-line points are exactly the fixed points") {
  for (int i = 0; i < 100; ++i) {
    const double gamma = uniform(1.05, 3.0);
    const double h = uniform(0.05, 2.0);
    PhasePoint pre{h - 1.0, -h};
    PhasePoint post = jump(gas(gamma), pre);
    CHECK(close_rel(post.V, pre.V, 1e-14, 1e-14));
    CHECK(close_rel(post.C, pre.C, 1e-14, 1e-14));

    // strictly inside S_U the map moves down-left
    PhasePoint inside{h - 1.0, -0.5 * h};
    PhasePoint img = jump(gas(gamma), inside);
    CHECK(img.V < inside.V);
    CHECK(img.C < inside.C);
  }
}

TEST_CASE("500 random round trips at 1e-12") {
  for (int i = 0; i < 500; ++i) {
    const double gamma = uniform(1.05, 3.0);
    Params p = gas(gamma);
    const double h = uniform(0.05, 2.0);
    const double t = uniform(0.0, 0.999);
    PhasePoint pre{h - 1.0, -t * h};
    PhasePoint post = jump(p, pre);
    CHECK(classify_region(p, post) == RegionTag::S_L);
    PhasePoint back = jump_inverse(p, post);
    CHECK(close_rel(back.V, pre.V, 1e-12, 1e-12));
    CHECK(close_rel(back.C, pre.C, 1e-12, 1e-12));
  }
}

TEST_CASE("kappa-ray image law") {
  for (int i = 0; i < 200; ++i) {
    const double gamma = uniform(1.05, 3.0);
    const double kappa = uniform(0.0, 0.999);
    const double h = uniform(0.05, 2.0);
    PhasePoint pre{h - 1.0, -kappa * h};
    PhasePoint post = jump(gas(gamma), pre);
    const double I = line_image_kappa(gamma, kappa);
    CHECK(close_rel(-post.C, I * (1.0 + post.V), 1e-12, 1e-13));
  }
  CHECK(line_image_kappa(3.0, 0.0) == doctest::Approx(std::sqrt(3.0)).epsilon(1e-14));
  CHECK(line_image_kappa(1.4, 0.0) ==
        doctest::Approx(std::sqrt(2.8 / 0.4)).epsilon(1e-14));
  CHECK_THROWS_AS((void)line_image_kappa(1.4, 1.0), domain_error);
  CHECK_THROWS_AS((void)line_image_kappa(1.4, -0.1), domain_error);
}

TEST_CASE("region classification and rejection") {
  Params p = gas(1.4);
  CHECK(classify_region(p, {0.0, -0.3}) == RegionTag::S_U);
  CHECK(classify_region(p, {0.0, 0.3}) == RegionTag::other);
  CHECK(classify_region(p, {-0.5, -0.9}) == RegionTag::S_L);
  CHECK(classify_region(p, {-0.8, -0.9}) == RegionTag::other); // below band
  CHECK_THROWS_AS((void)jump(p, {0.0, 0.2}), domain_error);
  CHECK_THROWS_AS((void)jump(p, {-0.8, -0.9}), domain_error);
  CHECK_THROWS_AS((void)jump_inverse(p, {0.0, -0.2}), domain_error);
}

TEST_CASE("entropy check is strict supersonicity") {
  Params p = gas(1.4);
  CHECK(entropy_check(p, {0.0, -0.5}));
  CHECK_FALSE(entropy_check(p, {0.0, -1.0}));
  CHECK(entropy_check(p, {0.0, 0.0}));
}
