#include <catch2/catch_amalgamated.hpp>

#include <cmath>
#include <limits>

#include "fdo/objective.hpp"

using namespace fdo;

namespace {

ObjectiveSpec box(double lo, double hi, std::size_t d = 1) {
  return make_objective("box", d, lo, hi, [](const Vec& x) { return x[0]; });
}

}  // namespace

TEST_CASE("make_objective validates its inputs", "[objective]") {
  auto f = [](const Vec& x) { return x[0]; };
  REQUIRE_THROWS_AS(make_objective("bad", Vec{}, Vec{}, f), std::invalid_argument);
  REQUIRE_THROWS_AS(make_objective("bad", Vec{0.0}, Vec{0.0, 1.0}, f),
                    std::invalid_argument);
  REQUIRE_THROWS_AS(make_objective("bad", Vec{1.0}, Vec{0.0}, f), std::invalid_argument);
  REQUIRE_THROWS_AS(make_objective("bad", Vec{1.0}, Vec{1.0}, f), std::invalid_argument);
  REQUIRE_THROWS_AS(make_objective("bad", 2, 0.0, 1.0, nullptr), std::invalid_argument);
  const ObjectiveSpec ok = make_objective("ok", 3, -2.0, 2.0, f);
  REQUIRE(ok.dimension == 3);
  REQUIRE(ok.lower == Vec{-2.0, -2.0, -2.0});
}

TEST_CASE("better is strict and direction aware", "[objective]") {
  REQUIRE(better(1.0, 2.0, Direction::minimize));
  REQUIRE_FALSE(better(2.0, 1.0, Direction::minimize));
  REQUIRE_FALSE(better(1.0, 1.0, Direction::minimize));
  REQUIRE(better(2.0, 1.0, Direction::maximize));
  REQUIRE_FALSE(better(1.0, 1.0, Direction::maximize));
}

TEST_CASE("evaluate counts calls and checks dimension", "[objective]") {
  const ObjectiveSpec spec = make_objective("sum", 2, 0.0, 1.0, [](const Vec& x) {
    return x[0] + x[1];
  });
  EvalCounter counter;
  REQUIRE(evaluate(spec, {0.25, 0.5}, counter) == 0.75);
  REQUIRE(evaluate(spec, {0.5, 0.5}, counter) == 1.0);
  REQUIRE(counter.evaluations == 2);
  REQUIRE_THROWS_AS(evaluate(spec, {0.1}, counter), std::invalid_argument);
}

TEST_CASE("clamp pins overshoots to the nearest bound", "[objective][bounds]") {
  const ObjectiveSpec spec = box(0.0, 10.0);
  REQUIRE(apply_bounds({12.0}, spec, BoundsPolicy::clamp) == Vec{10.0});
  REQUIRE(apply_bounds({-0.5}, spec, BoundsPolicy::clamp) == Vec{0.0});
  REQUIRE(apply_bounds({std::numeric_limits<double>::infinity()}, spec,
                       BoundsPolicy::clamp) == Vec{10.0});
}

TEST_CASE("reflect mirrors into the box", "[objective][bounds]") {
  const ObjectiveSpec spec = box(0.0, 10.0);
  REQUIRE(apply_bounds({11.0}, spec, BoundsPolicy::reflect) == Vec{9.0});
  REQUIRE(apply_bounds({-3.0}, spec, BoundsPolicy::reflect) == Vec{3.0});
  REQUIRE(apply_bounds({25.0}, spec, BoundsPolicy::reflect) == Vec{5.0});
  REQUIRE(apply_bounds({37.0}, spec, BoundsPolicy::reflect) == Vec{3.0});
  REQUIRE(apply_bounds({-14.0}, spec, BoundsPolicy::reflect) == Vec{6.0});
}

TEST_CASE("in-range coordinates pass through bit-identically", "[objective][bounds]") {
  const ObjectiveSpec spec = box(-1.0, 1.0, 3);
  const Vec x = {-1.0, 0.3333333333333333, 1.0};
  for (BoundsPolicy p : {BoundsPolicy::clamp, BoundsPolicy::reflect}) {
    const Vec out = apply_bounds(x, spec, p);
    for (std::size_t k = 0; k < 3; ++k) REQUIRE(out[k] == x[k]);
  }
}

TEST_CASE("reinsertion policies draw from their configured source", "[objective][bounds]") {
  const ObjectiveSpec spec = box(2.0, 6.0);

  ChaoticMap map(MapKind::logistic, 0.3);
  ChaoticMap twin(MapKind::logistic, 0.3);
  BoundsSource chaotic_src;
  chaotic_src.map = &map;
  const Vec out = apply_bounds({7.5}, spec, BoundsPolicy::chaotic_reinsert, chaotic_src);
  REQUIRE(out[0] == 2.0 + 4.0 * twin.next());

  RngStream stream(5, {});
  RngStream stream_twin(5, {});
  BoundsSource random_src;
  random_src.stream = &stream;
  const Vec out2 =
      apply_bounds({-9.0}, spec, BoundsPolicy::random_reinsert, random_src);
  REQUIRE(out2[0] == stream_twin.uniform(2.0, 6.0));
  REQUIRE(out2[0] >= 2.0);
  REQUIRE(out2[0] < 6.0);
}

TEST_CASE("reinsertion without a source is an error", "[objective][bounds]") {
  const ObjectiveSpec spec = box(0.0, 1.0);
  REQUIRE_THROWS_AS(apply_bounds({2.0}, spec, BoundsPolicy::chaotic_reinsert),
                    std::invalid_argument);
  REQUIRE_THROWS_AS(apply_bounds({2.0}, spec, BoundsPolicy::random_reinsert),
                    std::invalid_argument);
}

TEST_CASE("bounds handling is idempotent and consumes no randomness when in range",
          "[objective][bounds]") {
  const ObjectiveSpec spec = box(-5.0, 5.0, 4);
  RngStream stream(77, {});
  ChaoticMap map(MapKind::singer, 0.7);
  BoundsSource src;
  src.stream = &stream;
  src.map = &map;
  for (BoundsPolicy p : {BoundsPolicy::clamp, BoundsPolicy::reflect,
                         BoundsPolicy::chaotic_reinsert, BoundsPolicy::random_reinsert}) {
    const Vec once = apply_bounds({8.25, -123.4, 0.5, 4.999}, spec, p, src);
    for (double c : once) {
      REQUIRE(c >= -5.0);
      REQUIRE(c <= 5.0);
    }
    const Vec twice = apply_bounds(once, spec, p, src);
    REQUIRE(twice == once);
  }
}

TEST_CASE("apply_bounds rejects dimension mismatches", "[objective][bounds]") {
  const ObjectiveSpec spec = box(0.0, 1.0, 2);
  REQUIRE_THROWS_AS(apply_bounds({0.5}, spec, BoundsPolicy::clamp),
                    std::invalid_argument);
}
