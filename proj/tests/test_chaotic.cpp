#include <catch2/catch_amalgamated.hpp>

#include <cmath>

#include "fdo/chaotic.hpp"
#include "fdo/rng.hpp"

using namespace fdo;

TEST_CASE("map kind names round-trip", "[chaotic]") {
  for (MapKind k : {MapKind::logistic, MapKind::tent, MapKind::singer, MapKind::sine,
                    MapKind::chebyshev})
    REQUIRE(parse_map_kind(to_string(k)) == k);
  REQUIRE_THROWS_AS(parse_map_kind("lorenz"), std::invalid_argument);
}

TEST_CASE("tent iterate from 0.3 is 0.6", "[chaotic]") {
  // 2 * double(0.3) is an exact scaling, so the comparison is bit-exact.
  ChaoticMap m(MapKind::tent, 0.3);
  REQUIRE(m.next() == 0.6);
}

TEST_CASE("dyadic tent seeds collapse onto zero and are rejected", "[chaotic]") {
  // 0.25 -> 0.5 -> 1 -> 0 pins the orbit, which the construction probe catches.
  REQUIRE_THROWS_AS(ChaoticMap(MapKind::tent, 0.25), std::invalid_argument);
}

TEST_CASE("sine iterate from 0.5 with m=0.3 is 0.075", "[chaotic]") {
  ChaoticMap m(MapKind::sine, 0.5, 0.3);
  REQUIRE(m.next() == Catch::Approx(0.075).epsilon(1e-15));
}

TEST_CASE("logistic iterate from 0.3 is 0.84", "[chaotic]") {
  ChaoticMap m(MapKind::logistic, 0.3);
  REQUIRE(m.next() == Catch::Approx(0.84).epsilon(1e-15));
}

TEST_CASE("singer iterate matches the direct polynomial", "[chaotic]") {
  const double x = 0.7;
  ChaoticMap m(MapKind::singer, x);
  const double expected =
      1.07 * (7.86 * x - 23.31 * x * x + 28.75 * x * x * x - 13.302875 * x * x * x * x);
  REQUIRE(m.next() == Catch::Approx(expected).epsilon(1e-15));
}

TEST_CASE("chebyshev output is normalized into [0,1]", "[chaotic]") {
  ChaoticMap m(MapKind::chebyshev, 0.7);
  for (int i = 0; i < 1000; ++i) {
    const double v = m.next();
    REQUIRE(v >= 0.0);
    REQUIRE(v <= 1.0);
  }
  REQUIRE(m.state() >= -1.0);
  REQUIRE(m.state() <= 1.0);
}

TEST_CASE("degenerate seeds are rejected", "[chaotic]") {
  REQUIRE_THROWS_AS(ChaoticMap(MapKind::logistic, 0.0), std::invalid_argument);
  REQUIRE_THROWS_AS(ChaoticMap(MapKind::logistic, 0.75), std::invalid_argument);
  REQUIRE_THROWS_AS(ChaoticMap(MapKind::logistic, 0.5), std::invalid_argument);
  REQUIRE_THROWS_AS(ChaoticMap(MapKind::tent, 0.0), std::invalid_argument);
  REQUIRE_THROWS_AS(ChaoticMap(MapKind::singer, 0.0), std::invalid_argument);
  REQUIRE_THROWS_AS(ChaoticMap(MapKind::singer, 1.0), std::invalid_argument);
  REQUIRE_THROWS_AS(ChaoticMap(MapKind::chebyshev, 1.0), std::invalid_argument);
}

TEST_CASE("states outside the domain are rejected", "[chaotic]") {
  REQUIRE_THROWS_AS(ChaoticMap(MapKind::logistic, -0.1), std::invalid_argument);
  REQUIRE_THROWS_AS(ChaoticMap(MapKind::logistic, 1.1), std::invalid_argument);
  REQUIRE_THROWS_AS(ChaoticMap(MapKind::chebyshev, -1.5), std::invalid_argument);
  REQUIRE_THROWS_AS(ChaoticMap(MapKind::tent, std::nan("")), std::invalid_argument);
}

TEST_CASE("orbits are deterministic", "[chaotic]") {
  ChaoticMap a(MapKind::singer, 0.7);
  ChaoticMap b(MapKind::singer, 0.7);
  for (int i = 0; i < 10000; ++i) REQUIRE(a.next() == b.next());
}

TEST_CASE("long orbits never leave the unit interval", "[chaotic]") {
  RngStream seeds(2024, {});
  for (MapKind kind : {MapKind::logistic, MapKind::tent, MapKind::singer, MapKind::sine,
                       MapKind::chebyshev}) {
    int accepted = 0;
    while (accepted < 100) {
      const double lo = kind == MapKind::chebyshev ? -1.0 : 0.0;
      const double s0 = seeds.uniform(lo, 1.0);
      try {
        ChaoticMap m(kind, s0);
        ++accepted;
        for (int i = 0; i < 1000000; ++i) {
          const double v = m.next();
          if (v < 0.0 || v > 1.0) {
            CAPTURE(to_string(kind), s0, i, v);
            FAIL("iterate escaped [0,1]");
          }
        }
      } catch (const std::invalid_argument&) {
        // degenerate seed, draw another
      }
    }
  }
  SUCCEED();
}
