#include <catch2/catch_amalgamated.hpp>

#include <cmath>
#include <numbers>
#include <set>
#include <vector>

#include "fdo/rng.hpp"

using namespace fdo;

TEST_CASE("unit draws stay in [0,1)", "[rng]") {
  RngStream s(42, {});
  for (int i = 0; i < 100000; ++i) {
    const double u = s.unit();
    REQUIRE(u >= 0.0);
    REQUIRE(u < 1.0);
  }
}

TEST_CASE("uniform respects bounds and degenerate input", "[rng]") {
  RngStream s(7, {});
  for (int i = 0; i < 10000; ++i) {
    const double v = s.uniform(-3.0, 5.0);
    REQUIRE(v >= -3.0);
    REQUIRE(v < 5.0);
  }
  REQUIRE(s.uniform(2.5, 2.5) == 2.5);
  REQUIRE_THROWS_AS(s.uniform(1.0, 0.0), std::invalid_argument);
}

TEST_CASE("signed_unit covers both signs within [-1,1]", "[rng]") {
  RngStream s(11, {});
  bool neg = false, pos = false;
  for (int i = 0; i < 10000; ++i) {
    const double r = s.signed_unit();
    REQUIRE(r >= -1.0);
    REQUIRE(r <= 1.0);
    neg = neg || r < 0.0;
    pos = pos || r > 0.0;
  }
  REQUIRE(neg);
  REQUIRE(pos);
}

TEST_CASE("gaussian handles degenerate and invalid sd", "[rng]") {
  RngStream s(3, {});
  REQUIRE(s.gaussian(4.0, 0.0) == 4.0);
  REQUIRE_THROWS_AS(s.gaussian(0.0, -1.0), std::invalid_argument);
}

TEST_CASE("gaussian sample moments are close to nominal", "[rng]") {
  RngStream s(123, {});
  const int n = 200000;
  double sum = 0.0, sumsq = 0.0;
  for (int i = 0; i < n; ++i) {
    const double g = s.gaussian(0.0, 1.0);
    sum += g;
    sumsq += g * g;
  }
  const double mean = sum / n;
  const double var = sumsq / n - mean * mean;
  REQUIRE(std::abs(mean) < 0.01);
  REQUIRE(std::abs(var - 1.0) < 0.02);
}

TEST_CASE("identical stream keys reproduce identical sequences", "[rng]") {
  StreamFactory f(99, 4);
  RngStream a = f.make(2, Purpose::walk);
  RngStream b = f.make(2, Purpose::walk);
  for (int i = 0; i < 100; ++i) REQUIRE(a.next_u64() == b.next_u64());
}

TEST_CASE("stream keys separate run, agent, and purpose channels", "[rng]") {
  const std::uint64_t master = 5;
  std::set<std::uint64_t> seeds;
  for (std::uint64_t run : {std::uint64_t{0}, std::uint64_t{1}, std::uint64_t{2}})
    for (std::uint64_t agent :
         {std::uint64_t{0}, std::uint64_t{1}, StreamFactory::swarm_agent})
      for (Purpose p : {Purpose::init, Purpose::walk, Purpose::weight, Purpose::levy,
                        Purpose::reinsert, Purpose::shuffle})
        seeds.insert(derive_seed(master, {run, agent, p}));
  REQUIRE(seeds.size() == 3u * 3u * 6u);
}

TEST_CASE("mantegna scale matches the direct formula", "[rng]") {
  auto oracle = [](double lambda) {
    const double num =
        std::tgamma(1.0 + lambda) * std::sin(std::numbers::pi * lambda / 2.0);
    const double den = std::tgamma((1.0 + lambda) / 2.0) * lambda *
                       std::pow(2.0, (lambda - 1.0) / 2.0);
    return std::pow(num / den, 1.0 / lambda);
  };
  for (double lambda : {0.5, 1.0, 1.3, 1.5, 1.9, 1.99})
    REQUIRE(mantegna_sigma(lambda) == Catch::Approx(oracle(lambda)).epsilon(1e-14));
  REQUIRE(mantegna_sigma(2.0) == 1.0);  // the direct formula degenerates to 0 here
  REQUIRE_THROWS_AS(mantegna_sigma(0.0), std::invalid_argument);
  REQUIRE_THROWS_AS(mantegna_sigma(2.1), std::invalid_argument);
  REQUIRE_THROWS_AS(mantegna_sigma(-1.0), std::invalid_argument);
}

TEST_CASE("levy_quotient hand values", "[rng]") {
  REQUIRE(levy_quotient(2.0, 4.0, 2.0) == 1.0);
  REQUIRE(levy_quotient(3.0, -8.0, 3.0) == Catch::Approx(1.5).epsilon(1e-15));
  REQUIRE(levy_quotient(0.0, 5.0, 1.5) == 0.0);
}

TEST_CASE("levy draws are finite and deterministic per seed", "[rng]") {
  StreamFactory f(21, 0);
  RngStream a = f.make(0, Purpose::levy);
  RngStream b = f.make(0, Purpose::levy);
  for (int i = 0; i < 20000; ++i) {
    const double x = a.levy(1.5);
    REQUIRE(std::isfinite(x));
    REQUIRE(x == b.levy(1.5));
  }
}

TEST_CASE("index_below stays in range and hits every index", "[rng]") {
  RngStream s(8, {});
  std::vector<int> hits(7, 0);
  for (int i = 0; i < 7000; ++i) {
    const std::size_t k = s.index_below(7);
    REQUIRE(k < 7);
    ++hits[k];
  }
  for (int h : hits) REQUIRE(h > 0);
}
