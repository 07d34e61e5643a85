#pragma once

#include <cmath>
#include <cstdint>
#include <numbers>
#include <random>
#include <stdexcept>
#include <string_view>

namespace fdo {

// Purpose tag of a derived stream; part of the stream key so that the
// different random "channels" of one agent never share state.
enum class Purpose : std::uint64_t {
  init = 1,
  walk = 2,      // the r draw of the movement step
  weight = 3,    // per-iteration weight-factor draws
  levy = 4,
  reinsert = 5,  // boundary re-entry draws
  shuffle = 6,   // permutation initialization
};

namespace detail {

// splitmix64 finalizer; also the seed-derivation mixer.
inline constexpr std::uint64_t mix64(std::uint64_t z) {
  z += 0x9e3779b97f4a7c15ULL;
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

inline constexpr std::uint64_t fnv1a(std::string_view s) {
  std::uint64_t h = 0xcbf29ce484222325ULL;
  for (char c : s) {
    h ^= static_cast<unsigned char>(c);
    h *= 0x100000001b3ULL;
  }
  return h;
}

}  // namespace detail

// Key of one random stream: (run, agent, purpose), hashed together with the
// master seed into the generator's seed. Identical keys reproduce identical
// sequences on any platform (mt19937_64 and the mixing are fully specified).
struct StreamKey {
  std::uint64_t run = 0;
  std::uint64_t agent = 0;
  Purpose purpose = Purpose::init;
};

inline constexpr std::uint64_t derive_seed(std::uint64_t master, const StreamKey& key) {
  std::uint64_t h = detail::mix64(master);
  h = detail::mix64(h ^ detail::mix64(key.run));
  h = detail::mix64(h ^ detail::mix64(key.agent));
  h = detail::mix64(h ^ detail::mix64(static_cast<std::uint64_t>(key.purpose)));
  return h;
}

inline double mantegna_sigma(double lambda) {
  if (!(lambda > 0.0) || lambda > 2.0)
    throw std::invalid_argument("levy: lambda must be in (0, 2]");
  if (lambda == 2.0) return 1.0;  // stable index 2 is the Gaussian case
  const double num = std::tgamma(1.0 + lambda) * std::sin(std::numbers::pi * lambda / 2.0);
  const double den = std::tgamma((1.0 + lambda) / 2.0) * lambda * std::pow(2.0, (lambda - 1.0) / 2.0);
  return std::pow(num / den, 1.0 / lambda);
}

// The heavy-tailed quotient of the Levy flight: mu / |v|^(1/lambda).
inline double levy_quotient(double mu, double v, double lambda) {
  return mu / std::pow(std::abs(v), 1.0 / lambda);
}

// Deterministic seeded stream. The engine is std::mt19937_64 (bit-exact per
// the standard); all value transforms are done here rather than through
// std::*_distribution, which are implementation-defined.
class RngStream {
 public:
  RngStream() : RngStream(0, {}) {}
  RngStream(std::uint64_t master_seed, StreamKey key)
      : gen_(derive_seed(master_seed, key)) {}

  std::uint64_t next_u64() { return gen_(); }

  // Uniform in [0, 1) with 53 random bits.
  double unit() { return static_cast<double>(gen_() >> 11) * 0x1.0p-53; }

  double uniform(double lo, double hi) {
    if (lo > hi) throw std::invalid_argument("uniform: lo > hi");
    if (lo == hi) return lo;
    double r = lo + (hi - lo) * unit();
    if (r >= hi) r = std::nextafter(hi, lo);  // guard the half-open contract
    return r;
  }

  // Uniform over [-1, 1], the random walk r of the movement step.
  double signed_unit() { return 2.0 * unit() - 1.0; }

  double gaussian(double mean, double sd) {
    if (sd < 0.0) throw std::invalid_argument("gaussian: sd < 0");
    if (sd == 0.0) return mean;
    return mean + sd * standard_normal();
  }

  // One Levy flight step, Mantegna-scaled numerator over |v|^(1/lambda).
  double levy(double lambda) {
    const double sigma = mantegna_sigma(lambda);
    const double mu = gaussian(0.0, sigma);
    double v = standard_normal();
    while (std::abs(v) < 1e-300) v = standard_normal();
    return levy_quotient(mu, v, lambda);
  }

  std::size_t index_below(std::size_t n) {
    return static_cast<std::size_t>(uniform(0.0, static_cast<double>(n)));
  }

 private:
  double standard_normal() {
    if (has_spare_) {
      has_spare_ = false;
      return spare_;
    }
    // Box-Muller; u1 in (0, 1] keeps the log finite.
    const double u1 = (static_cast<double>(gen_() >> 11) + 1.0) * 0x1.0p-53;
    const double u2 = static_cast<double>(gen_() >> 11) * 0x1.0p-53;
    const double radius = std::sqrt(-2.0 * std::log(u1));
    const double angle = 2.0 * std::numbers::pi * u2;
    spare_ = radius * std::sin(angle);
    has_spare_ = true;
    return radius * std::cos(angle);
  }

  std::mt19937_64 gen_;
  double spare_ = 0.0;
  bool has_spare_ = false;
};

// Hands out keyed sub-streams of one run.
class StreamFactory {
 public:
  StreamFactory() = default;
  StreamFactory(std::uint64_t master_seed, std::uint64_t run)
      : master_(master_seed), run_(run) {}

  RngStream make(std::uint64_t agent, Purpose purpose) const {
    return RngStream(master_, StreamKey{run_, agent, purpose});
  }

  // Agent id used for swarm-level streams (weight draws, reinsertion).
  static constexpr std::uint64_t swarm_agent = ~0ULL;

  std::uint64_t master_seed() const { return master_; }
  std::uint64_t run() const { return run_; }

 private:
  std::uint64_t master_ = 0;
  std::uint64_t run_ = 0;
};

}  // namespace fdo
