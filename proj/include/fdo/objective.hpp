#pragma once

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <functional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "fdo/chaotic.hpp"
#include "fdo/rng.hpp"

namespace fdo {

using Vec = std::vector<double>;

enum class Direction { minimize, maximize };

// Strict direction-aware comparison; ties are never "better".
inline bool better(double a, double b, Direction direction) {
  return direction == Direction::minimize ? a < b : a > b;
}

struct ObjectiveSpec {
  std::string name;
  std::size_t dimension = 0;
  Vec lower;
  Vec upper;
  Direction direction = Direction::minimize;
  std::function<double(const Vec&)> evaluator;
};

inline ObjectiveSpec make_objective(std::string name, Vec lower, Vec upper,
                                    std::function<double(const Vec&)> evaluator,
                                    Direction direction = Direction::minimize) {
  if (lower.empty() || lower.size() != upper.size())
    throw std::invalid_argument("objective: bounds must be non-empty and of equal length");
  for (std::size_t k = 0; k < lower.size(); ++k)
    if (!(lower[k] < upper[k]))
      throw std::invalid_argument("objective: lower bound must be below upper bound");
  if (!evaluator) throw std::invalid_argument("objective: evaluator required");
  ObjectiveSpec spec;
  spec.name = std::move(name);
  spec.dimension = lower.size();
  spec.lower = std::move(lower);
  spec.upper = std::move(upper);
  spec.direction = direction;
  spec.evaluator = std::move(evaluator);
  return spec;
}

// Same box on every dimension.
inline ObjectiveSpec make_objective(std::string name, std::size_t dimension, double lo,
                                    double hi, std::function<double(const Vec&)> evaluator,
                                    Direction direction = Direction::minimize) {
  return make_objective(std::move(name), Vec(dimension, lo), Vec(dimension, hi),
                        std::move(evaluator), direction);
}

struct EvalCounter {
  std::uint64_t evaluations = 0;
};

inline double evaluate(const ObjectiveSpec& spec, const Vec& x, EvalCounter& counter) {
  if (x.size() != spec.dimension)
    throw std::invalid_argument("evaluate: dimension mismatch for " + spec.name);
  ++counter.evaluations;
  return spec.evaluator(x);
}

enum class BoundsPolicy { clamp, reflect, chaotic_reinsert, random_reinsert };

// Randomness behind the reinsertion policies. clamp/reflect need neither.
struct BoundsSource {
  RngStream* stream = nullptr;
  ChaoticMap* map = nullptr;
};

// Pushes out-of-range coordinates back into the box. In-range coordinates are
// returned untouched and consume no randomness, which also makes every policy
// idempotent.
inline Vec apply_bounds(Vec x, const ObjectiveSpec& spec, BoundsPolicy policy,
                        BoundsSource source = {}) {
  if (x.size() != spec.dimension)
    throw std::invalid_argument("apply_bounds: dimension mismatch");
  for (std::size_t k = 0; k < x.size(); ++k) {
    const double lo = spec.lower[k];
    const double hi = spec.upper[k];
    double v = x[k];
    if (v >= lo && v <= hi) continue;
    switch (policy) {
      case BoundsPolicy::clamp:
        v = std::clamp(std::isnan(v) ? lo : v, lo, hi);
        break;
      case BoundsPolicy::reflect: {
        // Fold along the triangle wave of period 2(hi-lo); one reflection for
        // small overshoots, repeated mirroring for arbitrarily far points.
        if (std::isnan(v) || std::isinf(v)) {
          v = std::clamp(std::isnan(v) ? lo : v, lo, hi);
          break;
        }
        const double range = hi - lo;
        double y = std::fmod(v - lo, 2.0 * range);
        if (y < 0.0) y += 2.0 * range;
        v = lo + (y <= range ? y : 2.0 * range - y);
        break;
      }
      case BoundsPolicy::chaotic_reinsert:
        if (source.map == nullptr)
          throw std::invalid_argument("apply_bounds: chaotic_reinsert needs a map");
        v = lo + (hi - lo) * source.map->next();
        break;
      case BoundsPolicy::random_reinsert:
        if (source.stream == nullptr)
          throw std::invalid_argument("apply_bounds: random_reinsert needs a stream");
        v = source.stream->uniform(lo, hi);
        break;
    }
    x[k] = std::clamp(v, lo, hi);
  }
  return x;
}

}  // namespace fdo
