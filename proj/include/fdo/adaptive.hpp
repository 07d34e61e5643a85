#pragma once

#include <cmath>
#include <cstdint>
#include <limits>
#include <memory>
#include <optional>
#include <stdexcept>
#include <vector>

#include "fdo/core.hpp"

namespace fdo {

struct DiversityState {
  double threshold_high = std::numeric_limits<double>::infinity();
  double threshold_low = 0.0;
  double delta_high = 0.0;
  double delta_low = 0.0;
  double current_diversity = 0.0;
  bool frozen = false;  // set once an update would invert the band
};

struct AdaptiveParams {
  double levy_lambda = 1.5;
  MapKind refine_map = MapKind::singer;
  double refine_state = 0.7;
  // Unset thresholds default to the initial population's diversity (high)
  // and 1e-3 of it (low).
  std::optional<double> threshold_high;
  std::optional<double> threshold_low;
  double delta_high = 0.0;
  double delta_low = 0.0;
};

inline Vec mean_position(const Swarm& swarm) {
  if (swarm.scouts.empty()) throw std::invalid_argument("mean_position: empty swarm");
  Vec mean(swarm.scouts[0].position.size(), 0.0);
  for (const Scout& s : swarm.scouts)
    for (std::size_t k = 0; k < mean.size(); ++k) mean[k] += s.position[k];
  for (double& v : mean) v /= static_cast<double>(swarm.scouts.size());
  return mean;
}

// Mean squared Euclidean distance of the population to its centroid.
inline double diversity(const Swarm& swarm) {
  const Vec mean = mean_position(swarm);
  double acc = 0.0;
  for (const Scout& s : swarm.scouts)
    for (std::size_t k = 0; k < mean.size(); ++k) {
      const double d = s.position[k] - mean[k];
      acc += d * d;
    }
  return acc / static_cast<double>(swarm.scouts.size());
}

// Accelerating threshold drift, frozen at the last valid band once the next
// update would cross the thresholds.
inline void update_thresholds(DiversityState& state, std::uint64_t t) {
  if (state.frozen) return;
  const double next_high = state.threshold_high - static_cast<double>(t) * state.delta_high;
  const double next_low = state.threshold_low + static_cast<double>(t) * state.delta_low;
  if (next_high <= next_low) {
    state.frozen = true;
    return;
  }
  state.threshold_high = next_high;
  state.threshold_low = next_low;
}

inline StepMode select_mode(double diversity_value, const DiversityState& state) {
  if (diversity_value > state.threshold_high) return StepMode::explore;
  if (diversity_value < state.threshold_low) return StepMode::exploit;
  return StepMode::standard;
}

// One independent Levy draw per dimension.
inline Vec levy_pace(RngStream& stream, std::size_t dimension, double lambda) {
  Vec pace(dimension);
  for (double& v : pace) v = stream.levy(lambda);
  return pace;
}

inline Vec levy_step(const Scout& scout, RngStream& stream, double lambda,
                     const ObjectiveSpec& spec, BoundsPolicy policy,
                     BoundsSource source = {}) {
  Vec x = scout.position;
  const Vec pace = levy_pace(stream, x.size(), lambda);
  for (std::size_t k = 0; k < x.size(); ++k) x[k] += pace[k];
  return apply_bounds(std::move(x), spec, policy, source);
}

// Convex pull toward the best position by factor c in [0, 1].
inline Vec refine_toward(const Vec& x, const Vec& best_position, double c) {
  Vec out(x.size());
  for (std::size_t k = 0; k < x.size(); ++k)
    out[k] = x[k] + c * (best_position[k] - x[k]);
  return out;
}

inline Vec chaotic_refine(const Scout& scout, const Vec& best_position, ChaoticMap& map,
                          const ObjectiveSpec& spec, BoundsPolicy policy,
                          BoundsSource source = {}) {
  return apply_bounds(refine_toward(scout.position, best_position, map.next()), spec,
                      policy, source);
}

// Core run loop with quasi-random init and the diversity-gated mode switch:
// high diversity swaps the pace for Levy jumps, low diversity for chaotic
// refinement toward the best scout. Acceptance stays strict in every mode.
// Only the on_step/on_iteration callbacks of `observers` are honored; the
// behavioral hooks stay internal.
inline RunResult adaptive_run(const ObjectiveSpec& spec, FdoParams params,
                              const AdaptiveParams& adaptive = {},
                              const VariantHooks& observers = {}) {
  if (!(adaptive.levy_lambda > 0.0) || adaptive.levy_lambda > 2.0)
    throw std::invalid_argument("adaptive: levy_lambda must lie in (0, 2]");
  params.init = InitStrategy::quasi_random;

  struct State {
    DiversityState div;
    bool initialized = false;
    std::vector<RngStream> levy_streams;
    ChaoticMap refine;
    double lambda;
    State(const AdaptiveParams& a) : refine(a.refine_map, a.refine_state), lambda(a.levy_lambda) {}
  };
  auto st = std::make_shared<State>(adaptive);

  VariantHooks hooks;
  hooks.mode = [st, adaptive](RunContext&, const Swarm& swarm) {
    const double div = diversity(swarm);
    if (!st->initialized) {
      st->initialized = true;
      st->div.threshold_high = adaptive.threshold_high.value_or(div);
      st->div.threshold_low = adaptive.threshold_low.value_or(1e-3 * div);
      st->div.delta_high = adaptive.delta_high;
      st->div.delta_low = adaptive.delta_low;
      if (st->div.threshold_low > st->div.threshold_high)
        throw std::invalid_argument("adaptive: threshold_low exceeds threshold_high");
    }
    update_thresholds(st->div, swarm.iteration);
    st->div.current_diversity = div;
    return select_mode(div, st->div);
  };
  hooks.explore_pace = [st](RunContext& ctx, const Swarm&, std::size_t i) {
    if (st->levy_streams.empty()) {
      st->levy_streams.reserve(ctx.params.population);
      for (std::size_t j = 0; j < ctx.params.population; ++j)
        st->levy_streams.push_back(ctx.streams.make(j, Purpose::levy));
    }
    return levy_pace(st->levy_streams[i], ctx.spec.dimension, st->lambda);
  };
  hooks.exploit_pace = [st](RunContext&, const Swarm& swarm, std::size_t i) {
    const double c = st->refine.next();
    const Vec& x = swarm.scouts[i].position;
    Vec pace(x.size());
    for (std::size_t k = 0; k < pace.size(); ++k)
      pace[k] = c * (swarm.best_position[k] - x[k]);
    return pace;
  };
  hooks.on_step = observers.on_step;
  hooks.on_iteration = observers.on_iteration;
  return run(spec, params, hooks);
}

}  // namespace fdo
