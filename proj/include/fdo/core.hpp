#pragma once

#include <chrono>
#include <cmath>
#include <cstdint>
#include <functional>
#include <limits>
#include <optional>
#include <span>
#include <stdexcept>
#include <utility>
#include <vector>

#include "fdo/objective.hpp"
#include "fdo/quasi.hpp"

namespace fdo {

struct Scout {
  Vec position;
  double fitness = 0.0;
  Vec saved_pace;  // last accepted pace, zero before the first acceptance
};

struct Swarm {
  std::vector<Scout> scouts;
  Vec best_position;
  double best_fitness = 0.0;
  std::uint64_t iteration = 0;
};

enum class RMode { scalar_shared, per_dimension };
enum class InitStrategy { uniform_random, quasi_random, chaotic };
enum class StepMode { standard, explore, exploit };
enum class MoveOutcome { moved_new, moved_saved, stayed };

struct FdoParams {
  std::size_t population = 30;
  std::uint64_t max_iterations = 500;
  double wf = 0.0;  // base FDO keeps a fixed weight factor; 0 favors stable search
  BoundsPolicy bounds = BoundsPolicy::clamp;
  RMode r_mode = RMode::scalar_shared;
  std::uint64_t seed = 0;
  std::uint64_t run_index = 0;
  InitStrategy init = InitStrategy::uniform_random;
  QuasiKind quasi = QuasiKind::sobol;  // source for quasi_random init
  MapKind map = MapKind::singer;       // source for chaotic init / reinsertion
  double map_state = 0.7;
};

struct RunResult {
  Vec best_position;
  double best_fitness = 0.0;
  std::vector<double> trace;  // best fitness per iteration, index 0 = after init
  std::uint64_t evaluations = 0;
  double wall_ms = 0.0;
};

// Everything one run owns: keyed random streams, the shared chaotic map (when
// a chaotic source is configured), and the evaluation counter.
struct RunContext {
  const ObjectiveSpec& spec;
  const FdoParams& params;
  StreamFactory streams;
  std::vector<RngStream> walk;  // per-scout r draws
  RngStream weight;             // per-iteration weight-factor draws
  RngStream reinsert;           // random_reinsert boundary draws
  std::optional<ChaoticMap> map;
  EvalCounter counter;

  RunContext(const ObjectiveSpec& s, const FdoParams& p)
      : spec(s), params(p), streams(p.seed, p.run_index) {
    if (p.population < 1) throw std::invalid_argument("run: population must be >= 1");
    if (p.wf < 0.0 || p.wf > 1.0) throw std::invalid_argument("run: wf must lie in [0, 1]");
    walk.reserve(p.population);
    for (std::size_t i = 0; i < p.population; ++i)
      walk.push_back(streams.make(i, Purpose::walk));
    weight = streams.make(StreamFactory::swarm_agent, Purpose::weight);
    reinsert = streams.make(StreamFactory::swarm_agent, Purpose::reinsert);
    if (p.bounds == BoundsPolicy::chaotic_reinsert || p.init == InitStrategy::chaotic)
      map.emplace(p.map, p.map_state);
  }

  BoundsSource bounds_source() {
    return BoundsSource{&reinsert, map ? &*map : nullptr};
  }
};

// Fitness weight |best/current| - wf, with the zero-fitness edge rule folded in.
inline double fitness_weight(double best_fitness, double current_fitness, double wf) {
  if (current_fitness == 0.0) return 0.0;
  return std::abs(best_fitness / current_fitness) - wf;
}

// Pace cases. Exact 0/1 fitness weights take the scaled random walk; all other
// values, including those outside [0,1], take the signed displacement toward
// or away from the best scout, keyed on the sign of r.
inline Vec compute_pace(const Vec& x, const Vec& best_position, double fw,
                        std::span<const double> r) {
  if (r.size() != 1 && r.size() != x.size())
    throw std::invalid_argument("compute_pace: r must be scalar or per-dimension");
  Vec pace(x.size());
  const bool random_walk = (fw == 0.0 || fw == 1.0);
  for (std::size_t k = 0; k < x.size(); ++k) {
    const double rk = r[r.size() == 1 ? 0 : k];
    if (random_walk)
      pace[k] = x[k] * rk;
    else if (rk < 0.0)
      pace[k] = (x[k] - best_position[k]) * fw * (-1.0);
    else
      pace[k] = (x[k] - best_position[k]) * fw;
  }
  return pace;
}

inline Vec compute_pace(const Vec& x, const Vec& best_position, double fw, double r) {
  return compute_pace(x, best_position, fw, std::span<const double>(&r, 1));
}

// Two-stage acceptance of Algorithm-1 style: try the candidate pace, then the
// saved pace, else stay put. Moves happen only on strict improvement.
inline MoveOutcome try_move(Scout& scout, const Vec& pace, const ObjectiveSpec& spec,
                            EvalCounter& counter, BoundsPolicy policy,
                            BoundsSource source = {}) {
  Vec candidate(scout.position.size());
  for (std::size_t k = 0; k < candidate.size(); ++k)
    candidate[k] = scout.position[k] + pace[k];
  candidate = apply_bounds(std::move(candidate), spec, policy, source);
  const double f = evaluate(spec, candidate, counter);
  if (better(f, scout.fitness, spec.direction)) {
    scout.position = std::move(candidate);
    scout.fitness = f;
    scout.saved_pace = pace;
    return MoveOutcome::moved_new;
  }
  Vec retry(scout.position.size());
  for (std::size_t k = 0; k < retry.size(); ++k)
    retry[k] = scout.position[k] + scout.saved_pace[k];
  retry = apply_bounds(std::move(retry), spec, policy, source);
  const double f2 = evaluate(spec, retry, counter);
  if (better(f2, scout.fitness, spec.direction)) {
    scout.position = std::move(retry);
    scout.fitness = f2;
    return MoveOutcome::moved_saved;
  }
  return MoveOutcome::stayed;
}

inline void refresh_best(Swarm& swarm, Direction direction) {
  for (const Scout& s : swarm.scouts) {
    if (better(s.fitness, swarm.best_fitness, direction)) {
      swarm.best_fitness = s.fitness;
      swarm.best_position = s.position;
    }
  }
}

inline Swarm init_swarm(const ObjectiveSpec& spec, const FdoParams& params,
                        RunContext& ctx) {
  const std::size_t n = params.population;
  const std::size_t d = spec.dimension;
  Swarm swarm;
  swarm.scouts.resize(n);
  std::optional<QuasiSequence> seq;
  if (params.init == InitStrategy::quasi_random) seq.emplace(params.quasi, d);
  for (std::size_t i = 0; i < n; ++i) {
    Scout& s = swarm.scouts[i];
    s.position.resize(d);
    switch (params.init) {
      case InitStrategy::uniform_random: {
        RngStream stream = ctx.streams.make(i, Purpose::init);
        for (std::size_t k = 0; k < d; ++k)
          s.position[k] = stream.uniform(spec.lower[k], spec.upper[k]);
        break;
      }
      case InitStrategy::quasi_random: {
        const std::vector<double> point = seq->next();
        for (std::size_t k = 0; k < d; ++k)
          s.position[k] = spec.lower[k] + (spec.upper[k] - spec.lower[k]) * point[k];
        break;
      }
      case InitStrategy::chaotic: {
        for (std::size_t k = 0; k < d; ++k)
          s.position[k] =
              spec.lower[k] + (spec.upper[k] - spec.lower[k]) * ctx.map->next();
        break;
      }
    }
    s.fitness = evaluate(spec, s.position, ctx.counter);
    s.saved_pace.assign(d, 0.0);
  }
  swarm.best_position = swarm.scouts[0].position;
  swarm.best_fitness = swarm.scouts[0].fitness;
  refresh_best(swarm, spec.direction);
  return swarm;
}

// Data handed to a custom pace hook.
struct PaceArgs {
  const Swarm& swarm;
  std::size_t scout;
  double fw;
  double wf;
  std::span<const double> r;
};

// Per-scout event record, mainly for trace-regression tests and debugging.
struct StepEvent {
  std::uint64_t iteration = 0;
  std::size_t scout = 0;
  StepMode mode = StepMode::standard;
  double wf = 0.0;
  double fw = 0.0;
  Vec r;
  Vec pace;
  MoveOutcome outcome = MoveOutcome::stayed;
  double fitness_before = 0.0;
  double fitness_after = 0.0;
};

// Override points for the variants and the adaptive extension. Unset hooks
// fall back to the base behavior, so a default-constructed set runs plain FDO.
struct VariantHooks {
  std::function<Swarm(RunContext&)> init;
  std::function<double(RunContext&)> weight_factor;  // once per iteration
  std::function<double(double best, double current, double wf)> fitness_weight;
  std::function<Vec(RunContext&, const PaceArgs&)> pace;
  // Post-processing of the pace before the move (alignment/cohesion, Lambda).
  std::function<Vec(RunContext&, const Swarm&, std::size_t scout, Vec pace)> adjust_pace;
  std::function<double(RngStream&, RunContext&)> draw_r;  // one r component
  std::function<StepMode(RunContext&, const Swarm&)> mode;  // before each iteration
  std::function<Vec(RunContext&, const Swarm&, std::size_t scout)> explore_pace;
  std::function<Vec(RunContext&, const Swarm&, std::size_t scout)> exploit_pace;
  std::function<void(const StepEvent&)> on_step;
  std::function<void(const Swarm&)> on_iteration;
};

// One full iteration: every scout refreshes the global best, builds its pace
// for the iteration's mode, and passes through the acceptance rule.
inline void fdo_step(Swarm& swarm, RunContext& ctx, const VariantHooks& hooks = {}) {
  const StepMode mode = hooks.mode ? hooks.mode(ctx, swarm) : StepMode::standard;
  const double wf_iter =
      hooks.weight_factor ? hooks.weight_factor(ctx) : ctx.params.wf;
  const std::size_t d = ctx.spec.dimension;
  for (std::size_t i = 0; i < swarm.scouts.size(); ++i) {
    refresh_best(swarm, ctx.spec.direction);
    Scout& scout = swarm.scouts[i];
    Vec pace;
    Vec rvals;
    double fw = std::numeric_limits<double>::quiet_NaN();
    if (mode == StepMode::standard) {
      rvals.resize(ctx.params.r_mode == RMode::scalar_shared ? 1 : d);
      for (double& r : rvals)
        r = hooks.draw_r ? hooks.draw_r(ctx.walk[i], ctx) : ctx.walk[i].signed_unit();
      fw = hooks.fitness_weight
               ? hooks.fitness_weight(swarm.best_fitness, scout.fitness, wf_iter)
               : fitness_weight(swarm.best_fitness, scout.fitness, wf_iter);
      pace = hooks.pace
                 ? hooks.pace(ctx, PaceArgs{swarm, i, fw, wf_iter, rvals})
                 : compute_pace(scout.position, swarm.best_position, fw, rvals);
      if (hooks.adjust_pace) pace = hooks.adjust_pace(ctx, swarm, i, std::move(pace));
    } else if (mode == StepMode::explore) {
      pace = hooks.explore_pace(ctx, swarm, i);
    } else {
      pace = hooks.exploit_pace(ctx, swarm, i);
    }
    const double before = scout.fitness;
    const MoveOutcome outcome = try_move(scout, pace, ctx.spec, ctx.counter,
                                         ctx.params.bounds, ctx.bounds_source());
    if (hooks.on_step) {
      StepEvent ev;
      ev.iteration = swarm.iteration;
      ev.scout = i;
      ev.mode = mode;
      ev.wf = wf_iter;
      ev.fw = fw;
      ev.r = rvals;
      ev.pace = std::move(pace);
      ev.outcome = outcome;
      ev.fitness_before = before;
      ev.fitness_after = scout.fitness;
      hooks.on_step(ev);
    }
  }
  // Keep the best fields current at the iteration boundary so the trace and
  // the returned result see the last scout's improvement too.
  refresh_best(swarm, ctx.spec.direction);
  swarm.iteration += 1;
}

inline RunResult run(const ObjectiveSpec& spec, const FdoParams& params,
                     const VariantHooks& hooks = {}) {
  const auto t0 = std::chrono::steady_clock::now();
  RunContext ctx(spec, params);
  Swarm swarm = hooks.init ? hooks.init(ctx) : init_swarm(spec, params, ctx);
  RunResult result;
  result.trace.reserve(params.max_iterations + 1);
  result.trace.push_back(swarm.best_fitness);
  for (std::uint64_t t = 0; t < params.max_iterations; ++t) {
    fdo_step(swarm, ctx, hooks);
    result.trace.push_back(swarm.best_fitness);
    if (hooks.on_iteration) hooks.on_iteration(swarm);
  }
  result.best_position = swarm.best_position;
  result.best_fitness = swarm.best_fitness;
  result.evaluations = ctx.counter.evaluations;
  result.wall_ms = std::chrono::duration<double, std::milli>(
                       std::chrono::steady_clock::now() - t0)
                       .count();
  return result;
}

}  // namespace fdo
