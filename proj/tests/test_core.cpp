#include <catch2/catch_amalgamated.hpp>

#include <cmath>
#include <map>
#include <numbers>

#include "fdo/core.hpp"

using namespace fdo;

namespace {

ObjectiveSpec sphere(std::size_t d, double lo = -10.0, double hi = 10.0) {
  return make_objective("sphere", d, lo, hi, [](const Vec& x) {
    double s = 0.0;
    for (double v : x) s += v * v;
    return s;
  });
}

ObjectiveSpec rastrigin(std::size_t d) {
  return make_objective("rastrigin", d, -5.12, 5.12, [](const Vec& x) {
    double s = 10.0 * static_cast<double>(x.size());
    for (double v : x) s += v * v - 10.0 * std::cos(2.0 * std::numbers::pi * v);
    return s;
  });
}

}  // namespace

TEST_CASE("fitness weight follows the ratio rule", "[core]") {
  REQUIRE(fitness_weight(5.0, 10.0, 0.0) == 0.5);
  REQUIRE(fitness_weight(10.0, 10.0, 0.0) == 1.0);
  REQUIRE(fitness_weight(5.0, 10.0, 0.2) == Catch::Approx(0.3).margin(1e-15));
  REQUIRE(fitness_weight(-5.0, 10.0, 0.0) == 0.5);
  REQUIRE(fitness_weight(1.0, 10.0, 0.5) == Catch::Approx(-0.4).margin(1e-15));
  REQUIRE(fitness_weight(30.0, 10.0, 0.0) == 3.0);
  // A zero current fitness short-circuits to zero, whatever the weight factor.
  REQUIRE(fitness_weight(5.0, 0.0, 0.0) == 0.0);
  REQUIRE(fitness_weight(0.0, 0.0, 0.7) == 0.0);
}

TEST_CASE("pace cases: random walk at exact 0/1, signed displacement otherwise",
          "[core]") {
  const Vec best = {1.0};

  SECTION("fw == 1 scales the position by r") {
    const Vec pace = compute_pace({2.0, -3.0}, {0.0, 0.0}, 1.0, 0.5);
    REQUIRE(pace == Vec{1.0, -1.5});
  }
  SECTION("fw == 0 also walks, regardless of the best position") {
    const Vec pace = compute_pace({3.0}, best, 0.0, -0.5);
    REQUIRE(pace == Vec{-1.5});
  }
  SECTION("negative r moves away from the best") {
    const Vec pace = compute_pace({4.0}, best, 0.5, -0.3);
    REQUIRE(pace == Vec{-1.5});
  }
  SECTION("non-negative r moves toward the best; r == 0 counts as non-negative") {
    REQUIRE(compute_pace({4.0}, best, 0.5, 0.2) == Vec{1.5});
    REQUIRE(compute_pace({4.0}, best, 0.5, 0.0) == Vec{1.5});
  }
  SECTION("weights outside [0, 1] still use the displacement branch") {
    REQUIRE(compute_pace({2.0}, {5.0}, 1.7, 0.9) == Vec{(2.0 - 5.0) * 1.7});
    REQUIRE(compute_pace({2.0}, {5.0}, 1.7, -0.9) == Vec{(5.0 - 2.0) * 1.7});
    REQUIRE(compute_pace({2.0}, {5.0}, -0.4, 0.9) == Vec{(2.0 - 5.0) * -0.4});
  }
  SECTION("per-dimension r applies component-wise signs") {
    const double r[2] = {0.5, -0.5};
    const Vec pace = compute_pace({2.0, 4.0}, {1.0, 1.0}, 0.5,
                                  std::span<const double>(r, 2));
    REQUIRE(pace == Vec{0.5, -1.5});
  }
  SECTION("r must be scalar or match the dimension") {
    const double r[2] = {0.5, -0.5};
    REQUIRE_THROWS_AS(compute_pace({1.0, 2.0, 3.0}, {0.0, 0.0, 0.0}, 0.5,
                                   std::span<const double>(r, 2)),
                      std::invalid_argument);
  }
}

TEST_CASE("acceptance tries the candidate, then the saved pace, else stays",
          "[core]") {
  const ObjectiveSpec spec = sphere(1);
  EvalCounter counter;
  Scout s;
  s.position = {4.0};
  s.fitness = 16.0;
  s.saved_pace = {0.0};

  // Candidate improves: move and remember the pace.
  REQUIRE(try_move(s, {-2.0}, spec, counter, BoundsPolicy::clamp) ==
          MoveOutcome::moved_new);
  REQUIRE(s.position == Vec{2.0});
  REQUIRE(s.fitness == 4.0);
  REQUIRE(s.saved_pace == Vec{-2.0});
  REQUIRE(counter.evaluations == 1);

  // Candidate worsens but the saved pace still helps: move without replacing it.
  REQUIRE(try_move(s, {3.0}, spec, counter, BoundsPolicy::clamp) ==
          MoveOutcome::moved_saved);
  REQUIRE(s.position == Vec{0.0});
  REQUIRE(s.fitness == 0.0);
  REQUIRE(s.saved_pace == Vec{-2.0});
  REQUIRE(counter.evaluations == 3);

  // Neither candidate nor saved pace improves on a perfect fitness: stay put.
  REQUIRE(try_move(s, {1.0}, spec, counter, BoundsPolicy::clamp) ==
          MoveOutcome::stayed);
  REQUIRE(s.position == Vec{0.0});
  REQUIRE(s.fitness == 0.0);
  REQUIRE(counter.evaluations == 5);
}

TEST_CASE("a zero saved pace makes the retry a no-op, so ties stay", "[core]") {
  const ObjectiveSpec spec = sphere(1);
  EvalCounter counter;
  Scout s;
  s.position = {3.0};
  s.fitness = 9.0;
  s.saved_pace = {0.0};
  REQUIRE(try_move(s, {2.0}, spec, counter, BoundsPolicy::clamp) ==
          MoveOutcome::stayed);
  REQUIRE(s.position == Vec{3.0});
  REQUIRE(counter.evaluations == 2);
}

TEST_CASE("candidates are boxed before evaluation", "[core]") {
  const ObjectiveSpec spec = sphere(1, 0.0, 10.0);
  EvalCounter counter;
  Scout s;
  s.position = {9.0};
  s.fitness = 81.0;
  s.saved_pace = {0.0};
  // The unbounded candidate 14 clamps to 10 and worsens; the retry is a no-op.
  REQUIRE(try_move(s, {5.0}, spec, counter, BoundsPolicy::clamp) ==
          MoveOutcome::stayed);
  REQUIRE(s.position == Vec{9.0});
  // Reflecting the same overshoot lands on 6, which improves.
  REQUIRE(try_move(s, {5.0}, spec, counter, BoundsPolicy::reflect) ==
          MoveOutcome::moved_new);
  REQUIRE(s.position == Vec{6.0});
  REQUIRE(s.fitness == 36.0);
}

TEST_CASE("quasi-random init spreads scouts on the low-discrepancy grid", "[core]") {
  const ObjectiveSpec spec = sphere(2, 0.0, 10.0);
  FdoParams params;
  params.population = 2;
  params.init = InitStrategy::quasi_random;
  RunContext ctx(spec, params);
  const Swarm swarm = init_swarm(spec, params, ctx);
  REQUIRE(swarm.scouts[0].position == Vec{5.0, 5.0});
  REQUIRE(swarm.scouts[1].position == Vec{2.5, 7.5});
  REQUIRE(swarm.scouts[0].fitness == 50.0);
  REQUIRE(swarm.scouts[0].saved_pace == Vec{0.0, 0.0});
  REQUIRE(ctx.counter.evaluations == 2);
}

TEST_CASE("uniform init is seeded, in bounds, and consistent", "[core]") {
  const ObjectiveSpec spec = sphere(3);
  FdoParams params;
  params.population = 5;
  params.seed = 99;

  RunContext a(spec, params);
  RunContext b(spec, params);
  const Swarm sa = init_swarm(spec, params, a);
  const Swarm sb = init_swarm(spec, params, b);
  for (std::size_t i = 0; i < 5; ++i) {
    REQUIRE(sa.scouts[i].position == sb.scouts[i].position);
    for (double v : sa.scouts[i].position) {
      REQUIRE(v >= -10.0);
      REQUIRE(v <= 10.0);
    }
    REQUIRE(sa.scouts[i].fitness ==
            sa.scouts[i].position[0] * sa.scouts[i].position[0] +
                sa.scouts[i].position[1] * sa.scouts[i].position[1] +
                sa.scouts[i].position[2] * sa.scouts[i].position[2]);
  }

  // The swarm best is the true minimum over scouts after init.
  double best = sa.scouts[0].fitness;
  for (const Scout& s : sa.scouts) best = std::min(best, s.fitness);
  REQUIRE(sa.best_fitness == best);

  FdoParams other = params;
  other.seed = 100;
  RunContext c(spec, other);
  const Swarm sc = init_swarm(spec, other, c);
  REQUIRE(sc.scouts[0].position != sa.scouts[0].position);
}

TEST_CASE("chaotic init consumes the shared map in scout-then-dimension order",
          "[core]") {
  const ObjectiveSpec spec = sphere(2, -4.0, 4.0);
  FdoParams params;
  params.population = 3;
  params.init = InitStrategy::chaotic;
  params.map = MapKind::logistic;
  params.map_state = 0.3;
  RunContext ctx(spec, params);
  const Swarm swarm = init_swarm(spec, params, ctx);
  ChaoticMap twin(MapKind::logistic, 0.3);
  for (const Scout& s : swarm.scouts)
    for (double v : s.position) REQUIRE(v == -4.0 + 8.0 * twin.next());
}

TEST_CASE("run parameter validation", "[core]") {
  const ObjectiveSpec spec = sphere(2);
  FdoParams params;
  params.population = 0;
  REQUIRE_THROWS_AS(run(spec, params), std::invalid_argument);
  params.population = 3;
  params.wf = 1.5;
  REQUIRE_THROWS_AS(run(spec, params), std::invalid_argument);
  params.wf = -0.1;
  REQUIRE_THROWS_AS(run(spec, params), std::invalid_argument);
}

TEST_CASE("zero iterations returns the init snapshot", "[core]") {
  const ObjectiveSpec spec = sphere(4);
  FdoParams params;
  params.population = 6;
  params.max_iterations = 0;
  params.seed = 3;
  const RunResult result = run(spec, params);
  REQUIRE(result.trace.size() == 1);
  REQUIRE(result.trace[0] == result.best_fitness);
  REQUIRE(result.evaluations == 6);
}

TEST_CASE("identical seeds give bit-identical runs", "[core]") {
  const ObjectiveSpec spec = rastrigin(4);
  FdoParams params;
  params.population = 8;
  params.max_iterations = 40;
  params.seed = 2024;
  const RunResult a = run(spec, params);
  const RunResult b = run(spec, params);
  REQUIRE(a.trace == b.trace);
  REQUIRE(a.best_position == b.best_position);
  REQUIRE(a.best_fitness == b.best_fitness);
  REQUIRE(a.evaluations == b.evaluations);
  REQUIRE(a.trace.size() == 41);

  FdoParams other = params;
  other.seed = 2025;
  const RunResult c = run(spec, other);
  REQUIRE(c.trace != a.trace);
}

TEST_CASE("the trace never worsens in either direction", "[core]") {
  FdoParams params;
  params.population = 6;
  params.max_iterations = 50;
  params.seed = 7;

  const RunResult down = run(rastrigin(3), params);
  for (std::size_t t = 1; t < down.trace.size(); ++t)
    REQUIRE(down.trace[t] <= down.trace[t - 1]);

  const ObjectiveSpec up = make_objective(
      "peak", 2, -5.0, 5.0,
      [](const Vec& x) { return 1.0 / (1.0 + x[0] * x[0] + x[1] * x[1]); },
      Direction::maximize);
  const RunResult rising = run(up, params);
  for (std::size_t t = 1; t < rising.trace.size(); ++t)
    REQUIRE(rising.trace[t] >= rising.trace[t - 1]);
  REQUIRE(rising.best_fitness > rising.trace[0] - 1e-18);
}

TEST_CASE("scouts stay inside the box under every bounds policy", "[core]") {
  const ObjectiveSpec spec = rastrigin(2);
  for (BoundsPolicy policy :
       {BoundsPolicy::clamp, BoundsPolicy::reflect, BoundsPolicy::chaotic_reinsert,
        BoundsPolicy::random_reinsert}) {
    FdoParams params;
    params.population = 5;
    params.max_iterations = 30;
    params.seed = 11;
    params.bounds = policy;
    VariantHooks hooks;
    hooks.on_iteration = [&](const Swarm& swarm) {
      for (const Scout& s : swarm.scouts)
        for (double v : s.position) {
          REQUIRE(v >= -5.12);
          REQUIRE(v <= 5.12);
        }
    };
    const RunResult result = run(spec, params, hooks);
    REQUIRE(std::isfinite(result.best_fitness));
  }
}

TEST_CASE("step events expose r shape, weight factor, and outcome accounting",
          "[core]") {
  const ObjectiveSpec spec = rastrigin(3);
  FdoParams params;
  params.population = 4;
  params.max_iterations = 25;
  params.seed = 5;
  params.wf = 0.3;

  std::map<MoveOutcome, std::uint64_t> outcomes;
  std::uint64_t steps = 0;
  VariantHooks hooks;
  hooks.on_step = [&](const StepEvent& ev) {
    ++steps;
    ++outcomes[ev.outcome];
    REQUIRE(ev.r.size() == 1);
    REQUIRE(ev.r[0] >= -1.0);
    REQUIRE(ev.r[0] <= 1.0);
    REQUIRE(ev.wf == 0.3);
    REQUIRE(ev.mode == StepMode::standard);
    REQUIRE(ev.pace.size() == 3);
    if (ev.outcome == MoveOutcome::stayed)
      REQUIRE(ev.fitness_after == ev.fitness_before);
    else
      REQUIRE(ev.fitness_after < ev.fitness_before);
  };
  const RunResult result = run(spec, params, hooks);
  REQUIRE(steps == 4 * 25);

  // Each accepted candidate costs one evaluation, every other path costs two.
  const std::uint64_t expected =
      4 + outcomes[MoveOutcome::moved_new] +
      2 * (outcomes[MoveOutcome::moved_saved] + outcomes[MoveOutcome::stayed]);
  REQUIRE(result.evaluations == expected);

  VariantHooks per_dim;
  FdoParams pd = params;
  pd.r_mode = RMode::per_dimension;
  per_dim.on_step = [&](const StepEvent& ev) { REQUIRE(ev.r.size() == 3); };
  run(spec, pd, per_dim);
}

TEST_CASE("all three move outcomes occur in ordinary runs", "[core]") {
  const ObjectiveSpec spec = rastrigin(3);
  std::map<MoveOutcome, std::uint64_t> outcomes;
  VariantHooks hooks;
  hooks.on_step = [&](const StepEvent& ev) { ++outcomes[ev.outcome]; };
  for (std::uint64_t seed = 1; seed <= 20; ++seed) {
    FdoParams params;
    params.population = 6;
    params.max_iterations = 60;
    params.seed = seed;
    run(spec, params, hooks);
    if (outcomes.size() == 3) break;
  }
  REQUIRE(outcomes[MoveOutcome::moved_new] > 0);
  REQUIRE(outcomes[MoveOutcome::moved_saved] > 0);
  REQUIRE(outcomes[MoveOutcome::stayed] > 0);
}
