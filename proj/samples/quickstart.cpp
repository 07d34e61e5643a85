// Smallest useful program: minimize the 10-D sphere with base FDO.

#include <cstdio>

#include "fdo/fdo.hpp"

int main() {
  const fdo::ObjectiveSpec sphere = fdo::make_objective(
      "sphere", 10, -100.0, 100.0, [](const fdo::Vec& x) {
        double s = 0.0;
        for (double v : x) s += v * v;
        return s;
      });

  fdo::FdoParams params;
  params.population = 30;
  params.max_iterations = 300;
  params.seed = 1;

  const fdo::RunResult result = fdo::run(sphere, params);
  std::printf("best fitness  %.6e\n", result.best_fitness);
  std::printf("evaluations   %llu\n", (unsigned long long)result.evaluations);
  std::printf("trace points  %zu\n", result.trace.size());
  std::printf("first coord   %.6e\n", result.best_position[0]);
  return 0;
}
