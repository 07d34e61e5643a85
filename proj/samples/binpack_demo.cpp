// Solves a 1-D bin packing instance with the permutation-based solver and
// prints the resulting packing. Pass an instance file path to override the
// built-in demo instance.

#include <cstdio>
#include <string>

#include "fdo/fdo.hpp"

int main(int argc, char** argv) {
  fdo::bpp::BppInstance inst;
  if (argc > 1) {
    inst = fdo::bpp::load_instance(argv[1]);
  } else {
    inst.name = "demo";
    inst.capacity = 100.0;
    inst.weights = {48, 52, 30, 70, 45, 55, 25, 75, 60, 40,
                    33, 67, 20, 80, 50, 50, 10, 90, 15, 85};
  }

  fdo::bpp::AfdoParams params;
  params.population = 30;
  params.max_iterations = 200;
  params.seed = 5;

  const fdo::bpp::AfdoResult res = fdo::bpp::afdo_run(inst, params);
  std::printf("%s: %zu items, capacity %g\n", inst.name.c_str(), inst.weights.size(),
              inst.capacity);
  std::printf("bins used: %zu, fitness %.6f, decodes %llu\n",
              res.best.packing.bins.size(), res.best.fitness,
              (unsigned long long)res.decodes);
  for (std::size_t b = 0; b < res.best.packing.bins.size(); ++b) {
    std::printf("  bin %2zu (fill %5.1f):", b, res.best.packing.fills[b]);
    for (std::size_t item : res.best.packing.bins[b])
      std::printf(" %g", inst.weights[item]);
    std::printf("\n");
  }
  return 0;
}
