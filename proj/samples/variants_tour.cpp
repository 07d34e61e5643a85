// Runs every algorithm on one benchmark and prints a small comparison table.

#include <cstdio>
#include <string>

#include "fdo/fdo.hpp"

int main(int argc, char** argv) {
  const std::string id = argc > 1 ? argv[1] : "TF9";
  const fdo::bench::BenchmarkFunction fn = fdo::bench::instantiate(id, std::size_t{10});
  const fdo::ObjectiveSpec spec = fdo::bench::to_objective(fn);

  std::printf("%s (%s), d=%zu, 10 runs x 300 iterations\n", fn.id.c_str(),
              fn.name.c_str(), fn.dimension);
  std::printf("%-10s %14s %14s\n", "algorithm", "mean", "best");

  for (fdo::Algorithm a :
       {fdo::Algorithm::fdo, fdo::Algorithm::ifdo, fdo::Algorithm::mfdo,
        fdo::Algorithm::mifdo, fdo::Algorithm::cfdo, fdo::Algorithm::enhanced,
        fdo::Algorithm::adaptive}) {
    std::vector<double> finals;
    for (std::uint64_t run = 0; run < 10; ++run) {
      fdo::FdoParams params;
      params.population = 30;
      params.max_iterations = 300;
      params.wf = fdo::default_wf(a);
      params.seed = fdo::harness::derive_cell_seed(7, fdo::to_string(a), fn.id, run);
      params.run_index = run;
      finals.push_back(fdo::run_algorithm(spec, a, params).best_fitness);
    }
    const fdo::stats::SampleStats s = fdo::stats::summarize(finals);
    std::printf("%-10s %14.6e %14.6e\n", std::string(fdo::to_string(a)).c_str(), s.avg,
                s.min);
  }
  return 0;
}
