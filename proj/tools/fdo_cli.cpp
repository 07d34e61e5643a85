// Command-line front end: benchmark matrix runs, result statistics, the
// bin-packing solver, and the function catalog.

#include <cstdio>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "fdo/fdo.hpp"

namespace {

std::vector<std::string> split_list(const std::string& csv) {
  std::vector<std::string> out;
  std::string item;
  std::istringstream in(csv);
  while (std::getline(in, item, ','))
    if (!item.empty()) out.push_back(item);
  return out;
}

std::string bounds_label(const fdo::bench::BenchmarkFunction& f) {
  const bool uniform =
      std::equal(f.lower.begin() + 1, f.lower.end(), f.lower.begin()) &&
      std::equal(f.upper.begin() + 1, f.upper.end(), f.upper.begin());
  std::ostringstream out;
  if (uniform) {
    out << '[' << f.lower[0] << ',' << f.upper[0] << ']';
  } else {
    for (std::size_t k = 0; k < f.lower.size(); ++k) {
      if (k) out << 'x';
      out << '[' << f.lower[k] << ',' << f.upper[k] << ']';
    }
  }
  return out.str();
}

struct BenchArgs {
  std::string algo = "fdo";
  std::string suite = "classical";
  std::string funcs;
  std::size_t runs = 30;
  std::size_t pop = 30;
  std::uint64_t iters = 500;
  std::uint64_t seed = 42;
  std::string out = "results.csv";
  std::string trace;
  std::optional<double> wf;
  std::optional<std::size_t> dim;
  bool no_timing = false;
  // variant knobs
  std::string map = "singer";
  double lambda = 0.1;
  double m = 0.3;
  // adaptive knobs
  double levy_lambda = 1.5;
  std::optional<double> th_high;
  std::optional<double> th_low;
  double dh = 0.0;
  double dl = 0.0;
  std::string refine_map = "singer";
};

// JSON keys mirror the long flag names; explicit command-line flags win.
void apply_config_file(const std::string& path, BenchArgs& a, const CLI::App& cmd) {
  std::ifstream in(path);
  if (!in) throw CLI::ValidationError("--config", "cannot open " + path);
  nlohmann::json j;
  in >> j;
  auto overridden = [&](const std::string& flag) {
    const CLI::Option* opt = cmd.get_option_no_throw("--" + flag);
    return opt != nullptr && opt->count() > 0;
  };
  auto load = [&](const char* key, auto& slot) {
    using Slot = std::remove_reference_t<decltype(slot)>;
    if (j.contains(key) && !overridden(key)) slot = j.at(key).template get<Slot>();
  };
  auto load_opt = [&](const char* key, auto& slot) {
    if (j.contains(key) && !overridden(key))
      slot = j.at(key).template get<typename std::remove_reference_t<
          decltype(slot)>::value_type>();
  };
  load("algo", a.algo);
  load("suite", a.suite);
  load("funcs", a.funcs);
  load("runs", a.runs);
  load("pop", a.pop);
  load("iters", a.iters);
  load("seed", a.seed);
  load("out", a.out);
  load("trace", a.trace);
  load_opt("wf", a.wf);
  load_opt("dim", a.dim);
  load("no-timing", a.no_timing);
  load("map", a.map);
  load("lambda", a.lambda);
  load("m", a.m);
  load("levy-lambda", a.levy_lambda);
  load_opt("th-high", a.th_high);
  load_opt("th-low", a.th_low);
  load("dh", a.dh);
  load("dl", a.dl);
  load("refine-map", a.refine_map);
}

int cmd_bench(const BenchArgs& a) {
  fdo::harness::RunConfig config;
  config.algorithms.clear();
  for (const std::string& name : split_list(a.algo))
    config.algorithms.push_back(fdo::parse_algorithm(name));
  if (!a.funcs.empty()) {
    config.functions = split_list(a.funcs);
  } else {
    for (const auto& f : fdo::bench::list_suite(a.suite).functions)
      config.functions.push_back(f.id);
  }
  config.runs = a.runs;
  config.population = a.pop;
  config.iterations = a.iters;
  config.master_seed = a.seed;
  config.dimension = a.dim;
  config.wf = a.wf;
  config.record_timing = !a.no_timing;
  config.keep_traces = !a.trace.empty();

  config.options.cfdo.map = fdo::parse_map_kind(a.map);
  config.options.mifdo.lambda = a.lambda;
  config.options.enhanced.m = a.m;
  config.options.adaptive.levy_lambda = a.levy_lambda;
  config.options.adaptive.threshold_high = a.th_high;
  config.options.adaptive.threshold_low = a.th_low;
  config.options.adaptive.delta_high = a.dh;
  config.options.adaptive.delta_low = a.dl;
  config.options.adaptive.refine_map = fdo::parse_map_kind(a.refine_map);

  const std::vector<fdo::harness::RunRecord> records = fdo::harness::run_matrix(config);
  fdo::harness::write_records_csv(records, a.out);
  if (!a.trace.empty()) fdo::harness::emit_convergence(records, a.trace);
  std::cerr << "wrote " << records.size() << " records to " << a.out << '\n';
  return 0;
}

int cmd_stats(const std::string& in_path, const std::string& out_path,
              const std::string& wilcoxon) {
  const std::vector<fdo::harness::RunRecord> records =
      fdo::harness::read_records_csv(in_path);
  const std::vector<fdo::harness::StatsSummary> summaries =
      fdo::harness::summarize_records(records);
  if (!out_path.empty()) {
    fdo::harness::write_summaries_csv(summaries, out_path);
  } else {
    std::cout << fdo::harness::kSummaryHeader << '\n';
    for (const auto& s : summaries) {
      std::cout << s.algorithm << ',' << s.function << ',' << s.runs << ','
                << fdo::harness::format_real(s.avg) << ','
                << fdo::harness::format_real(s.stddev) << ','
                << fdo::harness::format_real(s.min) << ','
                << fdo::harness::format_real(s.max) << ','
                << fdo::harness::format_real(s.median) << '\n';
    }
  }
  if (!wilcoxon.empty()) {
    const std::size_t colon = wilcoxon.find(':');
    if (colon == std::string::npos)
      throw CLI::ValidationError("--wilcoxon", "expected algo_a:algo_b");
    const std::string lhs = wilcoxon.substr(0, colon);
    const std::string rhs = wilcoxon.substr(colon + 1);
    std::vector<std::string> functions;
    for (const auto& r : records)
      if (functions.empty() || functions.back() != r.function)
        functions.push_back(r.function);
    std::sort(functions.begin(), functions.end());
    functions.erase(std::unique(functions.begin(), functions.end()), functions.end());
    std::cout << "function,algo_a,algo_b,u,p_two_sided,exact\n";
    for (const std::string& fn : functions) {
      std::vector<double> va, vb;
      for (const auto& r : records) {
        if (r.function != fn) continue;
        if (r.algorithm == lhs) va.push_back(r.best_fitness);
        if (r.algorithm == rhs) vb.push_back(r.best_fitness);
      }
      if (va.size() < 3 || vb.size() < 3) continue;
      const fdo::stats::WilcoxonResult w = fdo::stats::wilcoxon_rank_sum(va, vb);
      std::cout << fn << ',' << lhs << ',' << rhs << ','
                << fdo::harness::format_real(w.u) << ','
                << fdo::harness::format_real(w.p_two_sided) << ','
                << (w.exact ? "true" : "false") << '\n';
    }
  }
  return 0;
}

int cmd_binpack(const std::string& instance_path, std::size_t runs, std::uint64_t iters,
                std::uint64_t seed, std::size_t pop, double k_exp,
                bool literal_exponent) {
  const fdo::bpp::BppInstance inst = fdo::bpp::load_instance(instance_path);
  std::cout << "run,bins,best_fitness,decodes\n";
  std::size_t best_bins = inst.weights.size() + 1;
  double best_fitness = 2.0;
  for (std::size_t run = 0; run < runs; ++run) {
    fdo::bpp::AfdoParams params;
    params.population = pop;
    params.max_iterations = iters;
    params.k_exp = k_exp;
    params.literal_exponent = literal_exponent;
    params.seed = seed;
    params.run_index = run;
    const fdo::bpp::AfdoResult res = fdo::bpp::afdo_run(inst, params);
    std::cout << run << ',' << res.best.packing.bins.size() << ','
              << fdo::harness::format_real(res.best.fitness) << ',' << res.decodes
              << '\n';
    best_bins = std::min(best_bins, res.best.packing.bins.size());
    best_fitness = std::min(best_fitness, res.best.fitness);
  }
  std::cerr << inst.name << ": " << inst.weights.size() << " items, capacity "
            << inst.capacity << "; best " << best_bins << " bins (fitness "
            << best_fitness << ")\n";
  return 0;
}

int cmd_list_functions() {
  std::cout << "id,name,dimension,scalable,bounds,optimum\n";
  for (const std::string& id : fdo::bench::all_function_ids()) {
    const fdo::bench::BenchmarkFunction f = fdo::bench::instantiate(id);
    std::cout << f.id << ',' << f.name << ',' << f.dimension << ','
              << (f.scalable ? "yes" : "no") << ',' << bounds_label(f) << ',';
    if (f.optimum_value)
      std::cout << *f.optimum_value;
    else
      std::cout << '-';
    std::cout << '\n';
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"fitness dependent optimizer workbench"};
  app.require_subcommand(1);

  BenchArgs bench;
  std::string config_path;
  CLI::App* cmd_b = app.add_subcommand("bench", "run an algorithm x function matrix");
  cmd_b->add_option("--algo", bench.algo, "comma list: fdo,ifdo,mfdo,mifdo,cfdo,enhanced,adaptive");
  cmd_b->add_option("--suite", bench.suite, "classical or cec2019");
  cmd_b->add_option("--funcs", bench.funcs, "comma list of function ids (overrides --suite)");
  cmd_b->add_option("--runs", bench.runs, "runs per cell");
  cmd_b->add_option("--pop", bench.pop, "population size");
  cmd_b->add_option("--iters", bench.iters, "iterations per run");
  cmd_b->add_option("--seed", bench.seed, "master seed");
  cmd_b->add_option("--out", bench.out, "records CSV path");
  cmd_b->add_option("--trace", bench.trace, "directory for convergence CSVs");
  cmd_b->add_option("--wf", bench.wf, "weight factor override in [0,1]");
  cmd_b->add_option("--dim", bench.dim, "dimension override for scalable functions");
  cmd_b->add_flag("--no-timing", bench.no_timing, "write wall_ms as 0 for byte-stable output");
  cmd_b->add_option("--map", bench.map, "cfdo chaotic map: logistic,tent,singer,sine,chebyshev");
  cmd_b->add_option("--lambda", bench.lambda, "m-ifdo pace offset");
  cmd_b->add_option("--m", bench.m, "enhanced sine-map control, 0<m<4");
  cmd_b->add_option("--levy-lambda", bench.levy_lambda, "adaptive levy index in (0,2]");
  cmd_b->add_option("--th-high", bench.th_high, "adaptive initial high threshold");
  cmd_b->add_option("--th-low", bench.th_low, "adaptive initial low threshold");
  cmd_b->add_option("--dh", bench.dh, "adaptive high-threshold decay per iteration");
  cmd_b->add_option("--dl", bench.dl, "adaptive low-threshold growth per iteration");
  cmd_b->add_option("--refine-map", bench.refine_map, "adaptive exploit-mode chaotic map");
  cmd_b->add_option("--config", config_path, "JSON file mirroring these flags");

  std::string stats_in, stats_out, stats_wilcoxon;
  CLI::App* cmd_s = app.add_subcommand("stats", "summarize a records CSV");
  cmd_s->add_option("--in", stats_in, "records CSV produced by bench")->required();
  cmd_s->add_option("--out", stats_out, "write summaries CSV here instead of stdout");
  cmd_s->add_option("--wilcoxon", stats_wilcoxon, "algo_a:algo_b rank-sum comparison");

  std::string bp_instance;
  std::size_t bp_runs = 10;
  std::uint64_t bp_iters = 200;
  std::uint64_t bp_seed = 42;
  std::size_t bp_pop = 30;
  double bp_kexp = 2.0;
  bool bp_literal = false;
  CLI::App* cmd_p = app.add_subcommand("binpack", "solve a 1-D bin packing instance");
  cmd_p->add_option("--instance", bp_instance, "instance file: n, capacity, n weights")
      ->required();
  cmd_p->add_option("--runs", bp_runs, "independent runs");
  cmd_p->add_option("--iters", bp_iters, "iterations per run");
  cmd_p->add_option("--seed", bp_seed, "master seed");
  cmd_p->add_option("--pop", bp_pop, "population size");
  cmd_p->add_option("--k-exp", bp_kexp, "fill-ratio exponent");
  cmd_p->add_flag("--literal-exponent", bp_literal, "use the 1-based bin index as exponent");

  CLI::App* cmd_l = app.add_subcommand("list-functions", "print the benchmark catalog");

  CLI11_PARSE(app, argc, argv);

  try {
    if (cmd_b->parsed()) {
      if (!config_path.empty()) apply_config_file(config_path, bench, *cmd_b);
      return cmd_bench(bench);
    }
    if (cmd_s->parsed()) return cmd_stats(stats_in, stats_out, stats_wilcoxon);
    if (cmd_p->parsed())
      return cmd_binpack(bp_instance, bp_runs, bp_iters, bp_seed, bp_pop, bp_kexp,
                         bp_literal);
    if (cmd_l->parsed()) return cmd_list_functions();
  } catch (const CLI::Error& e) {
    return app.exit(e);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 1;
  }
  return 0;
}
