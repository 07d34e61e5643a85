#pragma once

#include <algorithm>
#include <atomic>
#include <cstdint>
#include <cstdio>
#include <cstdlib>
#include <exception>
#include <filesystem>
#include <fstream>
#include <mutex>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>
#include <string_view>
#include <thread>
#include <tuple>
#include <vector>

#include "fdo/algorithms.hpp"
#include "fdo/benchmarks.hpp"
#include "fdo/stats.hpp"

namespace fdo::harness {

struct RunConfig {
  std::vector<Algorithm> algorithms{Algorithm::fdo};
  std::vector<std::string> functions;  // benchmark ids, e.g. TF1 or CEC04
  std::size_t runs = 30;
  std::size_t population = 30;
  std::uint64_t iterations = 500;
  std::uint64_t master_seed = 42;
  std::optional<std::size_t> dimension;  // override for scalable functions
  std::optional<double> wf;              // unset = per-algorithm default
  AlgoOptions options;
  bool record_timing = true;  // false pins wall_ms to 0 for byte-stable output
  bool keep_traces = false;
};

struct RunRecord {
  std::string algorithm;
  std::string function;
  std::uint64_t run = 0;
  std::uint64_t seed = 0;
  double best_fitness = 0.0;
  std::uint64_t evaluations = 0;
  double wall_ms = 0.0;
  std::vector<double> trace;  // filled only when the config keeps traces
};

struct StatsSummary {
  std::string algorithm;
  std::string function;
  std::size_t runs = 0;
  double avg = 0.0;
  double stddev = 0.0;
  double min = 0.0;
  double max = 0.0;
  double median = 0.0;
};

// Order-free mixing: each component is finalized separately and XORed, so a
// new algorithm or function never shifts the seeds of existing cells.
inline std::uint64_t derive_cell_seed(std::uint64_t master, std::string_view algorithm,
                                      std::string_view function, std::uint64_t run) {
  std::uint64_t h = detail::mix64(master);
  h ^= detail::mix64(detail::fnv1a(algorithm));
  h ^= detail::mix64(detail::fnv1a(function));
  h ^= detail::mix64(run + 0x9e3779b97f4a7c15ull);
  return detail::mix64(h);
}

inline unsigned thread_cap() {
  unsigned cap = std::thread::hardware_concurrency();
  if (cap == 0) cap = 1;
  if (const char* env = std::getenv("FDO_THREADS")) {
    char* end = nullptr;
    const unsigned long parsed = std::strtoul(env, &end, 10);
    if (end != env && *end == '\0' && parsed >= 1) cap = static_cast<unsigned>(parsed);
  }
  return cap;
}

inline std::vector<RunRecord> run_matrix(const RunConfig& config) {
  if (config.runs < 1) throw std::invalid_argument("run_matrix: runs must be >= 1");
  if (config.algorithms.empty())
    throw std::invalid_argument("run_matrix: no algorithms selected");
  if (config.functions.empty())
    throw std::invalid_argument("run_matrix: no functions selected");

  struct Cell {
    Algorithm algorithm;
    std::size_t function = 0;
    std::uint64_t run = 0;
  };
  std::vector<bench::BenchmarkFunction> functions;
  functions.reserve(config.functions.size());
  for (const std::string& id : config.functions)
    functions.push_back(bench::instantiate(id, config.dimension));

  std::vector<Cell> cells;
  cells.reserve(config.algorithms.size() * functions.size() * config.runs);
  for (Algorithm a : config.algorithms)
    for (std::size_t f = 0; f < functions.size(); ++f)
      for (std::uint64_t r = 0; r < config.runs; ++r) cells.push_back({a, f, r});

  std::vector<RunRecord> records(cells.size());
  std::atomic<std::size_t> next{0};
  std::exception_ptr failure;
  std::mutex failure_mutex;

  auto worker = [&] {
    for (;;) {
      const std::size_t i = next.fetch_add(1);
      if (i >= cells.size()) return;
      try {
        const Cell& cell = cells[i];
        const bench::BenchmarkFunction& fn = functions[cell.function];
        const ObjectiveSpec spec = bench::to_objective(fn);

        FdoParams params;
        params.population = config.population;
        params.max_iterations = config.iterations;
        params.wf = config.wf.value_or(default_wf(cell.algorithm));
        params.seed = derive_cell_seed(config.master_seed, to_string(cell.algorithm),
                                       fn.id, cell.run);
        params.run_index = cell.run;

        RunResult result = run_algorithm(spec, cell.algorithm, params, config.options);

        RunRecord& rec = records[i];
        rec.algorithm = std::string(to_string(cell.algorithm));
        rec.function = fn.id;
        rec.run = cell.run;
        rec.seed = params.seed;
        rec.best_fitness = result.best_fitness;
        rec.evaluations = result.evaluations;
        rec.wall_ms = config.record_timing ? result.wall_ms : 0.0;
        if (config.keep_traces) rec.trace = std::move(result.trace);
      } catch (...) {
        std::lock_guard<std::mutex> lock(failure_mutex);
        if (!failure) failure = std::current_exception();
        next.store(cells.size());
        return;
      }
    }
  };

  const unsigned threads =
      std::min<std::size_t>(thread_cap(), std::max<std::size_t>(cells.size(), 1));
  if (threads <= 1) {
    worker();
  } else {
    std::vector<std::thread> pool;
    pool.reserve(threads);
    for (unsigned t = 0; t < threads; ++t) pool.emplace_back(worker);
    for (std::thread& t : pool) t.join();
  }
  if (failure) std::rethrow_exception(failure);

  std::sort(records.begin(), records.end(), [](const RunRecord& a, const RunRecord& b) {
    return std::tie(a.algorithm, a.function, a.run) <
           std::tie(b.algorithm, b.function, b.run);
  });
  return records;
}

inline std::vector<StatsSummary> summarize_records(const std::vector<RunRecord>& records) {
  std::vector<StatsSummary> out;
  std::size_t i = 0;
  while (i < records.size()) {
    std::size_t j = i;
    std::vector<double> values;
    while (j < records.size() && records[j].algorithm == records[i].algorithm &&
           records[j].function == records[i].function) {
      values.push_back(records[j].best_fitness);
      ++j;
    }
    const stats::SampleStats s = stats::summarize(std::move(values));
    out.push_back({records[i].algorithm, records[i].function, s.n, s.avg, s.stddev,
                   s.min, s.max, s.median});
    i = j;
  }
  return out;
}

// 17 significant digits: enough to round-trip any double exactly.
inline std::string format_real(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.16e", v);
  return buf;
}

inline constexpr std::string_view kRecordHeader =
    "algorithm,function,run,seed,best_fitness,evaluations,wall_ms";
inline constexpr std::string_view kSummaryHeader =
    "algorithm,function,runs,avg,std,min,max,median";

inline void write_records_csv(const std::vector<RunRecord>& records,
                              const std::string& path) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot write " + path);
  out << kRecordHeader << '\n';
  for (const RunRecord& r : records) {
    out << r.algorithm << ',' << r.function << ',' << r.run << ',' << r.seed << ','
        << format_real(r.best_fitness) << ',' << r.evaluations << ','
        << format_real(r.wall_ms) << '\n';
  }
  if (!out) throw std::runtime_error("write failed: " + path);
}

inline void write_summaries_csv(const std::vector<StatsSummary>& summaries,
                                const std::string& path) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot write " + path);
  out << kSummaryHeader << '\n';
  for (const StatsSummary& s : summaries) {
    out << s.algorithm << ',' << s.function << ',' << s.runs << ','
        << format_real(s.avg) << ',' << format_real(s.stddev) << ','
        << format_real(s.min) << ',' << format_real(s.max) << ','
        << format_real(s.median) << '\n';
  }
  if (!out) throw std::runtime_error("write failed: " + path);
}

namespace detail_csv {

inline std::vector<std::string> split(const std::string& line) {
  std::vector<std::string> fields;
  std::string field;
  std::istringstream in(line);
  while (std::getline(in, field, ',')) fields.push_back(field);
  if (!line.empty() && line.back() == ',') fields.emplace_back();
  return fields;
}

}  // namespace detail_csv

inline std::vector<RunRecord> read_records_csv(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot open " + path);
  std::string line;
  if (!std::getline(in, line)) throw std::runtime_error("empty file: " + path);
  if (!line.empty() && line.back() == '\r') line.pop_back();
  if (line != kRecordHeader)
    throw std::runtime_error("unexpected header in " + path + ": " + line);
  std::vector<RunRecord> records;
  while (std::getline(in, line)) {
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty()) continue;
    const std::vector<std::string> f = detail_csv::split(line);
    if (f.size() != 7) throw std::runtime_error("malformed record row: " + line);
    RunRecord r;
    r.algorithm = f[0];
    r.function = f[1];
    r.run = std::stoull(f[2]);
    r.seed = std::stoull(f[3]);
    r.best_fitness = std::stod(f[4]);
    r.evaluations = std::stoull(f[5]);
    r.wall_ms = std::stod(f[6]);
    records.push_back(std::move(r));
  }
  return records;
}

inline void emit_convergence(const std::vector<RunRecord>& records,
                             const std::string& dir) {
  std::filesystem::create_directories(dir);
  for (const RunRecord& r : records) {
    if (r.trace.empty()) continue;
    const std::filesystem::path path =
        std::filesystem::path(dir) /
        (r.algorithm + "_" + r.function + "_run" + std::to_string(r.run) + ".csv");
    std::ofstream out(path, std::ios::binary);
    if (!out) throw std::runtime_error("cannot write " + path.string());
    out << "iteration,best_fitness\n";
    for (std::size_t i = 0; i < r.trace.size(); ++i)
      out << i << ',' << format_real(r.trace[i]) << '\n';
    if (!out) throw std::runtime_error("write failed: " + path.string());
  }
}

}  // namespace fdo::harness
