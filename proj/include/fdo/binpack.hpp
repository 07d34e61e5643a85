#pragma once

#include <cmath>
#include <cstdint>
#include <fstream>
#include <istream>
#include <numeric>
#include <sstream>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "fdo/core.hpp"

namespace fdo::bpp {

struct BppInstance {
  double capacity = 0.0;
  std::vector<double> weights;
  std::string name;
};

// BPPLIB-style text: item count, capacity, then one weight per line.
inline BppInstance parse_instance(std::istream& in, std::string name) {
  BppInstance inst;
  inst.name = std::move(name);
  std::size_t n = 0;
  if (!(in >> n) || n < 1)
    throw std::runtime_error("bpp instance: bad item count");
  if (!(in >> inst.capacity) || !(inst.capacity > 0.0))
    throw std::runtime_error("bpp instance: bad capacity");
  inst.weights.resize(n);
  for (std::size_t i = 0; i < n; ++i) {
    if (!(in >> inst.weights[i]))
      throw std::runtime_error("bpp instance: expected " + std::to_string(n) +
                               " weights");
    if (!(inst.weights[i] > 0.0) || inst.weights[i] > inst.capacity)
      throw std::runtime_error("bpp instance: weight outside (0, capacity]");
  }
  double extra;
  if (in >> extra) throw std::runtime_error("bpp instance: more weights than declared");
  return inst;
}

inline BppInstance load_instance(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open instance file: " + path);
  return parse_instance(in, path);
}

struct Packing {
  std::vector<std::vector<std::size_t>> bins;  // item indices per bin
  std::vector<double> fills;
};

using Perm = std::vector<std::size_t>;

inline Packing first_fit(const BppInstance& inst, const Perm& perm) {
  if (perm.size() != inst.weights.size())
    throw std::invalid_argument("first_fit: permutation length mismatch");
  Packing p;
  for (std::size_t item : perm) {
    const double w = inst.weights[item];
    std::size_t target = p.bins.size();
    for (std::size_t b = 0; b < p.bins.size(); ++b) {
      if (p.fills[b] + w <= inst.capacity) {
        target = b;
        break;
      }
    }
    if (target == p.bins.size()) {
      p.bins.emplace_back();
      p.fills.push_back(0.0);
    }
    p.bins[target].push_back(item);
    p.fills[target] += w;
  }
  return p;
}

// Falkenauer-style fill fitness, minimized; 0 exactly when every bin is full.
// The literal_exponent switch raises each fill ratio to its 1-based bin index
// instead of the constant exponent.
inline double bpp_fitness(const Packing& packing, double capacity, double k_exp = 2.0,
                          bool literal_exponent = false) {
  if (packing.bins.empty()) throw std::invalid_argument("bpp_fitness: empty packing");
  if (!(k_exp > 0.0)) throw std::invalid_argument("bpp_fitness: exponent must be > 0");
  const std::size_t n = packing.bins.size();
  double sum = 0.0;
  for (std::size_t b = 0; b < n; ++b) {
    const double e = literal_exponent ? static_cast<double>(b + 1) : k_exp;
    sum += std::pow(packing.fills[b] / capacity, e);
  }
  return 1.0 - sum / static_cast<double>(n);
}

struct Swap {
  std::size_t a = 0;
  std::size_t b = 0;
};

inline void apply_swap(Perm& perm, const Swap& s) { std::swap(perm[s.a], perm[s.b]); }

inline Perm apply_swaps(Perm perm, const std::vector<Swap>& moves,
                        std::size_t count = SIZE_MAX) {
  const std::size_t limit = std::min(count, moves.size());
  for (std::size_t i = 0; i < limit; ++i) apply_swap(perm, moves[i]);
  return perm;
}

// Minimal swap sequence turning `source` into `target` (cycle decomposition).
inline std::vector<Swap> perm_diff(const Perm& target, const Perm& source) {
  const std::size_t n = target.size();
  if (source.size() != n) throw std::invalid_argument("perm_diff: length mismatch");
  std::vector<std::size_t> where(n, SIZE_MAX);  // current index of each value
  for (std::size_t i = 0; i < n; ++i) {
    if (source[i] >= n || where[source[i]] != SIZE_MAX)
      throw std::invalid_argument("perm_diff: source is not a permutation");
    where[source[i]] = i;
  }
  Perm work = source;
  std::vector<Swap> moves;
  for (std::size_t i = 0; i < n; ++i) {
    if (target[i] >= n) throw std::invalid_argument("perm_diff: target is not a permutation");
    if (work[i] == target[i]) continue;
    const std::size_t j = where[target[i]];
    moves.push_back({i, j});
    where[work[i]] = j;
    where[work[j]] = i;
    std::swap(work[i], work[j]);
  }
  return moves;
}

namespace detail {

inline std::vector<Swap> random_swaps(std::size_t n, std::size_t count,
                                      RngStream& stream) {
  std::vector<Swap> moves;
  moves.reserve(count);
  for (std::size_t i = 0; i < count; ++i) {
    const std::size_t a = stream.index_below(n);
    std::size_t b = n > 1 ? stream.index_below(n - 1) : 0;
    if (b >= a) ++b;
    if (n == 1) b = a;
    moves.push_back({a, b});
  }
  return moves;
}

inline std::size_t fraction_count(double fraction, std::size_t total) {
  if (!(fraction > 0.0) || total == 0) return 0;
  const double k = std::ceil(fraction * static_cast<double>(total));
  return std::min(total, static_cast<std::size_t>(k));
}

}  // namespace detail

// The discrete pace operator: a fractional replay of the swap distance to the
// best permutation, or (for the exact-0/1 weights) a burst of random swaps.
inline Perm apply_fraction(const std::vector<Swap>& moves, const Perm& perm, double fw,
                           double r, RngStream& stream) {
  if (fw == 0.0 || fw == 1.0) {
    const std::size_t count = detail::fraction_count(r, perm.size());
    return apply_swaps(perm, detail::random_swaps(perm.size(), count, stream));
  }
  return apply_swaps(perm, moves, detail::fraction_count(fw, moves.size()));
}

struct PermSolution {
  Perm perm;
  Packing packing;
  double fitness = 0.0;
  std::vector<Swap> saved_moves;  // last accepted move list
};

struct AfdoParams {
  std::size_t population = 30;
  std::uint64_t max_iterations = 200;
  double wf = 0.0;
  double k_exp = 2.0;
  bool literal_exponent = false;
  std::uint64_t seed = 0;
  std::uint64_t run_index = 0;
};

struct AfdoResult {
  PermSolution best;
  std::vector<double> trace;  // best fitness per iteration, index 0 = after init
  std::uint64_t decodes = 0;
};

inline AfdoResult afdo_run(const BppInstance& inst, const AfdoParams& params) {
  if (params.population < 1) throw std::invalid_argument("afdo: population must be >= 1");
  if (params.wf < 0.0 || params.wf > 1.0)
    throw std::invalid_argument("afdo: wf must lie in [0, 1]");
  const std::size_t n = inst.weights.size();
  StreamFactory streams(params.seed, params.run_index);
  std::uint64_t decodes = 0;

  auto decode = [&](const Perm& perm) {
    ++decodes;
    return first_fit(inst, perm);
  };
  auto fitness_of = [&](const Packing& p) {
    return bpp_fitness(p, inst.capacity, params.k_exp, params.literal_exponent);
  };

  std::vector<PermSolution> scouts(params.population);
  std::vector<RngStream> walk;
  walk.reserve(params.population);
  for (std::size_t i = 0; i < params.population; ++i) {
    PermSolution& s = scouts[i];
    s.perm.resize(n);
    std::iota(s.perm.begin(), s.perm.end(), std::size_t{0});
    RngStream shuffle = streams.make(i, Purpose::shuffle);
    for (std::size_t k = n; k > 1; --k)
      std::swap(s.perm[k - 1], s.perm[shuffle.index_below(k)]);
    s.packing = decode(s.perm);
    s.fitness = fitness_of(s.packing);
    walk.push_back(streams.make(i, Purpose::walk));
  }

  PermSolution best = scouts[0];
  auto refresh_best = [&] {
    for (const PermSolution& s : scouts)
      if (s.fitness < best.fitness) best = s;
  };
  refresh_best();

  AfdoResult result;
  result.trace.reserve(params.max_iterations + 1);
  result.trace.push_back(best.fitness);

  for (std::uint64_t t = 0; t < params.max_iterations; ++t) {
    for (std::size_t i = 0; i < params.population; ++i) {
      refresh_best();
      PermSolution& s = scouts[i];
      const double r = walk[i].uniform(0.0, 1.0);
      const double fw = fitness_weight(best.fitness, s.fitness, params.wf);
      std::vector<Swap> applied;
      if (fw == 0.0 || fw == 1.0) {
        applied = detail::random_swaps(n, detail::fraction_count(r, n), walk[i]);
      } else {
        const std::vector<Swap> moves = perm_diff(best.perm, s.perm);
        applied.assign(moves.begin(),
                       moves.begin() + static_cast<std::ptrdiff_t>(
                                           detail::fraction_count(fw, moves.size())));
      }
      Perm candidate = apply_swaps(s.perm, applied);
      Packing packing = decode(candidate);
      const double f = fitness_of(packing);
      if (f < s.fitness) {
        s.perm = std::move(candidate);
        s.packing = std::move(packing);
        s.fitness = f;
        s.saved_moves = std::move(applied);
        continue;
      }
      Perm retry = apply_swaps(s.perm, s.saved_moves);
      Packing packing2 = decode(retry);
      const double f2 = fitness_of(packing2);
      if (f2 < s.fitness) {
        s.perm = std::move(retry);
        s.packing = std::move(packing2);
        s.fitness = f2;
      }
    }
    refresh_best();
    result.trace.push_back(best.fitness);
  }
  result.best = std::move(best);
  result.decodes = decodes;
  return result;
}

}  // namespace fdo::bpp
