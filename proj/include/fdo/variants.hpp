#pragma once

#include <cmath>
#include <numbers>
#include <span>
#include <stdexcept>

#include "fdo/core.hpp"

namespace fdo {

struct IfdoParams {
  double cohesion_epsilon = 1e-12;  // floor for the 1/cohesion division
  bool wf_resample = true;          // fresh wf ~ U[0,1] each iteration
};

struct MfdoParams {
  double wf_lo = 0.0;
  double wf_hi = 0.2;  // the narrowed weight-factor range
};

struct MifdoParams {
  double lambda = 0.1;  // scalar added to every pace component
};

struct CfdoParams {
  MapKind map = MapKind::singer;
  double initial_state = 0.7;
};

struct EnhancedFdoParams {
  double m = 0.3;  // sine-map control; effective weight becomes (m/4)sin(pi wf)
};

inline double sinc(double x) { return x == 0.0 ? 1.0 : std::sin(x) / x; }

// IFDO weight: the raw ratio, reduced by wf only when the ratio exceeds it.
inline double ifdo_fw(double best_fitness, double current_fitness, double wf) {
  if (current_fitness == 0.0) return 0.0;
  const double fw0 = std::abs(best_fitness / current_fitness);
  return fw0 <= wf ? fw0 : fw0 - wf;
}

// Mean saved pace of every scout except i; the flocking alignment term.
inline Vec alignment(const Swarm& swarm, std::size_t i) {
  const std::size_t n = swarm.scouts.size();
  Vec out(swarm.scouts[i].position.size(), 0.0);
  if (n < 2) return out;
  for (std::size_t j = 0; j < n; ++j) {
    if (j == i) continue;
    for (std::size_t k = 0; k < out.size(); ++k) out[k] += swarm.scouts[j].saved_pace[k];
  }
  for (double& v : out) v /= static_cast<double>(n - 1);
  return out;
}

// Displacement from scout i to the center of mass of the other scouts.
inline Vec cohesion(const Swarm& swarm, std::size_t i) {
  const std::size_t n = swarm.scouts.size();
  Vec out(swarm.scouts[i].position.size(), 0.0);
  if (n < 2) return out;
  for (std::size_t j = 0; j < n; ++j) {
    if (j == i) continue;
    for (std::size_t k = 0; k < out.size(); ++k) out[k] += swarm.scouts[j].position[k];
  }
  for (std::size_t k = 0; k < out.size(); ++k)
    out[k] = out[k] / static_cast<double>(n - 1) - swarm.scouts[i].position[k];
  return out;
}

namespace detail {

// Sign-preserving denominator floor so alignment/cohesion stays finite at the
// center of mass.
inline double floored(double c, double eps) {
  return c >= 0.0 ? std::max(c, eps) : std::min(c, -eps);
}

inline Vec ifdo_adjust(const Swarm& swarm, std::size_t i, Vec pace,
                       const IfdoParams& params) {
  const Vec a = alignment(swarm, i);
  const Vec c = cohesion(swarm, i);
  for (std::size_t k = 0; k < pace.size(); ++k)
    pace[k] += a[k] / floored(c[k], params.cohesion_epsilon);
  return pace;
}

}  // namespace detail

// Position update with alignment scaled by the reciprocal cohesion,
// componentwise with a guarded division.
inline Vec ifdo_update(const Swarm& swarm, std::size_t i, const Vec& pace,
                       const IfdoParams& params = {}) {
  Vec adjusted = detail::ifdo_adjust(swarm, i, pace, params);
  Vec out = swarm.scouts[i].position;
  for (std::size_t k = 0; k < out.size(); ++k) out[k] += adjusted[k];
  return out;
}

// MFDO weight: ratio smoothed by the sine cardinal of pi*wf, wf in [0, 0.2].
inline double mfdo_fw(double best_fitness, double current_fitness, double wf) {
  if (current_fitness == 0.0) return 0.0;
  return std::abs(best_fitness / current_fitness) * sinc(std::numbers::pi * wf);
}

// MFDO pace: the exact-0/1 cases get the sinc-damped random walk (toward the
// best scout in the fw==1 case); everything else delegates to the core cases.
inline Vec mfdo_pace(const Vec& x, const Vec& best_position, double fw, double wf,
                     std::span<const double> r) {
  if (fw != 0.0 && fw != 1.0) return compute_pace(x, best_position, fw, r);
  if (r.size() != 1 && r.size() != x.size())
    throw std::invalid_argument("mfdo_pace: r must be scalar or per-dimension");
  const double damp = sinc(std::numbers::pi * wf);
  Vec pace(x.size());
  for (std::size_t k = 0; k < x.size(); ++k) {
    const double rk = r[r.size() == 1 ? 0 : k];
    pace[k] = (fw == 0.0 ? x[k] : best_position[k] - x[k]) * rk * damp;
  }
  return pace;
}

inline Vec mfdo_pace(const Vec& x, const Vec& best_position, double fw, double wf,
                     double r) {
  return mfdo_pace(x, best_position, fw, wf, std::span<const double>(&r, 1));
}

// M-IFDO position update: the Lambda constant replaces alignment/cohesion.
inline Vec mifdo_update(const Vec& position, const Vec& pace, double lambda) {
  Vec out(position.size());
  for (std::size_t k = 0; k < out.size(); ++k) out[k] = position[k] + pace[k] + lambda;
  return out;
}

// Sine-map transform of the configured weight factor.
inline double enhanced_wf(double wf, double m) {
  if (!(m > 0.0) || !(m < 4.0))
    throw std::invalid_argument("enhanced_wf: m must lie in (0, 4)");
  return (m / 4.0) * std::sin(std::numbers::pi * wf);
}

// --- hook assemblies -------------------------------------------------------

inline VariantHooks ifdo_hooks(const IfdoParams& params = {}) {
  VariantHooks h;
  if (params.wf_resample)
    h.weight_factor = [](RunContext& ctx) { return ctx.weight.uniform(0.0, 1.0); };
  h.fitness_weight = ifdo_fw;
  h.adjust_pace = [params](RunContext&, const Swarm& swarm, std::size_t i, Vec pace) {
    return detail::ifdo_adjust(swarm, i, std::move(pace), params);
  };
  return h;
}

inline VariantHooks mfdo_hooks(const MfdoParams& params = {}) {
  if (params.wf_lo < 0.0 || params.wf_hi > 1.0 || params.wf_lo > params.wf_hi)
    throw std::invalid_argument("mfdo: wf range must be a subinterval of [0, 1]");
  VariantHooks h;
  h.weight_factor = [params](RunContext& ctx) {
    return ctx.weight.uniform(params.wf_lo, params.wf_hi);
  };
  h.fitness_weight = mfdo_fw;
  h.pace = [](RunContext&, const PaceArgs& a) {
    return mfdo_pace(a.swarm.scouts[a.scout].position, a.swarm.best_position, a.fw,
                     a.wf, a.r);
  };
  return h;
}

// M-IFDO keeps IFDO's dynamic weight machinery and swaps the flocking terms
// for the Lambda offset.
inline VariantHooks mifdo_hooks(const MifdoParams& params = {},
                                const IfdoParams& ifdo = {}) {
  VariantHooks h;
  if (ifdo.wf_resample)
    h.weight_factor = [](RunContext& ctx) { return ctx.weight.uniform(0.0, 1.0); };
  h.fitness_weight = ifdo_fw;
  h.adjust_pace = [params](RunContext&, const Swarm&, std::size_t, Vec pace) {
    for (double& v : pace) v += params.lambda;
    return pace;
  };
  return h;
}

// Chaotic initialization, chaotic r, and chaotic boundary re-entry, all fed
// by one shared map owned by the run.
inline void cfdo_configure(FdoParams& params, VariantHooks& hooks,
                           const CfdoParams& cfdo = {}) {
  params.init = InitStrategy::chaotic;
  params.bounds = BoundsPolicy::chaotic_reinsert;
  params.map = cfdo.map;
  params.map_state = cfdo.initial_state;
  hooks.draw_r = [](RngStream&, RunContext& ctx) { return 2.0 * ctx.map->next() - 1.0; };
}

// Sobol initialization plus the sine-map weight transform, constant per run.
inline void enhanced_configure(FdoParams& params, VariantHooks& hooks,
                               const EnhancedFdoParams& enhanced = {}) {
  params.init = InitStrategy::quasi_random;
  params.quasi = QuasiKind::sobol;
  const double ws = enhanced_wf(params.wf, enhanced.m);
  hooks.weight_factor = [ws](RunContext&) { return ws; };
}

}  // namespace fdo
