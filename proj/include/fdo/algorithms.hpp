#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

#include "fdo/adaptive.hpp"
#include "fdo/variants.hpp"

namespace fdo {

enum class Algorithm { fdo, ifdo, mfdo, mifdo, cfdo, enhanced, adaptive };

inline std::string_view to_string(Algorithm a) {
  switch (a) {
    case Algorithm::fdo: return "fdo";
    case Algorithm::ifdo: return "ifdo";
    case Algorithm::mfdo: return "mfdo";
    case Algorithm::mifdo: return "mifdo";
    case Algorithm::cfdo: return "cfdo";
    case Algorithm::enhanced: return "enhanced";
    case Algorithm::adaptive: return "adaptive";
  }
  throw std::invalid_argument("unknown algorithm");
}

inline Algorithm parse_algorithm(std::string_view name) {
  if (name == "fdo") return Algorithm::fdo;
  if (name == "ifdo") return Algorithm::ifdo;
  if (name == "mfdo") return Algorithm::mfdo;
  if (name == "mifdo") return Algorithm::mifdo;
  if (name == "cfdo") return Algorithm::cfdo;
  if (name == "enhanced") return Algorithm::enhanced;
  if (name == "adaptive") return Algorithm::adaptive;
  throw std::invalid_argument("unknown algorithm: " + std::string(name));
}

// Per-variant knobs, bundled so callers can carry one options object.
struct AlgoOptions {
  IfdoParams ifdo;
  MfdoParams mfdo;
  MifdoParams mifdo;
  CfdoParams cfdo;
  EnhancedFdoParams enhanced;
  AdaptiveParams adaptive;
};

// Default weight factor when the caller does not pick one. The enhanced
// variant gets 0.5 so its sine transform sits at the peak (w_s = m/4) instead
// of degenerating to 0.
inline double default_wf(Algorithm a) {
  return a == Algorithm::enhanced ? 0.5 : 0.0;
}

// Dispatch one run. Only the on_step/on_iteration callbacks of `observers`
// are honored; the behavioral hooks stay with the selected variant.
inline RunResult run_algorithm(const ObjectiveSpec& spec, Algorithm algorithm,
                               FdoParams params, const AlgoOptions& options = {},
                               const VariantHooks& observers = {}) {
  VariantHooks hooks;
  switch (algorithm) {
    case Algorithm::fdo:
      break;
    case Algorithm::ifdo:
      hooks = ifdo_hooks(options.ifdo);
      break;
    case Algorithm::mfdo:
      hooks = mfdo_hooks(options.mfdo);
      break;
    case Algorithm::mifdo:
      hooks = mifdo_hooks(options.mifdo, options.ifdo);
      break;
    case Algorithm::cfdo:
      cfdo_configure(params, hooks, options.cfdo);
      break;
    case Algorithm::enhanced:
      enhanced_configure(params, hooks, options.enhanced);
      break;
    case Algorithm::adaptive:
      return adaptive_run(spec, params, options.adaptive, observers);
  }
  hooks.on_step = observers.on_step;
  hooks.on_iteration = observers.on_iteration;
  return run(spec, params, hooks);
}

}  // namespace fdo
