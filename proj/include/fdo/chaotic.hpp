#pragma once

#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>
#include <string>
#include <string_view>

namespace fdo {

enum class MapKind { logistic, tent, singer, sine, chebyshev };

inline std::string_view to_string(MapKind kind) {
  switch (kind) {
    case MapKind::logistic: return "logistic";
    case MapKind::tent: return "tent";
    case MapKind::singer: return "singer";
    case MapKind::sine: return "sine";
    case MapKind::chebyshev: return "chebyshev";
  }
  throw std::invalid_argument("unknown map kind");
}

inline MapKind parse_map_kind(std::string_view name) {
  if (name == "logistic") return MapKind::logistic;
  if (name == "tent") return MapKind::tent;
  if (name == "singer") return MapKind::singer;
  if (name == "sine") return MapKind::sine;
  if (name == "chebyshev") return MapKind::chebyshev;
  throw std::invalid_argument("unknown chaotic map: " + std::string(name));
}

// Deterministic chaotic iterator. State lives in the map's native domain
// ([0,1], or [-1,1] for Chebyshev); next() always reports a value in [0,1].
class ChaoticMap {
 public:
  explicit ChaoticMap(MapKind kind) : ChaoticMap(kind, 0.7) {}

  ChaoticMap(MapKind kind, double initial_state)
      : ChaoticMap(kind, initial_state, default_control(kind)) {}

  ChaoticMap(MapKind kind, double initial_state, double control)
      : kind_(kind), control_(control), state_(initial_state) {
    const double lo = (kind_ == MapKind::chebyshev) ? -1.0 : 0.0;
    if (!std::isfinite(initial_state) || initial_state < lo || initial_state > 1.0)
      throw std::invalid_argument("chaotic map: initial state outside domain");
    if (!std::isfinite(control))
      throw std::invalid_argument("chaotic map: control parameter not finite");
    // Reject seeds whose orbit pins to an exact fixed point straight away
    // (e.g. logistic 0.75, or 0.5 which collapses through 1 onto 0).
    double probe = state_;
    for (int i = 0; i < 4; ++i) {
      const double next_probe = step(probe);
      if (next_probe == probe)
        throw std::invalid_argument("chaotic map: degenerate seed (orbit hits a fixed point)");
      probe = next_probe;
    }
  }

  // Advance one step and return the new value normalized into [0, 1].
  double next() {
    state_ = step(state_);
    return normalized();
  }

  double normalized() const {
    return (kind_ == MapKind::chebyshev) ? (state_ + 1.0) / 2.0 : state_;
  }

  MapKind kind() const { return kind_; }
  double state() const { return state_; }
  double control() const { return control_; }

  static double default_control(MapKind kind) {
    switch (kind) {
      case MapKind::logistic: return 4.0;
      case MapKind::tent: return 2.0;
      case MapKind::singer: return 1.07;
      case MapKind::sine: return 0.3;
      case MapKind::chebyshev: return 4.0;
    }
    throw std::invalid_argument("unknown map kind");
  }

 private:
  double step(double x) const {
    double y = 0.0;
    switch (kind_) {
      case MapKind::logistic:
        y = control_ * x * (1.0 - x);
        break;
      case MapKind::tent:
        y = control_ * std::min(x, 1.0 - x);
        break;
      case MapKind::singer:
        y = control_ * (7.86 * x - 23.31 * x * x + 28.75 * x * x * x -
                        13.302875 * x * x * x * x);
        break;
      case MapKind::sine:
        y = (control_ / 4.0) * std::sin(std::numbers::pi * x);
        break;
      case MapKind::chebyshev:
        return std::cos(control_ * std::acos(std::clamp(x, -1.0, 1.0)));
    }
    // Keep floating-point drift from escaping the unit interval.
    return std::clamp(y, 0.0, 1.0);
  }

  MapKind kind_;
  double control_;
  double state_;
};

}  // namespace fdo
