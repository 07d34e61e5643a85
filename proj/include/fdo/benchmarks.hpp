#pragma once

#include <array>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <functional>
#include <numbers>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "fdo/objective.hpp"

namespace fdo::bench {

// Optional shift + rotation, applied as z = R(x - shift) before the base
// formula. An empty shift means zero; an empty rotation means identity.
struct Transform {
  Vec shift;
  std::vector<Vec> rotation;
};

namespace detail {

inline void check_transform(const Transform& t, std::size_t d, const std::string& id) {
  if (!t.shift.empty() && t.shift.size() != d)
    throw std::invalid_argument("transform shift length mismatch for " + id);
  if (!t.rotation.empty()) {
    if (t.rotation.size() != d)
      throw std::invalid_argument("transform rotation row count mismatch for " + id);
    for (const Vec& row : t.rotation)
      if (row.size() != d)
        throw std::invalid_argument("transform rotation row length mismatch for " + id);
  }
}

}  // namespace detail

struct BenchmarkFunction {
  std::string id;
  std::string name;
  std::size_t dimension = 0;
  Vec lower;
  Vec upper;
  std::optional<double> optimum_value;
  std::optional<Vec> optimum_location;  // in the base (untransformed) frame
  bool scalable = false;
  bool noisy = false;
  std::function<double(const Vec&)> base;
  std::optional<Transform> transform;
};

inline double eval_function(const BenchmarkFunction& f, const Vec& x) {
  if (x.size() != f.dimension)
    throw std::invalid_argument("eval_function: dimension mismatch for " + f.id);
  if (!f.transform) return f.base(x);
  detail::check_transform(*f.transform, f.dimension, f.id);
  const std::size_t d = f.dimension;
  Vec shifted(d);
  for (std::size_t k = 0; k < d; ++k)
    shifted[k] = f.transform->shift.empty() ? x[k] : x[k] - f.transform->shift[k];
  if (f.transform->rotation.empty()) return f.base(shifted);
  Vec z(d, 0.0);
  for (std::size_t r = 0; r < d; ++r)
    for (std::size_t c = 0; c < d; ++c) z[r] += f.transform->rotation[r][c] * shifted[c];
  return f.base(z);
}

// Where the base-frame optimum lands after the transform: shift + R^T z*.
inline Vec transformed_optimum(const BenchmarkFunction& f) {
  if (!f.optimum_location) throw std::invalid_argument("no optimum recorded for " + f.id);
  if (!f.transform) return *f.optimum_location;
  detail::check_transform(*f.transform, f.dimension, f.id);
  const std::size_t d = f.dimension;
  Vec out = f.transform->shift.empty() ? Vec(d, 0.0) : f.transform->shift;
  if (f.transform->rotation.empty()) {
    for (std::size_t k = 0; k < d; ++k) out[k] += (*f.optimum_location)[k];
    return out;
  }
  for (std::size_t r = 0; r < d; ++r)
    for (std::size_t c = 0; c < d; ++c)
      out[r] += f.transform->rotation[c][r] * (*f.optimum_location)[c];
  return out;
}

inline ObjectiveSpec to_objective(const BenchmarkFunction& f) {
  return make_objective(f.id, f.lower, f.upper,
                        [fn = f](const Vec& x) { return eval_function(fn, x); });
}

namespace detail {

inline constexpr double kPi = std::numbers::pi;

// Frozen optimum data. The Schwefel 2.26 pair is the Newton-refined root of
// d/dz [z sin(sqrt z)]; the multiminima locations below were pinned down by an
// independent high-precision minimizer and verified against published values.
inline constexpr double kSchwefelArg = 420.96874635998205;
inline constexpr double kSchwefelVal = -418.9828872724337;

inline double sphere(const Vec& x) {
  double s = 0.0;
  for (double v : x) s += v * v;
  return s;
}

inline double schwefel_222(const Vec& x) {
  double sum = 0.0, prod = 1.0;
  for (double v : x) {
    sum += std::abs(v);
    prod *= std::abs(v);
  }
  return sum + prod;
}

inline double schwefel_12(const Vec& x) {
  double total = 0.0, prefix = 0.0;
  for (double v : x) {
    prefix += v;
    total += prefix * prefix;
  }
  return total;
}

inline double schwefel_221(const Vec& x) {
  double m = 0.0;
  for (double v : x) m = std::max(m, std::abs(v));
  return m;
}

inline double rosenbrock(const Vec& x) {
  double s = 0.0;
  for (std::size_t i = 0; i + 1 < x.size(); ++i) {
    const double a = x[i + 1] - x[i] * x[i];
    const double b = x[i] - 1.0;
    s += 100.0 * a * a + b * b;
  }
  return s;
}

inline double step(const Vec& x) {
  double s = 0.0;
  for (double v : x) {
    const double t = std::floor(v + 0.5);
    s += t * t;
  }
  return s;
}

inline double quartic(const Vec& x) {
  double s = 0.0;
  for (std::size_t i = 0; i < x.size(); ++i) {
    const double v2 = x[i] * x[i];
    s += static_cast<double>(i + 1) * v2 * v2;
  }
  return s;
}

inline double schwefel_226(const Vec& x) {
  double s = 0.0;
  for (double v : x) s -= v * std::sin(std::sqrt(std::abs(v)));
  return s;
}

inline double rastrigin(const Vec& x) {
  double s = 0.0;
  for (double v : x) s += v * v - 10.0 * std::cos(2.0 * kPi * v) + 10.0;
  return s;
}

inline double ackley(const Vec& x) {
  const double n = static_cast<double>(x.size());
  double sq = 0.0, cs = 0.0;
  for (double v : x) {
    sq += v * v;
    cs += std::cos(2.0 * kPi * v);
  }
  return -20.0 * std::exp(-0.2 * std::sqrt(sq / n)) - std::exp(cs / n) + 20.0 +
         std::numbers::e;
}

inline double griewank(const Vec& x) {
  double sum = 0.0, prod = 1.0;
  for (std::size_t i = 0; i < x.size(); ++i) {
    sum += x[i] * x[i] / 4000.0;
    prod *= std::cos(x[i] / std::sqrt(static_cast<double>(i + 1)));
  }
  return sum - prod + 1.0;
}

inline double penalty_u(double v, double a, double k, double m) {
  if (v > a) return k * std::pow(v - a, m);
  if (v < -a) return k * std::pow(-v - a, m);
  return 0.0;
}

inline double penalized1(const Vec& x) {
  const std::size_t d = x.size();
  auto y = [&](std::size_t i) { return 1.0 + (x[i] + 1.0) / 4.0; };
  double core = 10.0 * std::pow(std::sin(kPi * y(0)), 2);
  for (std::size_t i = 0; i + 1 < d; ++i) {
    const double t = y(i) - 1.0;
    core += t * t * (1.0 + 10.0 * std::pow(std::sin(kPi * y(i + 1)), 2));
  }
  const double last = y(d - 1) - 1.0;
  core += last * last;
  double pen = 0.0;
  for (double v : x) pen += penalty_u(v, 10.0, 100.0, 4.0);
  return kPi / static_cast<double>(d) * core + pen;
}

inline double penalized2(const Vec& x) {
  const std::size_t d = x.size();
  double core = std::pow(std::sin(3.0 * kPi * x[0]), 2);
  for (std::size_t i = 0; i + 1 < d; ++i) {
    const double t = x[i] - 1.0;
    core += t * t * (1.0 + std::pow(std::sin(3.0 * kPi * x[i + 1]), 2));
  }
  const double last = x[d - 1] - 1.0;
  core += last * last * (1.0 + std::pow(std::sin(2.0 * kPi * x[d - 1]), 2));
  double pen = 0.0;
  for (double v : x) pen += penalty_u(v, 5.0, 100.0, 4.0);
  return 0.1 * core + pen;
}

inline double foxholes(const Vec& x) {
  static constexpr std::array<double, 5> grid = {-32.0, -16.0, 0.0, 16.0, 32.0};
  double outer = 1.0 / 500.0;
  for (int j = 0; j < 25; ++j) {
    const double a1 = grid[j % 5];
    const double a2 = grid[j / 5];
    double inner = static_cast<double>(j + 1);
    inner += std::pow(x[0] - a1, 6) + std::pow(x[1] - a2, 6);
    outer += 1.0 / inner;
  }
  return 1.0 / outer;
}

inline double kowalik(const Vec& x) {
  static constexpr std::array<double, 11> a = {0.1957, 0.1947, 0.1735, 0.1600,
                                               0.0844, 0.0627, 0.0456, 0.0342,
                                               0.0323, 0.0235, 0.0246};
  static constexpr std::array<double, 11> binv = {0.25, 0.5, 1.0, 2.0,  4.0, 6.0,
                                                  8.0,  10.0, 12.0, 14.0, 16.0};
  double s = 0.0;
  for (std::size_t j = 0; j < 11; ++j) {
    const double b = 1.0 / binv[j];
    const double num = x[0] * (b * b + b * x[1]);
    const double den = b * b + b * x[2] + x[3];
    const double t = a[j] - num / den;
    s += t * t;
  }
  return s;
}

inline double six_hump(const Vec& x) {
  const double x1 = x[0], x2 = x[1];
  return 4.0 * x1 * x1 - 2.1 * std::pow(x1, 4) + std::pow(x1, 6) / 3.0 + x1 * x2 -
         4.0 * x2 * x2 + 4.0 * std::pow(x2, 4);
}

inline double branin(const Vec& x) {
  const double x1 = x[0], x2 = x[1];
  const double a = x2 - 5.1 / (4.0 * kPi * kPi) * x1 * x1 + 5.0 / kPi * x1 - 6.0;
  return a * a + 10.0 * (1.0 - 1.0 / (8.0 * kPi)) * std::cos(x1) + 10.0;
}

inline double goldstein_price(const Vec& x) {
  const double x1 = x[0], x2 = x[1];
  const double p = x1 + x2 + 1.0;
  const double q = 2.0 * x1 - 3.0 * x2;
  const double f1 = 1.0 + p * p * (19.0 - 14.0 * x1 + 3.0 * x1 * x1 - 14.0 * x2 +
                                   6.0 * x1 * x2 + 3.0 * x2 * x2);
  const double f2 = 30.0 + q * q * (18.0 - 32.0 * x1 + 12.0 * x1 * x1 + 48.0 * x2 -
                                    36.0 * x1 * x2 + 27.0 * x2 * x2);
  return f1 * f2;
}

inline double hartmann3(const Vec& x) {
  static constexpr double A[4][3] = {
      {3.0, 10.0, 30.0}, {0.1, 10.0, 35.0}, {3.0, 10.0, 30.0}, {0.1, 10.0, 35.0}};
  static constexpr double P[4][3] = {{0.3689, 0.1170, 0.2673},
                                     {0.4699, 0.4387, 0.7470},
                                     {0.1091, 0.8732, 0.5547},
                                     {0.038150, 0.5743, 0.8828}};
  static constexpr double c[4] = {1.0, 1.2, 3.0, 3.2};
  double s = 0.0;
  for (int i = 0; i < 4; ++i) {
    double e = 0.0;
    for (int j = 0; j < 3; ++j) {
      const double t = x[j] - P[i][j];
      e += A[i][j] * t * t;
    }
    s -= c[i] * std::exp(-e);
  }
  return s;
}

inline double hartmann6(const Vec& x) {
  static constexpr double A[4][6] = {{10.0, 3.0, 17.0, 3.5, 1.7, 8.0},
                                     {0.05, 10.0, 17.0, 0.1, 8.0, 14.0},
                                     {3.0, 3.5, 1.7, 10.0, 17.0, 8.0},
                                     {17.0, 8.0, 0.05, 10.0, 0.1, 14.0}};
  static constexpr double P[4][6] = {
      {0.1312, 0.1696, 0.5569, 0.0124, 0.8283, 0.5886},
      {0.2329, 0.4135, 0.8307, 0.3736, 0.1004, 0.9991},
      {0.2348, 0.1451, 0.3522, 0.2883, 0.3047, 0.6650},
      {0.4047, 0.8828, 0.8732, 0.5743, 0.1091, 0.0381}};
  static constexpr double c[4] = {1.0, 1.2, 3.0, 3.2};
  double s = 0.0;
  for (int i = 0; i < 4; ++i) {
    double e = 0.0;
    for (int j = 0; j < 6; ++j) {
      const double t = x[j] - P[i][j];
      e += A[i][j] * t * t;
    }
    s -= c[i] * std::exp(-e);
  }
  return s;
}

inline double shekel5(const Vec& x) {
  static constexpr double a[5][4] = {{4.0, 4.0, 4.0, 4.0},
                                     {1.0, 1.0, 1.0, 1.0},
                                     {8.0, 8.0, 8.0, 8.0},
                                     {6.0, 6.0, 6.0, 6.0},
                                     {3.0, 7.0, 3.0, 7.0}};
  static constexpr double c[5] = {0.1, 0.2, 0.2, 0.4, 0.4};
  double s = 0.0;
  for (int j = 0; j < 5; ++j) {
    double d = c[j];
    for (int i = 0; i < 4; ++i) {
      const double t = x[i] - a[j][i];
      d += t * t;
    }
    s -= 1.0 / d;
  }
  return s;
}

// --- CEC2019-style definitions ("100-Digit Challenge" formulas). Each is
// reported as f + 1 so the suite minimum is 1.

inline double cec_chebyshev(const Vec& x) {
  const int d = static_cast<int>(x.size());
  double a = 1.0, b = 1.2, dx = 0.0;
  for (int j = 0; j < d - 2; ++j) {
    dx = 2.4 * b - a;
    a = b;
    b = dx;
  }
  dx = b;  // T_{d-1} evaluated at 1.2 via its recurrence
  const int sample = 32 * d;
  const double dy = 2.0 / static_cast<double>(sample);
  double y = -1.0, sum = 0.0;
  for (int i = 0; i <= sample; ++i) {
    double px = x[0];
    for (int j = 1; j < d; ++j) px = y * px + x[j];
    if (px < -1.0 || px > 1.0) sum += (1.0 - std::abs(px)) * (1.0 - std::abs(px));
    y += dy;
  }
  for (int sgn = -1; sgn <= 1; sgn += 2) {
    double px = x[0];
    for (int j = 1; j < d; ++j) px = 1.2 * static_cast<double>(sgn) * px + x[j];
    if (px < dx) sum += px * px;
  }
  return sum + 1.0;
}

inline double cec_hilbert(const Vec& x) {
  const int b = static_cast<int>(std::sqrt(static_cast<double>(x.size())));
  double sum = 0.0;
  for (int i = 0; i < b; ++i) {
    for (int j = 0; j < b; ++j) {
      double y = 0.0;
      for (int k = 0; k < b; ++k)
        y += 1.0 / static_cast<double>(i + k + 1) * x[k + j * b];
      sum += std::abs(i == j ? y - 1.0 : y);
    }
  }
  return sum + 1.0;
}

inline double cec_lennard_jones(const Vec& x) {
  const int atoms = static_cast<int>(x.size()) / 3;
  double f = 12.7120622568;  // removes the known 6-atom minimum energy
  for (int i = 0; i < atoms - 1; ++i) {
    for (int j = i + 1; j < atoms; ++j) {
      double r2 = 0.0;
      for (int k = 0; k < 3; ++k) {
        const double t = x[3 * i + k] - x[3 * j + k];
        r2 += t * t;
      }
      const double r6 = r2 * r2 * r2;
      if (r6 > 1.0e-10)
        f += (1.0 / r6 - 2.0) / r6;
      else
        f += 1.0e20;  // collision guard
    }
  }
  return f + 1.0;
}

inline double cec_weierstrass(const Vec& x, double scale) {
  constexpr double a = 0.5, b = 3.0;
  constexpr int kmax = 20;
  double sum = 0.0, offset = 0.0;
  for (int k = 0; k <= kmax; ++k)
    offset += std::pow(a, k) * std::cos(2.0 * kPi * std::pow(b, k) * 0.5);
  for (double v : x) {
    const double z = v * scale;
    for (int k = 0; k <= kmax; ++k)
      sum += std::pow(a, k) * std::cos(2.0 * kPi * std::pow(b, k) * (z + 0.5));
  }
  return sum - static_cast<double>(x.size()) * offset + 1.0;
}

inline double cec_mod_schwefel(const Vec& x, double scale) {
  const double n = static_cast<double>(x.size());
  double f = 0.0;
  for (double v : x) {
    const double z = v * scale + 4.209687462275036e+002;
    if (z > 500.0) {
      const double w = 500.0 - std::fmod(z, 500.0);
      f -= w * std::sin(std::sqrt(w));
      const double t = (z - 500.0) / 100.0;
      f += t * t / n;
    } else if (z < -500.0) {
      const double w = -500.0 + std::fmod(std::abs(z), 500.0);
      f -= w * std::sin(std::sqrt(500.0 - std::fmod(std::abs(z), 500.0)));
      const double t = (z + 500.0) / 100.0;
      f += t * t / n;
    } else {
      f -= z * std::sin(std::sqrt(std::abs(z)));
    }
  }
  return f + 4.189828872724338e+002 * n + 1.0;
}

inline double schaffer_f6_pair(double u, double v) {
  const double ss = u * u + v * v;
  const double s = std::sin(std::sqrt(ss));
  const double den = 1.0 + 0.001 * ss;
  return 0.5 + (s * s - 0.5) / (den * den);
}

inline double cec_expanded_schaffer(const Vec& x) {
  double f = 0.0;
  for (std::size_t i = 0; i + 1 < x.size(); ++i) f += schaffer_f6_pair(x[i], x[i + 1]);
  f += schaffer_f6_pair(x[x.size() - 1], x[0]);
  return f + 1.0;
}

inline double cec_happycat(const Vec& x, double scale) {
  const double n = static_cast<double>(x.size());
  double r2 = 0.0, sum_z = 0.0;
  for (double v : x) {
    const double z = v * scale - 1.0;
    r2 += z * z;
    sum_z += z;
  }
  return std::pow(std::abs(r2 - n), 0.25) + (0.5 * r2 + sum_z) / n + 0.5 + 1.0;
}

inline double scaled(const Vec& x, double scale, double (*fn)(const Vec&)) {
  Vec z(x.size());
  for (std::size_t k = 0; k < x.size(); ++k) z[k] = x[k] * scale;
  return fn(z);
}

}  // namespace detail

namespace detail {

inline BenchmarkFunction make(std::string id, std::string name, std::size_t d, double lo,
                              double hi, std::function<double(const Vec&)> base,
                              bool scalable) {
  BenchmarkFunction f;
  f.id = std::move(id);
  f.name = std::move(name);
  f.dimension = d;
  f.lower.assign(d, lo);
  f.upper.assign(d, hi);
  f.base = std::move(base);
  f.scalable = scalable;
  return f;
}

inline BenchmarkFunction build(const std::string& id, std::size_t d) {
  if (id == "TF1") {
    auto f = make(id, "sphere", d, -100.0, 100.0, sphere, true);
    f.optimum_value = 0.0;
    f.optimum_location = Vec(d, 0.0);
    return f;
  }
  if (id == "TF2") {
    auto f = make(id, "schwefel-2.22", d, -10.0, 10.0, schwefel_222, true);
    f.optimum_value = 0.0;
    f.optimum_location = Vec(d, 0.0);
    return f;
  }
  if (id == "TF3") {
    auto f = make(id, "schwefel-1.2", d, -100.0, 100.0, schwefel_12, true);
    f.optimum_value = 0.0;
    f.optimum_location = Vec(d, 0.0);
    return f;
  }
  if (id == "TF4") {
    auto f = make(id, "schwefel-2.21", d, -100.0, 100.0, schwefel_221, true);
    f.optimum_value = 0.0;
    f.optimum_location = Vec(d, 0.0);
    return f;
  }
  if (id == "TF5") {
    auto f = make(id, "rosenbrock", d, -30.0, 30.0, rosenbrock, true);
    f.optimum_value = 0.0;
    f.optimum_location = Vec(d, 1.0);
    return f;
  }
  if (id == "TF6") {
    auto f = make(id, "step", d, -100.0, 100.0, step, true);
    f.optimum_value = 0.0;
    f.optimum_location = Vec(d, 0.0);
    return f;
  }
  if (id == "TF7") {
    auto f = make(id, "quartic", d, -1.28, 1.28, quartic, true);
    f.optimum_value = 0.0;
    f.optimum_location = Vec(d, 0.0);
    return f;
  }
  if (id == "TF8") {
    auto f = make(id, "schwefel-2.26", d, -500.0, 500.0, schwefel_226, true);
    f.optimum_value = static_cast<double>(d) * kSchwefelVal;
    f.optimum_location = Vec(d, kSchwefelArg);
    return f;
  }
  if (id == "TF9") {
    auto f = make(id, "rastrigin", d, -5.12, 5.12, rastrigin, true);
    f.optimum_value = 0.0;
    f.optimum_location = Vec(d, 0.0);
    return f;
  }
  if (id == "TF10") {
    auto f = make(id, "ackley", d, -32.0, 32.0, ackley, true);
    f.optimum_value = 0.0;
    f.optimum_location = Vec(d, 0.0);
    return f;
  }
  if (id == "TF11") {
    auto f = make(id, "griewank", d, -600.0, 600.0, griewank, true);
    f.optimum_value = 0.0;
    f.optimum_location = Vec(d, 0.0);
    return f;
  }
  if (id == "TF12") {
    auto f = make(id, "penalized-1", d, -50.0, 50.0, penalized1, true);
    f.optimum_value = 0.0;
    f.optimum_location = Vec(d, -1.0);
    return f;
  }
  if (id == "TF13") {
    auto f = make(id, "penalized-2", d, -50.0, 50.0, penalized2, true);
    f.optimum_value = 0.0;
    f.optimum_location = Vec(d, 1.0);
    return f;
  }
  if (id == "TF14") {
    auto f = make(id, "foxholes", 2, -65.536, 65.536, foxholes, false);
    f.optimum_value = 0.9980038377944498;
    f.optimum_location = Vec{-31.97833337797648, -31.978334007870856};
    return f;
  }
  if (id == "TF15") {
    auto f = make(id, "kowalik", 4, -5.0, 5.0, kowalik, false);
    f.optimum_value = 0.0003074859878056051;
    f.optimum_location = Vec{0.19283345304274813, 0.19083624027597035,
                             0.12311729907598003, 0.13576599033984466};
    return f;
  }
  if (id == "TF16") {
    auto f = make(id, "six-hump-camel", 2, -5.0, 5.0, six_hump, false);
    f.optimum_value = -1.0316284534898774;
    f.optimum_location = Vec{0.08984200893527233, -0.712656403019058};
    return f;
  }
  if (id == "TF17") {
    BenchmarkFunction f;
    f.id = id;
    f.name = "branin";
    f.dimension = 2;
    f.lower = Vec{-5.0, 0.0};
    f.upper = Vec{10.0, 15.0};
    f.base = branin;
    f.optimum_value = 0.39788735772973816;
    f.optimum_location = Vec{kPi, 2.275};
    return f;
  }
  if (id == "TF18") {
    auto f = make(id, "goldstein-price", 2, -2.0, 2.0, goldstein_price, false);
    f.optimum_value = 3.0;
    f.optimum_location = Vec{0.0, -1.0};
    return f;
  }
  if (id == "TF19") {
    auto f = make(id, "hartmann-3", 3, 0.0, 1.0, hartmann3, false);
    f.optimum_value = -3.8627821478207554;
    f.optimum_location =
        Vec{0.11461432790029832, 0.5556488504420141, 0.8525469546889314};
    return f;
  }
  if (id == "hartmann6") {
    auto f = make(id, "hartmann-6", 6, 0.0, 1.0, hartmann6, false);
    f.optimum_value = -3.322368011415515;
    f.optimum_location = Vec{0.2016895128922905, 0.15001069323742897,
                             0.4768739767611768, 0.2753324307839508,
                             0.31165161848739587, 0.6573005349989142};
    return f;
  }
  if (id == "shekel5") {
    auto f = make(id, "shekel-5", 4, 0.0, 10.0, shekel5, false);
    f.optimum_value = -10.153199679058229;
    f.optimum_location = Vec{4.000037152376549, 4.000133278657566,
                             4.000037151057555, 4.000133277090425};
    return f;
  }
  if (id == "CEC01") {
    auto f = make(id, "storn-chebyshev", 9, -8192.0, 8192.0, cec_chebyshev, false);
    f.optimum_value = 1.0;
    f.optimum_location = Vec{128.0, 0.0, -256.0, 0.0, 160.0, 0.0, -32.0, 0.0, 1.0};
    return f;
  }
  if (id == "CEC02") {
    auto f = make(id, "inverse-hilbert", 16, -16384.0, 16384.0, cec_hilbert, false);
    f.optimum_value = 1.0;
    f.optimum_location = Vec{16.0,   -120.0, 240.0,   -140.0, -120.0, 1200.0,
                             -2700.0, 1680.0, 240.0,  -2700.0, 6480.0, -4200.0,
                             -140.0,  1680.0, -4200.0, 2800.0};
    return f;
  }
  if (id == "CEC03") {
    auto f = make(id, "lennard-jones", 18, -4.0, 4.0, cec_lennard_jones, false);
    f.optimum_value = 1.0;
    const double s = 0.7039468482580518;  // octahedron half-diagonal
    f.optimum_location = Vec{s, 0.0, 0.0, -s,  0.0, 0.0, 0.0, s,   0.0,
                             0.0, -s, 0.0, 0.0, 0.0, s,   0.0, 0.0, -s};
    return f;
  }
  if (id == "CEC04") {
    auto f = make(
        id, "rastrigin-scaled", 10, -100.0, 100.0,
        [](const Vec& x) { return scaled(x, 5.12 / 100.0, rastrigin) + 1.0; }, false);
    f.optimum_value = 1.0;
    f.optimum_location = Vec(10, 0.0);
    return f;
  }
  if (id == "CEC05") {
    auto f = make(
        id, "griewank-scaled", 10, -100.0, 100.0,
        [](const Vec& x) { return scaled(x, 600.0 / 100.0, griewank) + 1.0; }, false);
    f.optimum_value = 1.0;
    f.optimum_location = Vec(10, 0.0);
    return f;
  }
  if (id == "CEC06") {
    auto f = make(
        id, "weierstrass-scaled", 10, -100.0, 100.0,
        [](const Vec& x) { return cec_weierstrass(x, 0.5 / 100.0); }, false);
    f.optimum_value = 1.0;
    f.optimum_location = Vec(10, 0.0);
    return f;
  }
  if (id == "CEC07") {
    auto f = make(
        id, "mod-schwefel-scaled", 10, -100.0, 100.0,
        [](const Vec& x) { return cec_mod_schwefel(x, 1000.0 / 100.0); }, false);
    f.optimum_value = 1.0;
    f.optimum_location = Vec(10, 0.0);
    return f;
  }
  if (id == "CEC08") {
    auto f =
        make(id, "expanded-schaffer-f6", 10, -100.0, 100.0, cec_expanded_schaffer, false);
    f.optimum_value = 1.0;
    f.optimum_location = Vec(10, 0.0);
    return f;
  }
  if (id == "CEC09") {
    auto f = make(
        id, "happy-cat", 10, -100.0, 100.0,
        [](const Vec& x) { return cec_happycat(x, 5.0 / 100.0); }, false);
    f.optimum_value = 1.0;
    f.optimum_location = Vec(10, 0.0);
    return f;
  }
  if (id == "CEC10") {
    auto f = make(
        id, "ackley-cec", 10, -100.0, 100.0,
        [](const Vec& x) { return ackley(x) + 1.0; }, false);
    f.optimum_value = 1.0;
    f.optimum_location = Vec(10, 0.0);
    return f;
  }
  throw std::invalid_argument("unknown benchmark function: " + id);
}

inline std::size_t default_dimension(const std::string& id) {
  if (id == "TF14" || id == "TF16" || id == "TF17" || id == "TF18") return 2;
  if (id == "TF19") return 3;
  if (id == "TF15" || id == "shekel5") return 4;
  if (id == "hartmann6") return 6;
  if (id == "CEC01") return 9;
  if (id == "CEC02") return 16;
  if (id == "CEC03") return 18;
  if (id.rfind("CEC", 0) == 0) return 10;
  return 30;  // scalable classical functions
}

}  // namespace detail

inline BenchmarkFunction instantiate(const std::string& id,
                                     std::optional<std::size_t> dimension = {}) {
  const std::size_t def = detail::default_dimension(id);
  if (!dimension || *dimension == def) return detail::build(id, def);
  BenchmarkFunction probe = detail::build(id, def);  // validates the id
  if (!probe.scalable)
    throw std::invalid_argument("benchmark " + id + " has a fixed dimension");
  if (*dimension < 1) throw std::invalid_argument("dimension must be >= 1");
  return detail::build(id, *dimension);
}

struct Suite {
  std::string name;
  std::vector<BenchmarkFunction> functions;
};

inline Suite list_suite(const std::string& name) {
  Suite suite;
  suite.name = name;
  if (name == "classical") {
    for (int i = 1; i <= 19; ++i)
      suite.functions.push_back(instantiate("TF" + std::to_string(i)));
  } else if (name == "cec2019") {
    for (int i = 1; i <= 10; ++i) {
      char id[8];
      std::snprintf(id, sizeof id, "CEC%02d", i);
      suite.functions.push_back(instantiate(id));
    }
  } else {
    throw std::invalid_argument("unknown suite: " + name);
  }
  return suite;
}

inline std::vector<std::string> all_function_ids() {
  std::vector<std::string> ids;
  for (int i = 1; i <= 19; ++i) ids.push_back("TF" + std::to_string(i));
  ids.push_back("hartmann6");
  ids.push_back("shekel5");
  for (int i = 1; i <= 10; ++i) {
    char id[8];
    std::snprintf(id, sizeof id, "CEC%02d", i);
    ids.push_back(id);
  }
  return ids;
}

// Text format: first line d, then d shift values, then d rows of d rotation
// entries, whitespace-separated.
inline BenchmarkFunction load_transform(BenchmarkFunction f, const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open transform file: " + path);
  std::size_t d = 0;
  if (!(in >> d)) throw std::runtime_error("transform file: missing dimension");
  if (d != f.dimension)
    throw std::runtime_error("transform file: dimension " + std::to_string(d) +
                             " does not match function " + f.id);
  Transform tr;
  tr.shift.resize(d);
  for (auto& v : tr.shift)
    if (!(in >> v)) throw std::runtime_error("transform file: truncated shift");
  tr.rotation.assign(d, Vec(d));
  for (auto& row : tr.rotation)
    for (auto& v : row)
      if (!(in >> v)) throw std::runtime_error("transform file: truncated rotation");
  double trailing;
  if (in >> trailing) throw std::runtime_error("transform file: trailing data");
  // Orthonormality check: R^T R must be the identity within 1e-6.
  for (std::size_t i = 0; i < d; ++i) {
    for (std::size_t j = 0; j < d; ++j) {
      double dot = 0.0;
      for (std::size_t k = 0; k < d; ++k) dot += tr.rotation[k][i] * tr.rotation[k][j];
      const double expect = i == j ? 1.0 : 0.0;
      if (std::abs(dot - expect) > 1e-6)
        throw std::runtime_error("transform file: rotation is not orthonormal");
    }
  }
  f.transform = std::move(tr);
  return f;
}

}  // namespace fdo::bench
