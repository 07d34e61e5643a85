#pragma once

#include <algorithm>
#include <bit>
#include <cmath>
#include <cstddef>
#include <cstdint>
#include <numeric>
#include <stdexcept>
#include <vector>

namespace fdo::stats {

struct SampleStats {
  std::size_t n = 0;
  double avg = 0.0;
  double stddev = 0.0;  // sample flavor, n - 1 denominator; 0 by convention for n = 1
  double min = 0.0;
  double max = 0.0;
  double median = 0.0;
};

inline SampleStats summarize(std::vector<double> values) {
  if (values.empty()) throw std::invalid_argument("summarize: empty sample");
  std::sort(values.begin(), values.end());
  SampleStats s;
  s.n = values.size();
  s.min = values.front();
  s.max = values.back();
  const std::size_t mid = s.n / 2;
  s.median = (s.n % 2 == 1) ? values[mid] : 0.5 * (values[mid - 1] + values[mid]);
  s.avg = std::accumulate(values.begin(), values.end(), 0.0) / static_cast<double>(s.n);
  if (s.n > 1) {
    double ss = 0.0;
    for (double v : values) {
      const double d = v - s.avg;
      ss += d * d;
    }
    s.stddev = std::sqrt(ss / static_cast<double>(s.n - 1));
  }
  return s;
}

// 1-based ranks over the pooled sample, ties sharing their average rank.
inline std::vector<double> midranks(const std::vector<double>& values) {
  const std::size_t n = values.size();
  std::vector<std::size_t> order(n);
  std::iota(order.begin(), order.end(), std::size_t{0});
  std::sort(order.begin(), order.end(),
            [&](std::size_t a, std::size_t b) { return values[a] < values[b]; });
  std::vector<double> ranks(n);
  std::size_t i = 0;
  while (i < n) {
    std::size_t j = i;
    while (j + 1 < n && values[order[j + 1]] == values[order[i]]) ++j;
    const double shared = 0.5 * static_cast<double>(i + j) + 1.0;
    for (std::size_t k = i; k <= j; ++k) ranks[order[k]] = shared;
    i = j + 1;
  }
  return ranks;
}

struct WilcoxonResult {
  double u = 0.0;  // Mann-Whitney U for the first sample
  double p_two_sided = 1.0;
  bool exact = false;
};

// Two-sided rank-sum test. Small pooled samples are solved by enumerating all
// rank splits; larger ones use the normal approximation with tie and
// continuity corrections.
inline WilcoxonResult wilcoxon_rank_sum(const std::vector<double>& a,
                                        const std::vector<double>& b) {
  if (a.size() < 3 || b.size() < 3)
    throw std::invalid_argument("wilcoxon_rank_sum: need at least 3 values per sample");
  const std::size_t n1 = a.size();
  const std::size_t n2 = b.size();
  const std::size_t n = n1 + n2;

  std::vector<double> pooled;
  pooled.reserve(n);
  pooled.insert(pooled.end(), a.begin(), a.end());
  pooled.insert(pooled.end(), b.begin(), b.end());
  const std::vector<double> ranks = midranks(pooled);

  double r1 = 0.0;
  for (std::size_t i = 0; i < n1; ++i) r1 += ranks[i];

  WilcoxonResult res;
  res.u = r1 - 0.5 * static_cast<double>(n1) * static_cast<double>(n1 + 1);

  if (n <= 12) {
    res.exact = true;
    // Midranks are multiples of 1/2, so subset sums compare exactly.
    const double mu = 0.5 * static_cast<double>(n1) * static_cast<double>(n + 1);
    const double observed = std::abs(r1 - mu);
    std::uint64_t total = 0;
    std::uint64_t extreme = 0;
    for (std::uint32_t mask = 0; mask < (1u << n); ++mask) {
      if (std::popcount(mask) != static_cast<int>(n1)) continue;
      ++total;
      double sum = 0.0;
      for (std::size_t i = 0; i < n; ++i)
        if (mask & (1u << i)) sum += ranks[i];
      if (std::abs(sum - mu) >= observed) ++extreme;
    }
    res.p_two_sided = static_cast<double>(extreme) / static_cast<double>(total);
    return res;
  }

  const double mu = 0.5 * static_cast<double>(n1) * static_cast<double>(n2);
  double tie_sum = 0.0;
  {
    std::vector<double> sorted = pooled;
    std::sort(sorted.begin(), sorted.end());
    std::size_t i = 0;
    while (i < n) {
      std::size_t j = i;
      while (j + 1 < n && sorted[j + 1] == sorted[i]) ++j;
      const double t = static_cast<double>(j - i + 1);
      tie_sum += t * t * t - t;
      i = j + 1;
    }
  }
  const double dn = static_cast<double>(n);
  const double variance = static_cast<double>(n1) * static_cast<double>(n2) / 12.0 *
                          ((dn + 1.0) - tie_sum / (dn * (dn - 1.0)));
  if (!(variance > 0.0)) {
    res.p_two_sided = 1.0;  // every pooled value tied
    return res;
  }
  const double diff = res.u - mu;
  double z = 0.0;
  if (diff > 0.0)
    z = (diff - 0.5) / std::sqrt(variance);
  else if (diff < 0.0)
    z = (diff + 0.5) / std::sqrt(variance);
  res.p_two_sided = std::min(1.0, std::erfc(std::abs(z) / std::sqrt(2.0)));
  return res;
}

}  // namespace fdo::stats
