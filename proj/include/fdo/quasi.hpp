#pragma once

#include <array>
#include <cstdint>
#include <stdexcept>
#include <vector>

#include "fdo/sobol_directions.hpp"

namespace fdo {

enum class QuasiKind { sobol, halton };

namespace detail {

// First 100 primes, enough Halton bases for every dimension we instantiate.
inline constexpr std::array<std::uint32_t, 100> kPrimes = {
    2,   3,   5,   7,   11,  13,  17,  19,  23,  29,  31,  37,  41,  43,
    47,  53,  59,  61,  67,  71,  73,  79,  83,  89,  97,  101, 103, 107,
    109, 113, 127, 131, 137, 139, 149, 151, 157, 163, 167, 173, 179, 181,
    191, 193, 197, 199, 211, 223, 227, 229, 233, 239, 241, 251, 257, 263,
    269, 271, 277, 281, 283, 293, 307, 311, 313, 317, 331, 337, 347, 349,
    353, 359, 367, 373, 379, 383, 389, 397, 401, 409, 419, 421, 431, 433,
    439, 443, 449, 457, 461, 463, 467, 479, 487, 491, 499, 503, 509, 521,
    523, 541};

inline double radical_inverse(std::uint32_t base, std::uint64_t n) {
  double inv_base = 1.0 / base;
  double scale = inv_base;
  double value = 0.0;
  while (n > 0) {
    value += static_cast<double>(n % base) * scale;
    n /= base;
    scale *= inv_base;
  }
  return value;
}

}  // namespace detail

// Low-discrepancy point source. Indexing starts at 1; the Sobol origin point
// at index 0 is skipped deliberately.
class QuasiSequence {
 public:
  QuasiSequence(QuasiKind kind, std::size_t dimension) : kind_(kind), dim_(dimension) {
    if (dimension < 1) throw std::invalid_argument("quasi sequence: dimension must be >= 1");
    if (kind == QuasiKind::sobol) {
      if (dimension > sobol_max_dimension())
        throw std::invalid_argument("sobol: dimension exceeds the direction-number table");
      init_sobol();
    } else {
      if (dimension > detail::kPrimes.size())
        throw std::invalid_argument("halton: dimension exceeds the prime-base table");
    }
  }

  static constexpr std::size_t sobol_max_dimension() {
    return detail::kSobolRows.size() + 1;
  }

  std::vector<double> next() {
    const std::uint64_t n = index_++;
    std::vector<double> point(dim_);
    if (kind_ == QuasiKind::sobol) {
      for (std::size_t j = 0; j < dim_; ++j) {
        // Plain binary-digit construction (not the Gray-code shortcut), so
        // point k is the canonical Sobol point of index k for any k.
        std::uint32_t x = 0;
        std::uint64_t bits = n;
        std::size_t b = 0;
        while (bits) {
          if (bits & 1) x ^= dirs_[j][b];
          bits >>= 1;
          ++b;
        }
        point[j] = static_cast<double>(x) * 0x1.0p-32;
      }
    } else {
      for (std::size_t j = 0; j < dim_; ++j)
        point[j] = detail::radical_inverse(detail::kPrimes[j], n);
    }
    return point;
  }

  QuasiKind kind() const { return kind_; }
  std::size_t dimension() const { return dim_; }
  std::uint64_t next_index() const { return index_; }

 private:
  void init_sobol() {
    dirs_.assign(dim_, std::array<std::uint32_t, 32>{});
    // First coordinate is the van der Corput sequence in base 2.
    for (std::size_t k = 0; k < 32; ++k) dirs_[0][k] = 1u << (31 - k);
    for (std::size_t j = 1; j < dim_; ++j) {
      const detail::SobolRow& row = detail::kSobolRows[j - 1];
      const std::uint32_t s = row.degree;
      for (std::uint32_t k = 0; k < s; ++k)
        dirs_[j][k] = row.m[k] << (31 - k);
      for (std::uint32_t k = s; k < 32; ++k) {
        std::uint32_t v = dirs_[j][k - s] ^ (dirs_[j][k - s] >> s);
        for (std::uint32_t t = 1; t < s; ++t)
          if ((row.poly >> (s - t)) & 1u) v ^= dirs_[j][k - t];
        dirs_[j][k] = v;
      }
    }
  }

  QuasiKind kind_;
  std::size_t dim_;
  std::uint64_t index_ = 1;
  std::vector<std::array<std::uint32_t, 32>> dirs_;
};

}  // namespace fdo
