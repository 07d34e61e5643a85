#pragma once

#include <array>
#include <cstdint>

// Primitive polynomials and initial direction numbers for the Sobol
// sequence, first 79 dimensions past the van der Corput dimension.
// Data: Joe & Kuo, "Constructing Sobol sequences with better
// two-dimensional projections" (new-joe-kuo-6 table).

namespace fdo::detail {

struct SobolRow {
  std::uint32_t poly;    // full polynomial bits, leading and trailing 1 included
  std::uint32_t degree;
  std::array<std::uint32_t, 9> m;  // m_1..m_degree, zero padded
};

inline constexpr std::array<SobolRow, 79> kSobolRows = {{
    {3, 1, {{1, 0, 0, 0, 0, 0, 0, 0, 0}}},
    {7, 2, {{1, 3, 0, 0, 0, 0, 0, 0, 0}}},
    {11, 3, {{1, 3, 1, 0, 0, 0, 0, 0, 0}}},
    {13, 3, {{1, 1, 1, 0, 0, 0, 0, 0, 0}}},
    {19, 4, {{1, 1, 3, 3, 0, 0, 0, 0, 0}}},
    {25, 4, {{1, 3, 5, 13, 0, 0, 0, 0, 0}}},
    {37, 5, {{1, 1, 5, 5, 17, 0, 0, 0, 0}}},
    {41, 5, {{1, 1, 5, 5, 5, 0, 0, 0, 0}}},
    {47, 5, {{1, 1, 7, 11, 19, 0, 0, 0, 0}}},
    {55, 5, {{1, 1, 5, 1, 1, 0, 0, 0, 0}}},
    {59, 5, {{1, 1, 1, 3, 11, 0, 0, 0, 0}}},
    {61, 5, {{1, 3, 5, 5, 31, 0, 0, 0, 0}}},
    {67, 6, {{1, 3, 3, 9, 7, 49, 0, 0, 0}}},
    {91, 6, {{1, 1, 1, 15, 21, 21, 0, 0, 0}}},
    {97, 6, {{1, 3, 1, 13, 27, 49, 0, 0, 0}}},
    {103, 6, {{1, 1, 1, 15, 7, 5, 0, 0, 0}}},
    {109, 6, {{1, 3, 1, 15, 13, 25, 0, 0, 0}}},
    {115, 6, {{1, 1, 5, 5, 19, 61, 0, 0, 0}}},
    {131, 7, {{1, 3, 7, 11, 23, 15, 103, 0, 0}}},
    {137, 7, {{1, 3, 7, 13, 13, 15, 69, 0, 0}}},
    {143, 7, {{1, 1, 3, 13, 7, 35, 63, 0, 0}}},
    {145, 7, {{1, 3, 5, 9, 1, 25, 53, 0, 0}}},
    {157, 7, {{1, 3, 1, 13, 9, 35, 107, 0, 0}}},
    {167, 7, {{1, 3, 1, 5, 27, 61, 31, 0, 0}}},
    {171, 7, {{1, 1, 5, 11, 19, 41, 61, 0, 0}}},
    {185, 7, {{1, 3, 5, 3, 3, 13, 69, 0, 0}}},
    {191, 7, {{1, 1, 7, 13, 1, 19, 1, 0, 0}}},
    {193, 7, {{1, 3, 7, 5, 13, 19, 59, 0, 0}}},
    {203, 7, {{1, 1, 3, 9, 25, 29, 41, 0, 0}}},
    {211, 7, {{1, 3, 5, 13, 23, 1, 55, 0, 0}}},
    {213, 7, {{1, 3, 7, 3, 13, 59, 17, 0, 0}}},
    {229, 7, {{1, 3, 1, 3, 5, 53, 69, 0, 0}}},
    {239, 7, {{1, 1, 5, 5, 23, 33, 13, 0, 0}}},
    {241, 7, {{1, 1, 7, 7, 1, 61, 123, 0, 0}}},
    {247, 7, {{1, 1, 7, 9, 13, 61, 49, 0, 0}}},
    {253, 7, {{1, 3, 3, 5, 3, 55, 33, 0, 0}}},
    {285, 8, {{1, 3, 1, 15, 31, 13, 49, 245, 0}}},
    {299, 8, {{1, 3, 5, 15, 31, 59, 63, 97, 0}}},
    {301, 8, {{1, 3, 1, 11, 11, 11, 77, 249, 0}}},
    {333, 8, {{1, 3, 1, 11, 27, 43, 71, 9, 0}}},
    {351, 8, {{1, 1, 7, 15, 21, 11, 81, 45, 0}}},
    {355, 8, {{1, 3, 7, 3, 25, 31, 65, 79, 0}}},
    {357, 8, {{1, 3, 1, 1, 19, 11, 3, 205, 0}}},
    {361, 8, {{1, 1, 5, 9, 19, 21, 29, 157, 0}}},
    {369, 8, {{1, 3, 7, 11, 1, 33, 89, 185, 0}}},
    {391, 8, {{1, 3, 3, 3, 15, 9, 79, 71, 0}}},
    {397, 8, {{1, 3, 7, 11, 15, 39, 119, 27, 0}}},
    {425, 8, {{1, 1, 3, 1, 11, 31, 97, 225, 0}}},
    {451, 8, {{1, 1, 1, 3, 23, 43, 57, 177, 0}}},
    {463, 8, {{1, 3, 7, 7, 17, 17, 37, 71, 0}}},
    {487, 8, {{1, 3, 1, 5, 27, 63, 123, 213, 0}}},
    {501, 8, {{1, 1, 3, 5, 11, 43, 53, 133, 0}}},
    {529, 9, {{1, 3, 5, 5, 29, 17, 47, 173, 479}}},
    {539, 9, {{1, 3, 3, 11, 3, 1, 109, 9, 69}}},
    {545, 9, {{1, 1, 1, 5, 17, 39, 23, 5, 343}}},
    {557, 9, {{1, 3, 1, 5, 25, 15, 31, 103, 499}}},
    {563, 9, {{1, 1, 1, 11, 11, 17, 63, 105, 183}}},
    {601, 9, {{1, 1, 5, 11, 9, 29, 97, 231, 363}}},
    {607, 9, {{1, 1, 5, 15, 19, 45, 41, 7, 383}}},
    {617, 9, {{1, 3, 7, 7, 31, 19, 83, 137, 221}}},
    {623, 9, {{1, 1, 1, 3, 23, 15, 111, 223, 83}}},
    {631, 9, {{1, 1, 5, 13, 31, 15, 55, 25, 161}}},
    {637, 9, {{1, 1, 3, 13, 25, 47, 39, 87, 257}}},
    {647, 9, {{1, 1, 1, 11, 21, 53, 125, 249, 293}}},
    {661, 9, {{1, 1, 7, 11, 11, 7, 57, 79, 323}}},
    {675, 9, {{1, 1, 5, 5, 17, 13, 81, 3, 131}}},
    {677, 9, {{1, 1, 7, 13, 23, 7, 65, 251, 475}}},
    {687, 9, {{1, 3, 5, 1, 9, 43, 3, 149, 11}}},
    {695, 9, {{1, 1, 3, 13, 31, 13, 13, 255, 487}}},
    {701, 9, {{1, 3, 3, 1, 5, 63, 89, 91, 127}}},
    {719, 9, {{1, 1, 3, 3, 1, 19, 123, 127, 237}}},
    {721, 9, {{1, 1, 5, 7, 23, 31, 37, 243, 289}}},
    {731, 9, {{1, 1, 5, 11, 17, 53, 117, 183, 491}}},
    {757, 9, {{1, 1, 1, 5, 1, 13, 13, 209, 345}}},
    {761, 9, {{1, 1, 3, 15, 1, 57, 115, 7, 33}}},
    {787, 9, {{1, 3, 1, 11, 7, 43, 81, 207, 175}}},
    {789, 9, {{1, 3, 1, 1, 15, 27, 63, 255, 49}}},
    {799, 9, {{1, 3, 5, 3, 27, 61, 105, 171, 305}}},
    {803, 9, {{1, 1, 5, 3, 1, 3, 57, 249, 149}}},
}};

}  // namespace fdo::detail
