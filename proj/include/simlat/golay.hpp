#pragma once

// The hexacode, the binary Golay code and the Leech lattice in MOG
// coordinates. A MOG array has 4 rows and 6 columns; ambient coordinate
// row * 6 + col. Rows carry the F4 labels 0, 1, w, w-bar from top to bottom.

#include <array>
#include <cstdint>
#include <span>
#include <vector>

namespace simlat {

inline constexpr std::size_t kMogRows = 4;
inline constexpr std::size_t kMogCols = 6;

constexpr std::size_t mog_index(std::size_t row, std::size_t col) { return row * kMogCols + col; }

/// F4 encoded as 0, 1, 2 = w, 3 = w-bar; addition is XOR.
std::uint8_t f4_mul(std::uint8_t a, std::uint8_t b);

/// The 64 words (a, b, c, f(1), f(w), f(w-bar)) with f(x) = a x^2 + b x + c.
const std::vector<std::array<std::uint8_t, 6>>& hexacode();

/// The 4096 Golay codewords as 24-bit masks (bit mog_index(r, c)). A 4x6
/// array is a codeword iff every column has the parity of the top row and the
/// column scores (sum of the labels of the set rows) form a hexacode word.
const std::vector<std::uint32_t>& golay_code();
bool is_golay_codeword(std::uint32_t mask);

/// Spanning set of sqrt(8) * Leech: 2 * octads, (4, +-4, 0^22) and (-3, 1^23).
std::vector<std::vector<std::int64_t>> leech_spanning_vectors();

/// Membership in sqrt(8) * Leech: all coordinates = m (mod 2), the sum = 4m
/// (mod 8), and each residue class mod 4 is supported on a codeword.
bool is_scaled_leech_vector(std::span<const std::int64_t> x);

}  // namespace simlat
