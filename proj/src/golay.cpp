#include "simlat/golay.hpp"

#include <algorithm>
#include <bit>

#include "simlat/errors.hpp"

namespace simlat {

namespace {

constexpr std::uint8_t kW = 2;
constexpr std::uint8_t kWbar = 3;
constexpr std::uint8_t kRowLabel[kMogRows] = {0, 1, kW, kWbar};

std::uint32_t column_mask(std::size_t col, unsigned rows) {
  std::uint32_t m = 0;
  for (std::size_t r = 0; r < kMogRows; ++r)
    if (rows & (1u << r)) m |= 1u << mog_index(r, col);
  return m;
}

std::vector<std::uint32_t> build_golay() {
  std::vector<std::uint32_t> words;
  words.reserve(4096);
  for (unsigned top_parity = 0; top_parity < 2; ++top_parity) {
    for (const auto& h : hexacode()) {
      // Column choices: 4-bit patterns with the required parity and score.
      std::array<std::vector<unsigned>, kMogCols> choices;
      for (std::size_t c = 0; c < kMogCols; ++c) {
        for (unsigned rows = 0; rows < 16; ++rows) {
          if (static_cast<unsigned>(std::popcount(rows) % 2) != top_parity) continue;
          std::uint8_t score = 0;
          for (std::size_t r = 0; r < kMogRows; ++r)
            if (rows & (1u << r)) score ^= kRowLabel[r];
          if (score == h[c]) choices[c].push_back(rows);
        }
      }
      std::array<std::size_t, kMogCols> pick{};
      while (true) {
        unsigned top = 0;
        std::uint32_t mask = 0;
        for (std::size_t c = 0; c < kMogCols; ++c) {
          const unsigned rows = choices[c][pick[c]];
          top += rows & 1u;
          mask |= column_mask(c, rows);
        }
        if (top % 2 == top_parity) words.push_back(mask);
        std::size_t c = 0;
        while (c < kMogCols && ++pick[c] == choices[c].size()) pick[c++] = 0;
        if (c == kMogCols) break;
      }
    }
  }
  std::sort(words.begin(), words.end());
  words.erase(std::unique(words.begin(), words.end()), words.end());
  if (words.size() != 4096) throw InternalError("Golay code construction produced " + std::to_string(words.size()));
  return words;
}

}  // namespace

std::uint8_t f4_mul(std::uint8_t a, std::uint8_t b) {
  if (a == 0 || b == 0) return 0;
  // Nonzero elements 1, w, w-bar are w^0, w^1, w^2.
  const unsigned e = ((a - 1u) + (b - 1u)) % 3u;
  return static_cast<std::uint8_t>(e + 1u);
}

const std::vector<std::array<std::uint8_t, 6>>& hexacode() {
  static const std::vector<std::array<std::uint8_t, 6>> words = [] {
    std::vector<std::array<std::uint8_t, 6>> out;
    const std::uint8_t points[3] = {1, kW, kWbar};
    for (std::uint8_t a = 0; a < 4; ++a)
      for (std::uint8_t b = 0; b < 4; ++b)
        for (std::uint8_t c = 0; c < 4; ++c) {
          std::array<std::uint8_t, 6> w{a, b, c, 0, 0, 0};
          for (std::size_t k = 0; k < 3; ++k) {
            const std::uint8_t x = points[k];
            w[3 + k] = f4_mul(a, f4_mul(x, x)) ^ f4_mul(b, x) ^ c;
          }
          out.push_back(w);
        }
    return out;
  }();
  return words;
}

const std::vector<std::uint32_t>& golay_code() {
  static const std::vector<std::uint32_t> words = build_golay();
  return words;
}

bool is_golay_codeword(std::uint32_t mask) {
  const auto& code = golay_code();
  return std::binary_search(code.begin(), code.end(), mask);
}

std::vector<std::vector<std::int64_t>> leech_spanning_vectors() {
  constexpr std::size_t n = kMogRows * kMogCols;
  std::vector<std::vector<std::int64_t>> out;
  for (std::uint32_t w : golay_code()) {
    if (std::popcount(w) != 8) continue;
    std::vector<std::int64_t> v(n, 0);
    for (std::size_t i = 0; i < n; ++i)
      if (w & (1u << i)) v[i] = 2;
    out.push_back(std::move(v));
  }
  for (std::size_t i = 1; i < n; ++i) {
    for (int sign : {1, -1}) {
      std::vector<std::int64_t> v(n, 0);
      v[0] = 4;
      v[i] = 4 * sign;
      out.push_back(std::move(v));
    }
  }
  std::vector<std::int64_t> v(n, 1);
  v[0] = -3;
  out.push_back(std::move(v));
  return out;
}

bool is_scaled_leech_vector(std::span<const std::int64_t> x) {
  if (x.size() != kMogRows * kMogCols) throw InvalidInput("Leech vectors have 24 coordinates");
  auto mod = [](std::int64_t a, std::int64_t m) { return ((a % m) + m) % m; };
  const std::int64_t m = mod(x[0], 2);
  std::int64_t sum = 0;
  for (auto v : x) {
    if (mod(v, 2) != m) return false;
    sum += v;
  }
  if (mod(sum, 8) != 4 * m) return false;
  for (std::int64_t k = 0; k < 4; ++k) {
    std::uint32_t mask = 0;
    for (std::size_t i = 0; i < x.size(); ++i)
      if (mod(x[i], 4) == k) mask |= 1u << i;
    if (mask != 0 && !is_golay_codeword(mask)) return false;
  }
  return true;
}

}  // namespace simlat
