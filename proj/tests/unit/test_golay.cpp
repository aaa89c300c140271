#include <doctest.h>

#include <bit>
#include <map>
#include <set>

#include "simlat/golay.hpp"

using namespace simlat;

TEST_CASE("F4 multiplication") {
  for (std::uint8_t a = 0; a < 4; ++a) {
    CHECK(f4_mul(a, 1) == a);
    CHECK(f4_mul(a, 0) == 0);
    for (std::uint8_t b = 0; b < 4; ++b) CHECK(f4_mul(a, b) == f4_mul(b, a));
  }
  CHECK(f4_mul(2, 2) == 3);  // w^2 = w-bar
  CHECK(f4_mul(2, 3) == 1);
}

TEST_CASE("hexacode") {
  const auto& h = hexacode();
  REQUIRE(h.size() == 64);
  std::set<std::array<std::uint8_t, 6>> distinct(h.begin(), h.end());
  CHECK(distinct.size() == 64);
  std::size_t min_weight = 6;
  for (const auto& w : h) {
    std::size_t weight = 0;
    for (auto x : w) weight += x != 0;
    if (weight) min_weight = std::min(min_weight, weight);
  }
  CHECK(min_weight == 4);
}

TEST_CASE("Golay code") {
  const auto& code = golay_code();
  REQUIRE(code.size() == 4096);
  std::map<int, int> weights;
  for (auto w : code) ++weights[std::popcount(w)];
  CHECK(weights == std::map<int, int>{{0, 1}, {8, 759}, {12, 2576}, {16, 759}, {24, 1}});
  // Closed under addition (spot check).
  for (std::size_t i = 0; i < code.size(); i += 97)
    for (std::size_t j = 0; j < code.size(); j += 131) CHECK(is_golay_codeword(code[i] ^ code[j]));
  CHECK_FALSE(is_golay_codeword(1u));
  CHECK_FALSE(is_golay_codeword(0x7Fu));
}

TEST_CASE("scaled Leech membership") {
  const auto span = leech_spanning_vectors();
  CHECK(span.size() >= 24);
  for (const auto& v : span) CHECK(is_scaled_leech_vector(v));

  std::vector<std::int64_t> x(24, 0);
  x[0] = 4;
  x[1] = 4;
  CHECK(is_scaled_leech_vector(x));
  x[1] = 2;
  CHECK_FALSE(is_scaled_leech_vector(x));
  x.assign(24, 1);
  x[0] = -3;
  CHECK(is_scaled_leech_vector(x));
  x[0] = 3;  // sum 26, not = 4 (mod 8)
  CHECK_FALSE(is_scaled_leech_vector(x));
  x.assign(24, 2);  // all-twos: sum 48 = 0 (mod 8) and m = 0, codeword all-ones
  CHECK(is_scaled_leech_vector(x));
}
