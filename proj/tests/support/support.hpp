#pragma once

// Independent oracles shared by the unit and acceptance tests. Nothing here
// calls the library routine it is used to check.

#include <cstdint>
#include <cstdlib>
#include <numeric>
#include <set>
#include <vector>

#include "simlat/exactmath.hpp"
#include "simlat/lattice.hpp"

namespace test_support {

using simlat::Integer;
using simlat::Place;
using simlat::Rational;

inline long ipow(long base, int e) {
  long r = 1;
  while (e-- > 0) r *= base;
  return r;
}

inline long mod(long a, long m) { return ((a % m) + m) % m; }

/// (a, b)_p by searching for a primitive zero of z^2 - a x^2 - b y^2 modulo
/// p^e, e = 3 (odd p) or 5 (p = 2), after removing even powers of p from a
/// and b. With coefficients of p-valuation <= 1 a primitive solution at that
/// depth lifts by Hensel's lemma, and every p-adic zero gives one.
inline int brute_force_hilbert(long a, long b, long p) {
  while (a % (p * p) == 0) a /= p * p;
  while (b % (p * p) == 0) b /= p * p;
  const long m = ipow(p, p == 2 ? 5 : 3);
  std::vector<char> is_square(static_cast<std::size_t>(m), 0);
  for (long z = 0; z < m; ++z) is_square[static_cast<std::size_t>(z * z % m)] = 1;
  const long am = mod(a, m), bm = mod(b, m);
  // Scale a primitive solution so that x = 1, or x = 0 (mod p) and y = 1.
  // (If p divides x and y then p divides z, so z cannot be the unit.)
  for (long y = 0; y < m; ++y)
    if (is_square[static_cast<std::size_t>(mod(am + bm * (y * y % m), m))]) return 1;
  for (long x = 0; x < m; x += p)
    if (is_square[static_cast<std::size_t>(mod(am * (x * x % m) + bm, m))]) return 1;
  return -1;
}

inline std::vector<Place> places_of(const Integer& n) {
  std::vector<Place> out{Place::real(), Place::prime(Integer(2))};
  Integer m = abs(n);
  while (m % 2 == 0 && m != 0) m /= 2;
  for (long p = 3; Integer(p) * p <= m; p += 2) {
    if (m % p != 0) continue;
    out.push_back(Place::prime(Integer(p)));
    while (m % p == 0) m /= p;
  }
  if (m > 2) out.push_back(Place::prime(m));
  return out;
}

/// Product of (a, b)_v over the real place and every prime dividing 2ab.
inline int hilbert_product(const Integer& a, const Integer& b) {
  int prod = 1;
  for (const auto& place : places_of(a * b)) prod *= simlat::hilbert_symbol(Rational(a), Rational(b), place);
  return prod;
}

/// All nonzero integer vectors in the box |x_i| <= radius with x^T A x <= bound,
/// reduced to the representative whose first nonzero coordinate is positive.
inline std::set<std::vector<std::int64_t>> naive_short_vectors(const std::vector<std::vector<std::int64_t>>& gram,
                                                               std::int64_t bound, std::int64_t radius) {
  const std::size_t n = gram.size();
  std::set<std::vector<std::int64_t>> out;
  std::vector<std::int64_t> x(n, -radius);
  while (true) {
    std::int64_t q = 0;
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) q += x[i] * gram[i][j] * x[j];
    bool positive = false, zero = true;
    for (auto v : x)
      if (v != 0) {
        positive = v > 0;
        zero = false;
        break;
      }
    if (!zero && positive && q <= bound) out.insert(x);
    std::size_t k = 0;
    while (k < n && ++x[k] > radius) x[k++] = -radius;
    if (k == n) break;
  }
  return out;
}

/// B^T A B = c A and |det B| = c^{n/2}, recomputed from scratch.
inline bool independently_valid(const simlat::SimilarityMap& map) {
  const auto& a = map.lattice().gram();
  const auto& b = map.matrix();
  const std::size_t n = a.rows();
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      Rational s = 0;
      for (std::size_t k = 0; k < n; ++k)
        for (std::size_t l = 0; l < n; ++l) s += Rational(b(k, i)) * a(k, l) * Rational(b(l, j));
      if (s != map.norm() * a(i, j)) return false;
    }
  // |det B|^2 = c^n.
  Integer det = simlat::determinant(b);
  Rational lhs = Rational(det * det), rhs = 1;
  for (std::size_t i = 0; i < n; ++i) rhs *= map.norm();
  return lhs == rhs;
}

/// Is c = r^2 + k r s + l s^2 for some integers r, s (k in {0, -1, 1}, l in {1, -1})?
/// Brute force over a box large enough for the definite forms; for the
/// indefinite r^2 + rs - s^2 the box |r|, |s| <= 2c + 2 is used.
inline bool binary_form_represents(long c, long k, long l) {
  const long box = 2 * c + 2;
  for (long r = -box; r <= box; ++r)
    for (long s = -box; s <= box; ++s)
      if (r * r + k * r * s + l * s * s == c) return true;
  return false;
}

/// Every prime factor of c is = 1 (mod 3), by trial division.
inline bool product_of_primes_1_mod_3(long c) {
  for (long p = 2; p * p <= c; ++p) {
    if (c % p != 0) continue;
    if (p % 3 != 1) return false;
    while (c % p == 0) c /= p;
  }
  return c == 1 || c % 3 == 1;
}

}  // namespace test_support
