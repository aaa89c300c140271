#pragma once

// Exact integer and rational arithmetic: factorization, p-adic valuations,
// Legendre and Hilbert symbols.

#include <gmpxx.h>

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "simlat/errors.hpp"

namespace simlat {

using Integer = mpz_class;
using Rational = mpq_class;

/// Builds num/den in lowest terms with a positive denominator.
Rational make_rational(const Integer& num, const Integer& den);

/// Parses `p` or `p/q` (optional sign on p).
Rational parse_rational(std::string_view text);
std::string to_string(const Rational& r);
std::string to_string(const Integer& n);

/// Converts to int64, throwing InternalError when the value does not fit.
std::int64_t to_int64(const Integer& n);

struct PrimePower {
  Integer prime;
  int exponent = 0;

  friend bool operator==(const PrimePower&, const PrimePower&) = default;
};

struct Factorization {
  int sign = 1;
  std::vector<PrimePower> factors;  // primes strictly increasing

  Integer value() const;
  int exponent_of(const Integer& p) const;
};

/// Largest bound used for the trial-division stage of factorize().
inline constexpr std::uint32_t kTrialDivisionBound = 1'000'000;

/// Trial division to kTrialDivisionBound, then Pollard rho. Throws
/// InvalidInput for zero and InternalError if the cofactor cannot be split.
Factorization factorize(const Integer& n);

bool is_prime(const Integer& n);

/// v_p(r) for nonzero r; may be negative.
int valuation(const Rational& r, const Integer& p);
int valuation(const Integer& n, const Integer& p);

/// Legendre symbol (a/p) for an odd prime p.
int legendre_symbol(const Integer& a, const Integer& p);

/// A place of Q: either a finite prime or the real (infinite) place.
class Place {
 public:
  static Place real() { return Place(); }
  static Place prime(Integer p);

  bool is_real() const { return real_; }
  /// Only meaningful for finite places.
  const Integer& p() const { return prime_; }
  std::string to_string() const;

  friend bool operator==(const Place& a, const Place& b) {
    return a.real_ == b.real_ && (a.real_ || a.prime_ == b.prime_);
  }

 private:
  Place() = default;
  bool real_ = true;
  Integer prime_ = 0;
};

/// Hilbert symbol (a, b)_v in {-1, +1}: +1 iff z^2 = a x^2 + b y^2 has a
/// nontrivial solution over Q_v.
int hilbert_symbol(const Rational& a, const Rational& b, const Place& place);

bool is_perfect_square(const Integer& n);
Integer isqrt(const Integer& n);

/// Integer of the same square class as r (num * den).
Integer square_class_representative(const Rational& r);

}  // namespace simlat
