#pragma once

#include <array>
#include <string>

#include "simlat/exactmath.hpp"
#include "simlat/matrix.hpp"

namespace simlat {

/// r + s i + t j + u k with components in (1/2)Z. Stored as doubled integers.
class Quaternion {
 public:
  Quaternion() = default;
  Quaternion(long r, long s, long t, long u);

  /// Throws InvalidInput unless every denominator divides 2.
  static Quaternion from_rationals(const Rational& r, const Rational& s, const Rational& t, const Rational& u);
  /// Components are halves of the given integers.
  static Quaternion from_doubled(const Integer& r2, const Integer& s2, const Integer& t2, const Integer& u2);

  Rational component(std::size_t i) const;
  std::array<Rational, 4> components() const;
  bool is_zero() const;
  /// All components integral, or all half-odd-integral.
  bool is_hurwitz() const;
  /// All components integral.
  bool is_lipschitz() const;
  Rational norm() const;
  Quaternion conjugate() const;

  friend Quaternion operator*(const Quaternion& a, const Quaternion& b);
  friend bool operator==(const Quaternion& a, const Quaternion& b) = default;

  std::string to_string() const;

 private:
  std::array<Integer, 4> doubled_{};
};

/// The matrix M with x * q = M x in the algebra with basis 1, i, j, ij where
/// i^2 = alpha and j^2 = beta. alpha = beta = -1 gives the Hamilton quaternions.
RatMatrix right_multiplication_matrix(const std::array<Rational, 4>& q, const Rational& alpha = Rational(-1),
                                      const Rational& beta = Rational(-1));

/// Product in the same algebra.
std::array<Rational, 4> algebra_product(const std::array<Rational, 4>& x, const std::array<Rational, 4>& y,
                                        const Rational& alpha, const Rational& beta);

}  // namespace simlat
