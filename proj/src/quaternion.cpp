#include "simlat/quaternion.hpp"

#include "simlat/errors.hpp"

namespace simlat {

Quaternion::Quaternion(long r, long s, long t, long u)
    : doubled_{Integer(r) * 2, Integer(s) * 2, Integer(t) * 2, Integer(u) * 2} {}

Quaternion Quaternion::from_rationals(const Rational& r, const Rational& s, const Rational& t, const Rational& u) {
  Quaternion q;
  const Rational* parts[4] = {&r, &s, &t, &u};
  for (std::size_t i = 0; i < 4; ++i) {
    Rational twice = *parts[i] * 2;
    if (twice.get_den() != 1) throw InvalidInput("quaternion components must lie in (1/2)Z, got " + simlat::to_string(*parts[i]));
    q.doubled_[i] = twice.get_num();
  }
  return q;
}

Quaternion Quaternion::from_doubled(const Integer& r2, const Integer& s2, const Integer& t2, const Integer& u2) {
  Quaternion q;
  q.doubled_ = {r2, s2, t2, u2};
  return q;
}

Rational Quaternion::component(std::size_t i) const {
  if (i >= 4) throw InvalidInput("quaternion component index out of range");
  return make_rational(doubled_[i], Integer(2));
}

std::array<Rational, 4> Quaternion::components() const {
  return {component(0), component(1), component(2), component(3)};
}

bool Quaternion::is_zero() const {
  for (const auto& d : doubled_)
    if (d != 0) return false;
  return true;
}

bool Quaternion::is_hurwitz() const {
  const bool odd0 = mpz_odd_p(doubled_[0].get_mpz_t());
  for (const auto& d : doubled_)
    if (static_cast<bool>(mpz_odd_p(d.get_mpz_t())) != odd0) return false;
  return true;
}

bool Quaternion::is_lipschitz() const {
  for (const auto& d : doubled_)
    if (mpz_odd_p(d.get_mpz_t())) return false;
  return true;
}

Rational Quaternion::norm() const {
  Integer s = 0;
  for (const auto& d : doubled_) s += d * d;
  return make_rational(s, Integer(4));
}

Quaternion Quaternion::conjugate() const {
  return from_doubled(doubled_[0], -doubled_[1], -doubled_[2], -doubled_[3]);
}

Quaternion operator*(const Quaternion& a, const Quaternion& b) {
  const auto& x = a.doubled_;
  const auto& y = b.doubled_;
  // Doubled inputs give a product scaled by 4; halve once more after.
  Integer z[4] = {
      x[0] * y[0] - x[1] * y[1] - x[2] * y[2] - x[3] * y[3],
      x[0] * y[1] + x[1] * y[0] + x[2] * y[3] - x[3] * y[2],
      x[0] * y[2] - x[1] * y[3] + x[2] * y[0] + x[3] * y[1],
      x[0] * y[3] + x[1] * y[2] - x[2] * y[1] + x[3] * y[0],
  };
  Quaternion out;
  for (std::size_t i = 0; i < 4; ++i) {
    if (!mpz_divisible_ui_p(z[i].get_mpz_t(), 2))
      throw InvalidInput("quaternion product leaves (1/2)Z; factors must be Hurwitz");
    out.doubled_[i] = z[i] / 2;
  }
  return out;
}

std::string Quaternion::to_string() const {
  const char* units[4] = {"", "i", "j", "k"};
  std::string out;
  for (std::size_t i = 0; i < 4; ++i) {
    if (i) out += ' ';
    out += simlat::to_string(component(i)) + units[i];
  }
  return out;
}

std::array<Rational, 4> algebra_product(const std::array<Rational, 4>& x, const std::array<Rational, 4>& y,
                                        const Rational& alpha, const Rational& beta) {
  return {
      x[0] * y[0] + alpha * x[1] * y[1] + beta * x[2] * y[2] - alpha * beta * x[3] * y[3],
      x[0] * y[1] + x[1] * y[0] - beta * x[2] * y[3] + beta * x[3] * y[2],
      x[0] * y[2] + x[2] * y[0] + alpha * x[1] * y[3] - alpha * x[3] * y[1],
      x[0] * y[3] + x[3] * y[0] + x[1] * y[2] - x[2] * y[1],
  };
}

RatMatrix right_multiplication_matrix(const std::array<Rational, 4>& q, const Rational& alpha, const Rational& beta) {
  RatMatrix m(4, 4);
  for (std::size_t col = 0; col < 4; ++col) {
    std::array<Rational, 4> e{};
    e[col] = 1;
    const auto img = algebra_product(e, q, alpha, beta);
    for (std::size_t row = 0; row < 4; ++row) m(row, col) = img[row];
  }
  return m;
}

}  // namespace simlat
