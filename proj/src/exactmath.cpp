#include "simlat/exactmath.hpp"

#include <algorithm>
#include <map>

namespace simlat {

Rational make_rational(const Integer& num, const Integer& den) {
  if (den == 0) throw InvalidInput("rational with zero denominator");
  Rational r(num, den);
  r.canonicalize();
  return r;
}

namespace {

Integer parse_integer(std::string_view text) {
  if (text.empty()) throw InvalidInput("empty integer literal");
  std::size_t start = (text[0] == '-' || text[0] == '+') ? 1 : 0;
  if (start == text.size()) throw InvalidInput("malformed integer: " + std::string(text));
  for (std::size_t i = start; i < text.size(); ++i) {
    if (text[i] < '0' || text[i] > '9') {
      throw InvalidInput("malformed integer: " + std::string(text));
    }
  }
  std::string digits(text.substr(text[0] == '+' ? 1 : 0));
  return Integer(digits, 10);
}

}  // namespace

Rational parse_rational(std::string_view text) {
  auto slash = text.find('/');
  if (slash == std::string_view::npos) return Rational(parse_integer(text));
  Integer num = parse_integer(text.substr(0, slash));
  std::string_view den_text = text.substr(slash + 1);
  if (!den_text.empty() && (den_text[0] == '-' || den_text[0] == '+')) {
    throw InvalidInput("denominator must be unsigned: " + std::string(text));
  }
  Integer den = parse_integer(den_text);
  if (den == 0) throw InvalidInput("zero denominator: " + std::string(text));
  return make_rational(num, den);
}

std::string to_string(const Rational& r) { return r.get_str(); }
std::string to_string(const Integer& n) { return n.get_str(); }

std::int64_t to_int64(const Integer& n) {
  if (!n.fits_slong_p()) throw InternalError("integer does not fit in 64 bits: " + n.get_str());
  return n.get_si();
}

Integer Factorization::value() const {
  Integer v = sign;
  for (const auto& f : factors) {
    Integer pp;
    mpz_pow_ui(pp.get_mpz_t(), f.prime.get_mpz_t(), static_cast<unsigned long>(f.exponent));
    v *= pp;
  }
  return v;
}

int Factorization::exponent_of(const Integer& p) const {
  for (const auto& f : factors) {
    if (f.prime == p) return f.exponent;
  }
  return 0;
}

bool is_prime(const Integer& n) {
  if (n < 2) return false;
  return mpz_probab_prime_p(n.get_mpz_t(), 40) > 0;
}

namespace {

const std::vector<std::uint32_t>& small_primes() {
  static const std::vector<std::uint32_t> primes = [] {
    std::vector<bool> composite(kTrialDivisionBound + 1, false);
    std::vector<std::uint32_t> out;
    for (std::uint32_t i = 2; i <= kTrialDivisionBound; ++i) {
      if (composite[i]) continue;
      out.push_back(i);
      for (std::uint64_t j = std::uint64_t{i} * i; j <= kTrialDivisionBound; j += i) {
        composite[j] = true;
      }
    }
    return out;
  }();
  return primes;
}

// Brent's variant of Pollard rho; returns a nontrivial factor of composite n.
Integer pollard_rho(const Integer& n) {
  if (mpz_even_p(n.get_mpz_t())) return 2;
  for (unsigned long c = 1; c < 64; ++c) {
    Integer y = 2, x, ys, q = 1, g = 1;
    const unsigned long m = 128;
    unsigned long r = 1;
    auto f = [&](const Integer& v) {
      Integer t = v * v + c;
      mpz_mod(t.get_mpz_t(), t.get_mpz_t(), n.get_mpz_t());
      return t;
    };
    std::uint64_t steps = 0;
    do {
      x = y;
      for (unsigned long i = 0; i < r; ++i) y = f(y);
      unsigned long k = 0;
      do {
        ys = y;
        for (unsigned long i = 0; i < std::min(m, r - k); ++i) {
          y = f(y);
          Integer diff = abs(x - y);
          q = q * diff;
          mpz_mod(q.get_mpz_t(), q.get_mpz_t(), n.get_mpz_t());
        }
        mpz_gcd(g.get_mpz_t(), q.get_mpz_t(), n.get_mpz_t());
        k += m;
      } while (k < r && g == 1);
      r *= 2;
      steps += r;
    } while (g == 1 && steps < (std::uint64_t{1} << 26));
    if (g == n) {
      do {
        ys = f(ys);
        Integer diff = abs(x - ys);
        mpz_gcd(g.get_mpz_t(), diff.get_mpz_t(), n.get_mpz_t());
      } while (g == 1);
    }
    if (g != n && g != 1) return g;
  }
  throw InternalError("pollard rho failed to split " + n.get_str());
}

void split_into(const Integer& m, std::map<Integer, int>& out) {
  if (m == 1) return;
  if (is_prime(m)) {
    out[m] += 1;
    return;
  }
  Integer d = pollard_rho(m);
  split_into(d, out);
  split_into(Integer(m / d), out);
}

}  // namespace

Factorization factorize(const Integer& n) {
  if (n == 0) throw InvalidInput("factorize: zero has no factorization");
  Factorization result;
  result.sign = n < 0 ? -1 : 1;
  Integer m = abs(n);
  for (std::uint32_t p : small_primes()) {
    if (m == 1) break;
    if (Integer(p) * p > m) break;
    if (mpz_divisible_ui_p(m.get_mpz_t(), p)) {
      int e = 0;
      while (mpz_divisible_ui_p(m.get_mpz_t(), p)) {
        mpz_divexact_ui(m.get_mpz_t(), m.get_mpz_t(), p);
        ++e;
      }
      result.factors.push_back({Integer(p), e});
    }
  }
  if (m != 1) {
    std::map<Integer, int> large;
    split_into(m, large);
    for (auto& [p, e] : large) result.factors.push_back({p, e});
  }
  return result;
}

namespace {

void require_prime(const Integer& p, const char* who) {
  if (!is_prime(p)) throw InvalidInput(std::string(who) + ": not a prime: " + p.get_str());
}

int remove_factor(Integer& n, const Integer& p) {
  return static_cast<int>(mpz_remove(n.get_mpz_t(), n.get_mpz_t(), p.get_mpz_t()));
}

}  // namespace

int valuation(const Integer& n, const Integer& p) {
  if (n == 0) throw InvalidInput("valuation of zero");
  require_prime(p, "valuation");
  Integer m = n;
  return remove_factor(m, p);
}

int valuation(const Rational& r, const Integer& p) {
  if (r == 0) throw InvalidInput("valuation of zero");
  require_prime(p, "valuation");
  Integer num = r.get_num(), den = r.get_den();
  return remove_factor(num, p) - remove_factor(den, p);
}

int legendre_symbol(const Integer& a, const Integer& p) {
  if (p == 2 || !is_prime(p)) {
    throw InvalidInput("legendre_symbol: modulus must be an odd prime, got " + p.get_str());
  }
  Integer r;
  mpz_mod(r.get_mpz_t(), a.get_mpz_t(), p.get_mpz_t());
  return mpz_legendre(r.get_mpz_t(), p.get_mpz_t());
}

Place Place::prime(Integer p) {
  require_prime(p, "Place::prime");
  Place place;
  place.real_ = false;
  place.prime_ = std::move(p);
  return place;
}

std::string Place::to_string() const { return real_ ? "inf" : prime_.get_str(); }

Integer square_class_representative(const Rational& r) {
  return Integer(r.get_num() * r.get_den());
}

namespace {

// Residue of an odd integer modulo 8, in {1, 3, 5, 7}.
unsigned long mod8(const Integer& u) {
  Integer r;
  mpz_fdiv_r_ui(r.get_mpz_t(), u.get_mpz_t(), 8);
  return r.get_ui();
}

}  // namespace

int hilbert_symbol(const Rational& a, const Rational& b, const Place& place) {
  if (a == 0 || b == 0) throw InvalidInput("hilbert_symbol: arguments must be nonzero");
  if (place.is_real()) return (a < 0 && b < 0) ? -1 : 1;

  const Integer& p = place.p();
  Integer u = square_class_representative(a);
  Integer v = square_class_representative(b);
  const int alpha = remove_factor(u, p);
  const int beta = remove_factor(v, p);

  if (p != 2) {
    int sign = 1;
    // (-1)^{alpha beta (p-1)/2}
    if ((alpha & 1) && (beta & 1) && mod8(p) % 4 == 3) sign = -sign;
    if (beta & 1) sign *= legendre_symbol(u, p);
    if (alpha & 1) sign *= legendre_symbol(v, p);
    return sign;
  }

  const unsigned long u8 = mod8(u), v8 = mod8(v);
  auto eps = [](unsigned long x) { return (x == 3 || x == 7) ? 1 : 0; };
  auto omega = [](unsigned long x) { return (x == 3 || x == 5) ? 1 : 0; };
  const int exponent = eps(u8) * eps(v8) + alpha * omega(v8) + beta * omega(u8);
  return (exponent & 1) ? -1 : 1;
}

bool is_perfect_square(const Integer& n) {
  if (n < 0) return false;
  return mpz_perfect_square_p(n.get_mpz_t()) != 0;
}

Integer isqrt(const Integer& n) {
  if (n < 0) throw InvalidInput("isqrt: negative argument");
  Integer r;
  mpz_sqrt(r.get_mpz_t(), n.get_mpz_t());
  return r;
}

}  // namespace simlat
