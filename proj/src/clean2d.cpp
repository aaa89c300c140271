#include "simlat/clean2d.hpp"

#include <cmath>
#include <limits>
#include <numeric>
#include <set>

#include "simlat/errors.hpp"

namespace simlat {

const char* family_name(QuadFamily f) { return f == QuadFamily::hexagonal ? "hexagonal" : "rectangular"; }

namespace {

using Wide = __int128;

std::int64_t narrow(Wide v, const char* what) {
  if (v > std::numeric_limits<std::int64_t>::max() || v < std::numeric_limits<std::int64_t>::min())
    throw InvalidInput(std::string(what) + ": value exceeds 64 bits");
  return static_cast<std::int64_t>(v);
}

std::int64_t hex_h(std::int64_t n) { return (n + 1) / 4; }

// Round-half-up of num/den for den > 0.
Wide round_div(Wide num, Wide den) {
  Wide q = num / den, r = num % den;
  if (r < 0) {
    q -= 1;
    r += den;
  }
  if (2 * r >= den) q += 1;
  return q;
}

void require_nonzero(const QuadInt& a, const char* what) {
  if (a.is_zero()) throw InvalidInput(std::string(what) + ": alpha must be nonzero");
}

}  // namespace

QuadLattice::QuadLattice(QuadFamily family, std::int64_t n) : family_(family), n_(n) {
  if (n < 1) throw InvalidInput("QuadLattice: N must be positive");
  if (n > 1'000'000'000) throw InvalidInput("QuadLattice: N too large");
  if (family == QuadFamily::hexagonal && n % 4 != 3) throw InvalidInput("QuadLattice: hexagonal type needs N = 3 (mod 4)");
}

RatMatrix QuadLattice::gram() const {
  RatMatrix g(2, 2);
  g(0, 0) = 1;
  if (family_ == QuadFamily::hexagonal) {
    g(0, 1) = g(1, 0) = make_rational(-1, 2);
    g(1, 1) = make_rational(Integer(static_cast<long>(n_ + 1)), 4);
  } else {
    g(1, 1) = Integer(static_cast<long>(n_));
  }
  return g;
}

GramLattice QuadLattice::lattice() const {
  return GramLattice(gram(), std::string(family_name(family_)) + "-" + std::to_string(n_));
}

QuadInt quad_mul(const QuadLattice& ring, const QuadInt& a, const QuadInt& b) {
  const Wide ac = Wide(a.x) * b.x, bd = Wide(a.y) * b.y, cross = Wide(a.x) * b.y + Wide(a.y) * b.x;
  if (ring.family() == QuadFamily::hexagonal)
    return {narrow(ac - bd * hex_h(ring.n()), "quad_mul"), narrow(cross - bd, "quad_mul")};
  return {narrow(ac - bd * ring.n(), "quad_mul"), narrow(cross, "quad_mul")};
}

QuadInt quad_conj(const QuadLattice& ring, const QuadInt& a) {
  if (ring.family() == QuadFamily::hexagonal) return {a.x - a.y, -a.y};  // w-bar = -1 - w
  return {a.x, -a.y};
}

std::int64_t quad_norm(const QuadLattice& ring, const QuadInt& a) {
  const Wide x = a.x, y = a.y;
  if (ring.family() == QuadFamily::hexagonal) return narrow(x * x - x * y + y * y * hex_h(ring.n()), "quad_norm");
  return narrow(x * x + y * y * ring.n(), "quad_norm");
}

QuadInt quad_theta(const QuadLattice& ring) {
  return ring.family() == QuadFamily::hexagonal ? QuadInt{1, 2} : QuadInt{0, 1};
}

bool is_primitive(const QuadInt& z) {
  require_nonzero(z, "is_primitive");
  return std::gcd(z.x, z.y) == 1;
}

QuadInt from_shifted_omega(std::int64_t a, std::int64_t b) { return {a + b, b}; }

bool clean_hex_A2(const QuadInt& alpha) {
  require_nonzero(alpha, "clean_hex_A2");
  const QuadLattice ring(QuadFamily::hexagonal, 3);
  return is_primitive(quad_mul(ring, alpha, quad_theta(ring)));
}

bool clean_hex_general(std::int64_t n, const QuadInt& alpha) {
  require_nonzero(alpha, "clean_hex_general");
  const QuadLattice ring(QuadFamily::hexagonal, n);
  const QuadInt theta = quad_theta(ring);
  if (!is_primitive(quad_mul(ring, alpha, theta))) return false;

  auto some_k_works = [&](const QuadInt& factor) {
    const QuadInt beta = quad_mul(ring, alpha, factor);
    for (std::int64_t k = 1; k <= n + 1; k += 2) {
      if ((n + 1) % k != 0) continue;
      if (beta.x % (2 * k) != 0 || beta.y % (2 * k) != 0) continue;
      if (is_primitive({beta.x / (2 * k), beta.y / (2 * k)})) return true;
    }
    return false;
  };
  return some_k_works({n - theta.x, -theta.y}) && some_k_works({n + theta.x, theta.y});
}

bool clean_rect(std::int64_t n, const QuadInt& alpha) {
  require_nonzero(alpha, "clean_rect");
  const QuadLattice ring(QuadFamily::rectangular, n);
  return quad_norm(ring, alpha) % 2 != 0;
}

bool clean_predicate(const QuadLattice& lattice, const QuadInt& alpha) {
  return lattice.family() == QuadFamily::hexagonal ? clean_hex_general(lattice.n(), alpha)
                                                   : clean_rect(lattice.n(), alpha);
}

IntMatrix multiplication_matrix(const QuadLattice& lattice, const QuadInt& alpha) {
  const QuadInt c0 = quad_mul(lattice, alpha, {1, 0});
  const QuadInt c1 = quad_mul(lattice, alpha, {0, 1});
  IntMatrix m(2, 2);
  m(0, 0) = static_cast<long>(c0.x);
  m(1, 0) = static_cast<long>(c0.y);
  m(0, 1) = static_cast<long>(c1.x);
  m(1, 1) = static_cast<long>(c1.y);
  return m;
}

OracleReport clean_oracle_report(const QuadLattice& lattice, const QuadInt& alpha) {
  require_nonzero(alpha, "clean_oracle");
  // Work with the integral form 4A; distances are compared as d^T (4A) d.
  Wide g00 = 4, g01 = 0, g11 = 4 * Wide(lattice.n());
  if (lattice.family() == QuadFamily::hexagonal) {
    g01 = -2;
    g11 = lattice.n() + 1;
  }
  auto q = [&](Wide d0, Wide d1) { return g00 * d0 * d0 + 2 * g01 * d0 * d1 + g11 * d1 * d1; };

  const QuadInt c0 = quad_mul(lattice, alpha, {1, 0});
  const QuadInt c1 = quad_mul(lattice, alpha, {0, 1});
  const Wide m00 = c0.x, m10 = c0.y, m01 = c1.x, m11 = c1.y;
  const Wide det = m00 * m11 - m01 * m10;
  const Wide sign = det < 0 ? -1 : 1;
  // Gram of the sublattice in z-coordinates and its enclosure constants.
  const Wide s00 = q(m00, m10), s11 = q(m01, m11);
  const Wide s01 = g00 * m00 * m01 + g01 * (m00 * m11 + m10 * m01) + g11 * m10 * m11;
  const Wide sdet = s00 * s11 - s01 * s01, strace = s00 + s11;

  OracleReport report;
  const auto reps = coset_representatives(multiplication_matrix(lattice, alpha));
  report.cosets = reps.size();
  for (const auto& rep : reps) {
    if (rep.is_zero()) continue;
    const Wide u0 = rep.coords[0], u1 = rep.coords[1];
    // z = M^{-1} u = adj(M) u / det, rounded.
    const Wide z0 = round_div(sign * (m11 * u0 - m01 * u1), sign * det);
    const Wide z1 = round_div(sign * (-m10 * u0 + m00 * u1), sign * det);
    for (Wide radius = 2;; radius *= 2) {
      Wide best = -1;
      std::size_t ties = 0;
      for (Wide a = -radius; a <= radius; ++a) {
        for (Wide b = -radius; b <= radius; ++b) {
          const Wide za = z0 + a, zb = z1 + b;
          const Wide d = q(u0 - (m00 * za + m01 * zb), u1 - (m10 * za + m11 * zb));
          if (best < 0 || d < best) {
            best = d;
            ties = 1;
          } else if (d == best) {
            ++ties;
          }
        }
      }
      // Outside the box |z - t|_2 >= radius + 1/2, so the distance is at least
      // lambda_min (radius + 1/2)^2 >= (sdet / strace)(radius + 1/2)^2.
      if (sdet * (2 * radius + 1) * (2 * radius + 1) > 4 * strace * best) {
        if (ties >= 2) {
          report.clean = false;
          report.boundary_point = rep;
          report.nearest_count = ties;
          return report;
        }
        break;
      }
      if (radius > (Wide(1) << 20)) throw InternalError("clean_oracle: enclosure did not converge");
    }
  }
  return report;
}

bool clean_oracle(const QuadLattice& lattice, const QuadInt& alpha) { return clean_oracle_report(lattice, alpha).clean; }

std::vector<std::int64_t> clean_index_spectrum(const QuadLattice& lattice, std::int64_t c_max, CleanMethod method) {
  if (c_max < 1) throw InvalidInput("clean_index_spectrum: c_max must be positive");
  if (c_max > 100'000'000) throw InvalidInput("clean_index_spectrum: c_max too large");
  const double c = static_cast<double>(c_max);
  const double nn = static_cast<double>(lattice.n());
  const bool hex = lattice.family() == QuadFamily::hexagonal;
  // norm = (a - b/2)^2 + (N/4) b^2 (hexagonal) or a^2 + N b^2.
  const auto b_max = static_cast<std::int64_t>(std::floor((hex ? 2.0 : 1.0) * std::sqrt(c / nn))) + 1;
  std::set<std::int64_t> found;
  for (std::int64_t b = -b_max; b <= b_max; ++b) {
    const auto a_max = static_cast<std::int64_t>(std::floor(std::sqrt(c) + std::abs(static_cast<double>(b)))) + 1;
    for (std::int64_t a = -a_max; a <= a_max; ++a) {
      const QuadInt alpha{a, b};
      if (alpha.is_zero()) continue;
      const std::int64_t norm = quad_norm(lattice, alpha);
      if (norm > c_max || found.contains(norm)) continue;
      const bool clean = method == CleanMethod::predicate ? clean_predicate(lattice, alpha) : clean_oracle(lattice, alpha);
      if (clean) found.insert(norm);
    }
  }
  return {found.begin(), found.end()};
}

}  // namespace simlat
