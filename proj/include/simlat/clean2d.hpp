#pragma once

// Clean sublattices alpha * L of two-dimensional lattices L = Z + Z w.
//
// Hexagonal type: w = (-1 + sqrt(-N))/2 with N = 3 (mod 4); |a + b w|^2 =
// a^2 - ab + b^2 (N+1)/4. Rectangular type: w = theta = sqrt(-N);
// |a + b theta|^2 = a^2 + N b^2. In both cases theta = sqrt(-N).

#include <cstdint>
#include <string>
#include <vector>

#include "simlat/lattice.hpp"

namespace simlat {

enum class QuadFamily { hexagonal, rectangular };

const char* family_name(QuadFamily f);

class QuadLattice {
 public:
  /// Throws InvalidInput unless N >= 1 (and N = 3 mod 4 for hexagonal type).
  QuadLattice(QuadFamily family, std::int64_t n);

  QuadFamily family() const { return family_; }
  std::int64_t n() const { return n_; }
  /// Gram matrix of the basis (1, w).
  RatMatrix gram() const;
  GramLattice lattice() const;

  friend bool operator==(const QuadLattice&, const QuadLattice&) = default;

 private:
  QuadFamily family_;
  std::int64_t n_;
};

/// x + y w in the ring of a QuadLattice.
struct QuadInt {
  std::int64_t x = 0;
  std::int64_t y = 0;

  bool is_zero() const { return x == 0 && y == 0; }
  friend bool operator==(const QuadInt&, const QuadInt&) = default;
};

QuadInt quad_mul(const QuadLattice& ring, const QuadInt& a, const QuadInt& b);
QuadInt quad_conj(const QuadLattice& ring, const QuadInt& a);
std::int64_t quad_norm(const QuadLattice& ring, const QuadInt& a);
/// theta = sqrt(-N) in the ring's coordinates.
QuadInt quad_theta(const QuadLattice& ring);

/// gcd(x, y) = 1. Throws InvalidInput for zero.
bool is_primitive(const QuadInt& z);

/// a + b w' with w' = (1 + sqrt(-N))/2 = w + 1, as used by the general
/// hexagonal criterion's statement, rewritten in this module's basis.
QuadInt from_shifted_omega(std::int64_t a, std::int64_t b);

/// N = 3: alpha * theta is primitive.
bool clean_hex_A2(const QuadInt& alpha);

/// (i) alpha theta primitive; (ii) some odd k | N+1 has alpha (N - theta)/(2k)
/// in the ring and primitive; (iii) likewise, independently, for N + theta.
bool clean_hex_general(std::int64_t n, const QuadInt& alpha);

/// a^2 + N b^2 is odd.
bool clean_rect(std::int64_t n, const QuadInt& alpha);

/// The criterion for the lattice's family.
bool clean_predicate(const QuadLattice& lattice, const QuadInt& alpha);

struct OracleReport {
  bool clean = true;
  std::size_t cosets = 0;
  /// First coset representative found on a cell boundary, if any.
  std::optional<LatticeVector> boundary_point;
  std::size_t nearest_count = 0;  // number of nearest sublattice points for it
};

/// Exact geometric test: every coset representative u of alpha L in L is
/// checked for a tie among its nearest points of alpha L.
OracleReport clean_oracle_report(const QuadLattice& lattice, const QuadInt& alpha);
bool clean_oracle(const QuadLattice& lattice, const QuadInt& alpha);

/// 2x2 integer matrix of multiplication by alpha (columns: images of 1, w).
IntMatrix multiplication_matrix(const QuadLattice& lattice, const QuadInt& alpha);

enum class CleanMethod { predicate, oracle };

/// All c <= c_max with some alpha of norm c giving a clean sublattice.
std::vector<std::int64_t> clean_index_spectrum(const QuadLattice& lattice, std::int64_t c_max,
                                               CleanMethod method = CleanMethod::predicate);

/// A point r + s sqrt(N) of the real embedding (plane coordinates (r, s sqrt N)).
struct EmbeddedPoint {
  Rational real;
  Rational sqrt_n_coeff;
  friend bool operator==(const EmbeddedPoint&, const EmbeddedPoint&) = default;
};

struct VoronoiPolygon {
  std::vector<EmbeddedPoint> vertices;                   // cyclic order
  std::vector<std::pair<std::size_t, std::size_t>> edges;
  std::vector<LatticeVector> relevant_vectors;           // one per edge, lattice coordinates
};

/// Voronoi cell of the origin from the obtuse superbase (1, w, -1 - w): a
/// hexagon when all three superbase products are negative, otherwise a
/// rectangle.
VoronoiPolygon voronoi_cell(const QuadLattice& lattice);

}  // namespace simlat
