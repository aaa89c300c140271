#pragma once

// Lattices given by exact Gram matrices, lattice vectors, and similarity maps.

#include <compare>
#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "simlat/matrix.hpp"

namespace simlat {

/// Catalog flags consumed by the sufficiency half of the Hilbert-symbol test.
struct LatticeMeta {
  bool unigeneric = false;
  /// The r of "(r)-maximal", when the lattice is known to be maximal.
  std::optional<Rational> maximality;
};

/// A positive definite lattice with rational Gram matrix. Immutable.
class GramLattice {
 public:
  /// Validates symmetry and positive definiteness (exact leading minors).
  explicit GramLattice(RatMatrix gram, std::string name = {}, LatticeMeta meta = {});

  std::size_t dim() const { return gram_.rows(); }
  const RatMatrix& gram() const { return gram_; }
  const std::string& name() const { return name_; }
  const LatticeMeta& meta() const { return meta_; }

  /// True when every diagonal entry is an even integer and the Gram is integral.
  bool is_even() const;

 private:
  RatMatrix gram_;
  std::string name_;
  LatticeMeta meta_;
};

using LatticePtr = std::shared_ptr<const GramLattice>;

using Coord = std::int64_t;

/// Coordinates of a lattice vector in the lattice basis.
struct LatticeVector {
  std::vector<Coord> coords;

  std::size_t size() const { return coords.size(); }
  bool is_zero() const;
  friend auto operator<=>(const LatticeVector&, const LatticeVector&) = default;
};

Rational inner_product(const GramLattice& lattice, const LatticeVector& u, const LatticeVector& v);
Rational norm(const GramLattice& lattice, const LatticeVector& v);
Rational determinant(const GramLattice& lattice);

struct Integralized {
  GramLattice lattice;
  Rational scale;  // new gram = scale * old gram
};

/// Rescales to the primitive integral Gram matrix (content 1).
Integralized integralize(const GramLattice& lattice);

/// Integral Gram matrix in 64-bit form; throws InternalError on overflow and
/// InvalidInput when the Gram matrix is not integral.
std::vector<std::int64_t> int64_gram(const GramLattice& lattice);

/// A similarity sigma of a lattice: B^T A B = c A with B integral.
/// Column j of the matrix holds the lattice coordinates of sigma(b_j).
class SimilarityMap {
 public:
  /// Verifies the similarity identity exactly; throws InvalidInput if it fails.
  static SimilarityMap create(LatticePtr lattice, IntMatrix matrix, Rational norm);

  const GramLattice& lattice() const { return *lattice_; }
  const LatticePtr& lattice_ptr() const { return lattice_; }
  const IntMatrix& matrix() const { return matrix_; }
  const Rational& norm() const { return norm_; }

 private:
  SimilarityMap(LatticePtr lattice, IntMatrix matrix, Rational norm)
      : lattice_(std::move(lattice)), matrix_(std::move(matrix)), norm_(std::move(norm)) {}

  LatticePtr lattice_;
  IntMatrix matrix_;
  Rational norm_;
};

/// True iff B^T A B = c A exactly.
bool verify_similarity(const GramLattice& lattice, const IntMatrix& b, const Rational& c);

/// [L : sigma(L)] = |det B| (which equals c^{n/2}).
Integer index_of(const SimilarityMap& map);

/// c^{n/2} when it is an integer.
std::optional<Integer> integral_index(const Rational& c, std::size_t n);

/// Composition first-then-second: matrix second.B * first.B, norm product.
SimilarityMap compose(const SimilarityMap& first, const SimilarityMap& second);

/// One representative per coset of B Z^n in Z^n (|det B| of them), taken from
/// the box of the upper-triangular Hermite normal form. Lexicographic order.
std::vector<LatticeVector> coset_representatives(const GramLattice& lattice, const IntMatrix& b);
std::vector<LatticeVector> coset_representatives(const IntMatrix& b);

/// True iff u - v lies in B Z^n.
bool same_coset(const IntMatrix& b, const LatticeVector& u, const LatticeVector& v);

}  // namespace simlat
