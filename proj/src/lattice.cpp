#include "simlat/lattice.hpp"

#include <algorithm>
#include <numeric>

#include "simlat/reduction.hpp"

namespace simlat {

GramLattice::GramLattice(RatMatrix gram, std::string name, LatticeMeta meta)
    : gram_(std::move(gram)), name_(std::move(name)), meta_(std::move(meta)) {
  if (gram_.rows() == 0) throw InvalidInput("lattice dimension must be positive");
  if (!is_symmetric(gram_)) throw InvalidInput("Gram matrix is not symmetric");
  for (const Rational& minor : leading_minors(gram_)) {
    if (minor <= 0) throw InvalidInput("Gram matrix is not positive definite");
  }
  if (meta_.maximality && *meta_.maximality <= 0) {
    throw InvalidInput("maximality class must be positive");
  }
}

bool GramLattice::is_even() const {
  if (!is_integral(gram_)) return false;
  for (std::size_t i = 0; i < dim(); ++i)
    if (mpz_odd_p(gram_(i, i).get_num_mpz_t())) return false;
  return true;
}

bool LatticeVector::is_zero() const {
  return std::all_of(coords.begin(), coords.end(), [](Coord c) { return c == 0; });
}

Rational inner_product(const GramLattice& lattice, const LatticeVector& u, const LatticeVector& v) {
  const std::size_t n = lattice.dim();
  if (u.size() != n || v.size() != n) throw InvalidInput("inner_product: dimension mismatch");
  Rational s = 0;
  for (std::size_t i = 0; i < n; ++i) {
    if (u.coords[i] == 0) continue;
    Rational row = 0;
    for (std::size_t j = 0; j < n; ++j) {
      if (v.coords[j] != 0) row += lattice.gram()(i, j) * Integer(static_cast<long>(v.coords[j]));
    }
    s += Integer(static_cast<long>(u.coords[i])) * row;
  }
  return s;
}

Rational norm(const GramLattice& lattice, const LatticeVector& v) { return inner_product(lattice, v, v); }

Rational determinant(const GramLattice& lattice) { return determinant(lattice.gram()); }

Integralized integralize(const GramLattice& lattice) {
  const RatMatrix& a = lattice.gram();
  Integer den_lcm = 1;
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) mpz_lcm(den_lcm.get_mpz_t(), den_lcm.get_mpz_t(), a(i, j).get_den_mpz_t());
  Integer content = 0;
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) {
      Integer v = a(i, j).get_num() * (den_lcm / a(i, j).get_den());
      mpz_gcd(content.get_mpz_t(), content.get_mpz_t(), v.get_mpz_t());
    }
  Rational scale = make_rational(den_lcm, content);
  RatMatrix b = scale * a;
  return {GramLattice(std::move(b), lattice.name(), lattice.meta()), scale};
}

std::vector<std::int64_t> int64_gram(const GramLattice& lattice) {
  const RatMatrix& a = lattice.gram();
  if (!is_integral(a)) throw InvalidInput("int64_gram: Gram matrix is not integral");
  std::vector<std::int64_t> out;
  out.reserve(a.rows() * a.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) {
      const Integer& v = a(i, j).get_num();
      if (abs(v) > Integer(1) << 30) throw InternalError("Gram entry too large for 64-bit kernels");
      out.push_back(v.get_si());
    }
  return out;
}

bool verify_similarity(const GramLattice& lattice, const IntMatrix& b, const Rational& c) {
  const std::size_t n = lattice.dim();
  if (b.rows() != n || b.cols() != n) throw InvalidInput("verify_similarity: dimension mismatch");
  const RatMatrix rb = to_rational(b);
  const RatMatrix lhs = rb.transpose() * lattice.gram() * rb;
  return lhs == c * lattice.gram();
}

SimilarityMap SimilarityMap::create(LatticePtr lattice, IntMatrix matrix, Rational norm) {
  if (!lattice) throw InvalidInput("SimilarityMap: null lattice");
  if (norm <= 0) throw InvalidInput("SimilarityMap: norm must be positive");
  if (!verify_similarity(*lattice, matrix, norm)) {
    throw InvalidInput("SimilarityMap: B^T A B != c A for norm " + to_string(norm));
  }
  return SimilarityMap(std::move(lattice), std::move(matrix), std::move(norm));
}

Integer index_of(const SimilarityMap& map) { return abs(determinant(map.matrix())); }

std::optional<Integer> integral_index(const Rational& c, std::size_t n) {
  if (c <= 0) return std::nullopt;
  // c^{n/2}: for even n this is c^{n/2}; for odd n c must be a square.
  if (n % 2 == 0) {
    if (c.get_den() != 1) return std::nullopt;
    Integer r;
    mpz_pow_ui(r.get_mpz_t(), c.get_num_mpz_t(), n / 2);
    return r;
  }
  if (c.get_den() != 1 || !is_perfect_square(c.get_num())) return std::nullopt;
  Integer r;
  mpz_pow_ui(r.get_mpz_t(), isqrt(c.get_num()).get_mpz_t(), n);
  return r;
}

SimilarityMap compose(const SimilarityMap& first, const SimilarityMap& second) {
  if (first.lattice_ptr() != second.lattice_ptr() && first.lattice().gram() != second.lattice().gram()) {
    throw InvalidInput("compose: maps act on different lattices");
  }
  return SimilarityMap::create(first.lattice_ptr(), second.matrix() * first.matrix(),
                               first.norm() * second.norm());
}

std::vector<LatticeVector> coset_representatives(const IntMatrix& b) {
  if (!b.square()) throw InvalidInput("coset_representatives: matrix must be square");
  if (determinant(b) == 0) throw InvalidInput("coset_representatives: singular matrix");
  const IntMatrix h = column_hnf(b);
  const std::size_t n = h.rows();
  std::vector<Coord> bounds(n);
  Integer total = 1;
  for (std::size_t i = 0; i < n; ++i) {
    bounds[i] = to_int64(h(i, i));
    total *= h(i, i);
  }
  if (total > Integer(1) << 26) throw InvalidInput("coset_representatives: index too large to list");
  std::vector<LatticeVector> out;
  out.reserve(total.get_ui());
  std::vector<Coord> x(n, 0);
  // Lexicographic odometer over the box.
  while (true) {
    out.push_back(LatticeVector{x});
    std::size_t i = n;
    while (i-- > 0) {
      if (++x[i] < bounds[i]) break;
      x[i] = 0;
      if (i == 0) return out;
    }
    if (n == 0) return out;
  }
}

std::vector<LatticeVector> coset_representatives(const GramLattice& lattice, const IntMatrix& b) {
  if (b.rows() != lattice.dim()) throw InvalidInput("coset_representatives: dimension mismatch");
  return coset_representatives(b);
}

bool same_coset(const IntMatrix& b, const LatticeVector& u, const LatticeVector& v) {
  auto inv = inverse(to_rational(b));
  if (!inv) throw InvalidInput("same_coset: singular matrix");
  const std::size_t n = b.rows();
  for (std::size_t i = 0; i < n; ++i) {
    Rational s = 0;
    for (std::size_t j = 0; j < n; ++j) s += (*inv)(i, j) * Integer(static_cast<long>(u.coords[j] - v.coords[j]));
    if (s.get_den() != 1) return false;
  }
  return true;
}

}  // namespace simlat
