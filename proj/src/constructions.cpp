#include "simlat/constructions.hpp"

#include "simlat/enumerate.hpp"
#include "simlat/errors.hpp"
#include "simlat/golay.hpp"
#include "simlat/reduction.hpp"

namespace simlat {

namespace {

void require_nonzero(long r, long s, const char* what) {
  if (r == 0 && s == 0) throw InvalidInput(std::string(what) + ": multiplier must be nonzero");
}

// [[r, -s], [s, r - s]] (Eisenstein) or [[r, -s], [s, r]] (Gaussian) on each 2-block.
IntMatrix block_multiplier(long r, long s, std::size_t copies, bool eisenstein) {
  IntMatrix b(2 * copies, 2 * copies);
  for (std::size_t k = 0; k < copies; ++k) {
    b(2 * k, 2 * k) = r;
    b(2 * k, 2 * k + 1) = -s;
    b(2 * k + 1, 2 * k) = s;
    b(2 * k + 1, 2 * k + 1) = eisenstein ? r - s : r;
  }
  return b;
}

std::vector<Rational> apply_matrix(const RatMatrix& m, std::span<const Rational> x) {
  std::vector<Rational> y(m.rows());
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) y[i] += m(i, j) * x[j];
  return y;
}

// Right multiplication on consecutive blocks of four coordinates.
AmbientAction blockwise(const RatMatrix& r) {
  return [r](std::span<const Rational> x) {
    std::vector<Rational> y(x.size());
    for (std::size_t b = 0; b + 4 <= x.size(); b += 4) {
      const auto img = apply_matrix(r, x.subspan(b, 4));
      for (std::size_t i = 0; i < 4; ++i) y[b + i] = img[i];
    }
    return y;
  };
}

void require_hurwitz(const Quaternion& q, const char* what) {
  if (q.is_zero()) throw InvalidInput(std::string(what) + ": q must be nonzero");
  if (!q.is_hurwitz()) throw InvalidInput(std::string(what) + ": q must be a Hurwitz quaternion");
}

// Quaternion component fed by each MOG row, for even and odd column index.
constexpr std::size_t kSchemeEven[4] = {0, 3, 1, 2};  // 1, k, i, j
constexpr std::size_t kSchemeOdd[4] = {0, 2, 3, 1};   // 1, j, k, i

IntMatrix row_constraints_kernel(const RatMatrix& generator, const RatMatrix& constraints) {
  return integer_left_kernel(to_integer(generator * constraints));
}

}  // namespace

SimilarityMap map_from_ambient(const CatalogEntry& entry, const AmbientAction& act, const Rational& norm) {
  if (!entry.generator) throw InvalidInput("lattice '" + entry.lattice->name() + "' has no ambient realization");
  const RatMatrix& g = *entry.generator;
  const std::size_t n = g.rows();
  IntMatrix b(n, n);
  for (std::size_t j = 0; j < n; ++j) {
    const std::vector<Rational> image = act(g.row(j));
    const auto coords = coordinates_in_rows(g, image);
    if (!coords) throw InvalidInput("map leaves the ambient span of " + entry.lattice->name());
    for (std::size_t i = 0; i < n; ++i) {
      if ((*coords)[i].get_den() != 1)
        throw InvalidInput("map does not preserve " + entry.lattice->name() + " (basis image " + std::to_string(j) +
                           " is not a lattice vector)");
      b(i, j) = (*coords)[i].get_num();
    }
  }
  return SimilarityMap::create(entry.lattice, std::move(b), norm);
}

SimilarityMap gaussian_multiplier(long r, long s, std::size_t copies) {
  require_nonzero(r, s, "gaussian_multiplier");
  if (copies == 0 || copies > 12) throw InvalidInput("gaussian_multiplier: copies must be in 1..12");
  const auto& entry = catalog_lattice("Z" + std::to_string(2 * copies));
  return SimilarityMap::create(entry.lattice, block_multiplier(r, s, copies, false), Rational(r * r + s * s));
}

SimilarityMap eisenstein_multiplier(long r, long s, EisensteinTarget target) {
  require_nonzero(r, s, "eisenstein_multiplier");
  const bool e6 = target == EisensteinTarget::e6;
  const auto& entry = catalog_lattice(e6 ? "E6" : "A2");
  // Both catalog bases come in pairs (v, w v), so the action is blockwise.
  return SimilarityMap::create(entry.lattice, block_multiplier(r, s, e6 ? 3 : 1, true), Rational(r * r - r * s + s * s));
}

long a4_constraint(const std::array<long, 4>& a) {
  static constexpr long q[4][4] = {{0, 1, -1, -1}, {1, 0, 1, -1}, {-1, 1, 0, 1}, {-1, -1, 1, 0}};
  long v = 0;
  for (std::size_t i = 0; i < 4; ++i)
    for (std::size_t j = 0; j < 4; ++j) v += a[i] * q[i][j] * a[j];
  return v;
}

long a4_norm(const std::array<long, 4>& a) {
  long v = 0;
  for (std::size_t i = 0; i < 4; ++i) v += a[i] * a[i];
  for (std::size_t i = 0; i + 1 < 4; ++i) v -= a[i] * a[i + 1];
  return v;
}

std::optional<SimilarityMap> a4_circulant_similarity(const std::array<long, 4>& a) {
  if (a == std::array<long, 4>{0, 0, 0, 0} || a4_constraint(a) != 0) return std::nullopt;
  const auto& entry = catalog_lattice("A4");
  const AmbientAction act = [a](std::span<const Rational> x) {
    // (alpha^k x)_i = x_{i+k}.
    std::vector<Rational> y(5);
    for (std::size_t k = 1; k <= 4; ++k)
      for (std::size_t i = 0; i < 5; ++i) y[i] += Rational(a[k - 1]) * x[(i + k) % 5];
    return y;
  };
  try {
    return map_from_ambient(entry, act, Rational(a4_norm(a)));
  } catch (const InvalidInput& e) {
    throw InternalError(std::string("a4 circulant with vanishing constraint failed: ") + e.what());
  }
}

SimilarityMap quaternion_multiplier(const Quaternion& q, QuaternionTarget target, std::size_t m) {
  if (m == 0 || m > 6) throw InvalidInput("quaternion_multiplier: m must be in 1..6");
  const std::string n = std::to_string(4 * m);
  switch (target) {
    case QuaternionTarget::z:
      return quaternion_multiplier(q, "Z" + n);
    case QuaternionTarget::d:
      return quaternion_multiplier(q, "D" + n);
    case QuaternionTarget::d_plus:
      return quaternion_multiplier(q, "D" + n + "+");
  }
  throw InvalidInput("quaternion_multiplier: unknown target");
}

SimilarityMap quaternion_multiplier(const Quaternion& q, std::string_view lattice_name) {
  require_hurwitz(q, "quaternion_multiplier");
  const auto& entry = catalog_lattice(lattice_name);
  const std::size_t dim = entry.lattice->dim();
  const bool family = lattice_name == "E8" || lattice_name.starts_with("Z") || lattice_name.starts_with("D");
  if (!family || dim % 4 != 0 || !entry.generator)
    throw InvalidInput("quaternion_multiplier: expected Z4m, D4m, D4m+ or E8, got '" + std::string(lattice_name) + "'");
  return map_from_ambient(entry, blockwise(right_multiplication_matrix(q.components())), q.norm());
}

SimilarityMap leech_quaternion_multiplier(const Quaternion& q, MogTarget target) {
  require_hurwitz(q, "leech_quaternion_multiplier");
  const auto& entry = catalog_lattice(target == MogTarget::leech ? "Leech" : "BW16");
  const RatMatrix r = right_multiplication_matrix(q.components());
  const AmbientAction act = [r](std::span<const Rational> x) {
    std::vector<Rational> y(x.size());
    for (std::size_t c = 0; c < kMogCols; ++c) {
      const std::size_t* scheme = c % 2 == 0 ? kSchemeEven : kSchemeOdd;
      std::vector<Rational> quat(4);
      for (std::size_t row = 0; row < kMogRows; ++row) quat[scheme[row]] = x[mog_index(row, c)];
      const auto img = apply_matrix(r, quat);
      for (std::size_t row = 0; row < kMogRows; ++row) y[mog_index(row, c)] = img[scheme[row]];
    }
    return y;
  };
  try {
    return map_from_ambient(entry, act, q.norm());
  } catch (const InvalidInput& e) {
    throw InternalError(std::string("MOG quaternion scheme inconsistent with the catalog: ") + e.what());
  }
}

SimilarityMap k12_quaternion_multiplier(long r, long s, long t, long u) {
  if (r == 0 && s == 0 && t == 0 && u == 0) throw InvalidInput("k12_quaternion_multiplier: multiplier must be nonzero");
  const auto& entry = catalog_lattice("K12");
  // Basis 1, i, J = sqrt3 j, K = sqrt3 k: i^2 = -1, J^2 = -3, K = iJ.
  const RatMatrix m = right_multiplication_matrix({Rational(r), Rational(s), Rational(t), Rational(u)}, Rational(-1),
                                                  Rational(-3));
  const AmbientAction act = [m](std::span<const Rational> x) {
    std::vector<Rational> y(x.size());
    for (std::size_t p = 0; p < 3; ++p) {
      const std::size_t c0 = 2 * p, c1 = 2 * p + 1;
      const std::vector<Rational> quat{x[mog_index(0, c0)], x[mog_index(0, c1)], x[mog_index(1, c0)],
                                       x[mog_index(1, c1)]};
      const auto img = apply_matrix(m, quat);
      y[mog_index(0, c0)] = img[0];
      y[mog_index(0, c1)] = img[1];
      for (std::size_t row = 1; row < kMogRows; ++row) {
        y[mog_index(row, c0)] = img[2];
        y[mog_index(row, c1)] = img[3];
      }
    }
    return y;
  };
  const long norm = r * r + s * s + 3 * t * t + 3 * u * u;
  try {
    return map_from_ambient(entry, act, Rational(norm));
  } catch (const InvalidInput& e) {
    throw InternalError(std::string("K12 quaternion action inconsistent with the catalog: ") + e.what());
  }
}

ExtractedSublattice extract_sublattice_basis(SublatticeTarget target) {
  const auto& leech = catalog_lattice("Leech");
  const RatMatrix& g = *leech.generator;
  const RatMatrix& form = *leech.ambient_form;
  const bool bw = target == SublatticeTarget::bw16;

  RatMatrix constraints(24, 12);
  if (bw) {
    std::size_t k = 0;
    for (std::size_t c = 4; c < 6; ++c)
      for (std::size_t row = 0; row < kMogRows; ++row) constraints(mog_index(row, c), k++) = 1;
    RatMatrix trimmed(24, 8);
    for (std::size_t i = 0; i < 24; ++i)
      for (std::size_t j = 0; j < 8; ++j) trimmed(i, j) = constraints(i, j);
    constraints = trimmed;
  } else {
    for (std::size_t c = 0; c < kMogCols; ++c) {
      constraints(mog_index(1, c), 2 * c) = 1;
      constraints(mog_index(2, c), 2 * c) = -1;
      constraints(mog_index(2, c), 2 * c + 1) = 1;
      constraints(mog_index(3, c), 2 * c + 1) = -1;
    }
  }
  const IntMatrix kernel = row_constraints_kernel(g, constraints);
  const std::size_t dim = bw ? 16 : 12;
  if (kernel.rows() != dim) throw InternalError("extract_sublattice_basis: unexpected rank");
  const RatMatrix basis = lll_reduce_rows(to_rational(kernel) * g, form);

  const char* name = bw ? "BW16" : "K12";
  GramLattice lattice(gram_of(basis, form), name);
  const Rational want_det = bw ? Rational(256) : Rational(729);
  if (determinant(lattice) != want_det || !lattice.is_even())
    throw InternalError(std::string("extract_sublattice_basis: invariants of ") + name + " do not match");
  if (!short_vectors(lattice, Rational(2)).empty())
    throw InternalError(std::string("extract_sublattice_basis: ") + name + " has vectors of norm 2");
  return {basis, std::move(lattice)};
}

}  // namespace simlat
