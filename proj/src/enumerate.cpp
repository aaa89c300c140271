#include "simlat/enumerate.hpp"

#include <algorithm>
#include <cmath>

#include "simlat/reduction.hpp"

namespace simlat {

namespace {

using i128 = __int128;

struct Enumerator {
  std::size_t n;
  std::vector<std::int64_t> gram;  // reduced, integral, row-major
  std::vector<std::int64_t> transform;  // U, row-major; x = U y
  std::vector<double> diag;        // LDL^T pivots
  std::vector<double> mu;          // mu[j * n + i], j > i
  std::int64_t bound;
  double slack;
  std::uint64_t budget;
  std::uint64_t nodes = 0;

  std::vector<std::int64_t> y;
  std::vector<double> partial;  // partial[i] = sum_{j >= i} D_j (y_j + c_j)^2
  std::vector<std::pair<std::vector<Coord>, std::int64_t>> found;

  std::int64_t exact_norm() const {
    i128 s = 0;
    for (std::size_t i = 0; i < n; ++i) {
      if (y[i] == 0) continue;
      i128 row = 0;
      for (std::size_t j = 0; j < n; ++j) row += static_cast<i128>(gram[i * n + j]) * y[j];
      s += row * y[i];
    }
    return static_cast<std::int64_t>(s);
  }

  void emit(std::int64_t value) {
    std::vector<Coord> x(n);
    for (std::size_t i = 0; i < n; ++i) {
      i128 s = 0;
      for (std::size_t j = 0; j < n; ++j) s += static_cast<i128>(transform[i * n + j]) * y[j];
      if (s > INT64_MAX / 4 || s < -(INT64_MAX / 4)) throw InternalError("short_vectors: coordinate overflow");
      x[i] = static_cast<Coord>(s);
    }
    auto first = std::find_if(x.begin(), x.end(), [](Coord c) { return c != 0; });
    if (first == x.end() || *first < 0) return;
    found.emplace_back(std::move(x), value);
  }

  void recurse(std::size_t level) {
    const double above = (level + 1 < n) ? partial[level + 1] : 0.0;
    const double remaining = static_cast<double>(bound) - above + slack;
    if (remaining < 0) return;
    double center = 0;
    for (std::size_t j = level + 1; j < n; ++j) center -= mu[j * n + level] * static_cast<double>(y[j]);
    const double radius = std::sqrt(remaining / diag[level]) + 1e-9;
    const auto lo = static_cast<std::int64_t>(std::ceil(center - radius));
    const auto hi = static_cast<std::int64_t>(std::floor(center + radius));
    for (std::int64_t v = lo; v <= hi; ++v) {
      if (++nodes > budget) throw BudgetExceeded("short_vectors: node budget exceeded", nodes);
      y[level] = v;
      const double t = static_cast<double>(v) - center;
      partial[level] = above + diag[level] * t * t;
      if (level == 0) {
        const std::int64_t value = exact_norm();
        if (value > 0 && value <= bound) emit(value);
      } else {
        recurse(level - 1);
      }
    }
    y[level] = 0;
  }
};

}  // namespace

std::vector<ShortVector> short_vectors(const GramLattice& lattice, const Rational& bound,
                                       const EnumOptions& options) {
  if (bound < 0) throw InvalidInput("short_vectors: bound must be nonnegative");
  const std::size_t n = lattice.dim();
  const Integralized integral = integralize(lattice);
  const Rational scaled_bound = integral.scale * bound;
  Integer int_bound;
  mpz_fdiv_q(int_bound.get_mpz_t(), scaled_bound.get_num_mpz_t(), scaled_bound.get_den_mpz_t());
  if (int_bound == 0) return {};
  if (int_bound > Integer(1) << 40) throw InvalidInput("short_vectors: bound too large");

  const LllResult reduced = lll_reduce(integral.lattice.gram());
  const GramLattice reduced_lattice(reduced.gram);

  Enumerator e;
  e.n = n;
  e.gram = int64_gram(reduced_lattice);
  e.transform.resize(n * n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) e.transform[i * n + j] = to_int64(reduced.transform(i, j));
  e.bound = int_bound.get_si();
  e.slack = 1e-7 * (static_cast<double>(e.bound) + 1.0);
  e.budget = options.node_budget;

  // Exact LDL^T of the reduced Gram matrix.
  RatMatrix l = RatMatrix::identity(n);
  std::vector<Rational> d(n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < i; ++j) {
      Rational s = reduced.gram(i, j);
      for (std::size_t k = 0; k < j; ++k) s -= l(i, k) * l(j, k) * d[k];
      l(i, j) = s / d[j];
    }
    Rational s = reduced.gram(i, i);
    for (std::size_t k = 0; k < i; ++k) s -= l(i, k) * l(i, k) * d[k];
    d[i] = s;
  }
  e.diag.resize(n);
  e.mu.assign(n * n, 0.0);
  for (std::size_t i = 0; i < n; ++i) {
    e.diag[i] = d[i].get_d();
    for (std::size_t j = i + 1; j < n; ++j) e.mu[j * n + i] = l(j, i).get_d();
  }
  e.y.assign(n, 0);
  e.partial.assign(n, 0.0);
  e.recurse(n - 1);

  std::sort(e.found.begin(), e.found.end(), [](const auto& a, const auto& b) {
    if (a.second != b.second) return a.second < b.second;
    return a.first < b.first;
  });
  std::vector<ShortVector> out;
  out.reserve(e.found.size());
  for (auto& [coords, value] : e.found) {
    out.push_back({LatticeVector{std::move(coords)}, Rational(Integer(static_cast<long>(value))) / integral.scale});
  }
  return out;
}

}  // namespace simlat
