#include "simlat/matrix.hpp"

#include <utility>

namespace simlat {

RatMatrix to_rational(const IntMatrix& m) {
  RatMatrix r(m.rows(), m.cols());
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) r(i, j) = Rational(m(i, j));
  return r;
}

bool is_integral(const RatMatrix& m) {
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j)
      if (m(i, j).get_den() != 1) return false;
  return true;
}

IntMatrix to_integer(const RatMatrix& m) {
  IntMatrix r(m.rows(), m.cols());
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) {
      if (m(i, j).get_den() != 1) throw InvalidInput("matrix entry is not integral: " + to_string(m(i, j)));
      r(i, j) = m(i, j).get_num();
    }
  return r;
}

bool is_symmetric(const RatMatrix& m) {
  if (!m.square()) return false;
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < i; ++j)
      if (m(i, j) != m(j, i)) return false;
  return true;
}

namespace {

// In-place row echelon form; returns (rank, determinant sign/scale product).
// Rows are swapped to find nonzero pivots.
std::pair<std::size_t, Rational> eliminate(RatMatrix& a) {
  Rational det = 1;
  std::size_t r = 0;
  for (std::size_t c = 0; c < a.cols() && r < a.rows(); ++c) {
    std::size_t piv = r;
    while (piv < a.rows() && a(piv, c) == 0) ++piv;
    if (piv == a.rows()) {
      det = 0;
      continue;
    }
    if (piv != r) {
      for (std::size_t j = 0; j < a.cols(); ++j) std::swap(a(piv, j), a(r, j));
      det = -det;
    }
    det *= a(r, c);
    for (std::size_t i = r + 1; i < a.rows(); ++i) {
      if (a(i, c) == 0) continue;
      Rational f = a(i, c) / a(r, c);
      for (std::size_t j = c; j < a.cols(); ++j) a(i, j) -= f * a(r, j);
    }
    ++r;
  }
  return {r, det};
}

}  // namespace

Rational determinant(const RatMatrix& m) {
  if (!m.square()) throw InvalidInput("determinant of non-square matrix");
  if (m.rows() == 0) return 1;
  RatMatrix a = m;
  auto [r, det] = eliminate(a);
  return r < m.rows() ? Rational(0) : det;
}

Integer determinant(const IntMatrix& m) {
  if (!m.square()) throw InvalidInput("determinant of non-square matrix");
  const std::size_t n = m.rows();
  if (n == 0) return 1;
  // Bareiss fraction-free elimination.
  IntMatrix a = m;
  Integer prev = 1;
  int sign = 1;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (a(k, k) == 0) {
      std::size_t piv = k + 1;
      while (piv < n && a(piv, k) == 0) ++piv;
      if (piv == n) return 0;
      for (std::size_t j = 0; j < n; ++j) std::swap(a(piv, j), a(k, j));
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i)
      for (std::size_t j = k + 1; j < n; ++j) {
        Integer t = a(i, j) * a(k, k) - a(i, k) * a(k, j);
        mpz_divexact(t.get_mpz_t(), t.get_mpz_t(), prev.get_mpz_t());
        a(i, j) = t;
      }
    prev = a(k, k);
  }
  return sign * a(n - 1, n - 1);
}

std::size_t rank(const RatMatrix& m) {
  RatMatrix a = m;
  return eliminate(a).first;
}

std::optional<RatMatrix> inverse(const RatMatrix& m) {
  if (!m.square()) throw InvalidInput("inverse of non-square matrix");
  const std::size_t n = m.rows();
  RatMatrix a(n, 2 * n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) a(i, j) = m(i, j);
    a(i, n + i) = 1;
  }
  for (std::size_t c = 0; c < n; ++c) {
    std::size_t piv = c;
    while (piv < n && a(piv, c) == 0) ++piv;
    if (piv == n) return std::nullopt;
    if (piv != c)
      for (std::size_t j = 0; j < 2 * n; ++j) std::swap(a(piv, j), a(c, j));
    Rational inv = 1 / a(c, c);
    for (std::size_t j = 0; j < 2 * n; ++j) a(c, j) *= inv;
    for (std::size_t i = 0; i < n; ++i) {
      if (i == c || a(i, c) == 0) continue;
      Rational f = a(i, c);
      for (std::size_t j = 0; j < 2 * n; ++j) a(i, j) -= f * a(c, j);
    }
  }
  RatMatrix out(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) out(i, j) = a(i, n + j);
  return out;
}

std::vector<Rational> leading_minors(const RatMatrix& m) {
  if (!m.square()) throw InvalidInput("leading minors of non-square matrix");
  // Gaussian elimination without pivoting: minor_k = product of the first k pivots
  // as long as no pivot vanishes.
  const std::size_t n = m.rows();
  RatMatrix a = m;
  std::vector<Rational> minors;
  Rational prod = 1;
  for (std::size_t k = 0; k < n; ++k) {
    if (a(k, k) == 0) {
      // Fall back to explicit minors for the remaining orders.
      for (std::size_t kk = k; kk < n; ++kk) {
        RatMatrix sub(kk + 1, kk + 1);
        for (std::size_t i = 0; i <= kk; ++i)
          for (std::size_t j = 0; j <= kk; ++j) sub(i, j) = m(i, j);
        minors.push_back(determinant(sub));
      }
      return minors;
    }
    prod *= a(k, k);
    minors.push_back(prod);
    for (std::size_t i = k + 1; i < n; ++i) {
      if (a(i, k) == 0) continue;
      Rational f = a(i, k) / a(k, k);
      for (std::size_t j = k; j < n; ++j) a(i, j) -= f * a(k, j);
    }
  }
  return minors;
}

std::optional<std::vector<Rational>> coordinates_in_rows(const RatMatrix& basis,
                                                        std::span<const Rational> v) {
  const std::size_t k = basis.rows(), d = basis.cols();
  if (v.size() != d) throw InvalidInput("coordinates_in_rows: dimension mismatch");
  // Solve basis^T x = v via elimination on [basis^T | v].
  RatMatrix a(d, k + 1);
  for (std::size_t i = 0; i < d; ++i) {
    for (std::size_t j = 0; j < k; ++j) a(i, j) = basis(j, i);
    a(i, k) = v[i];
  }
  std::vector<std::size_t> pivot_col;
  std::size_t r = 0;
  for (std::size_t c = 0; c < k && r < d; ++c) {
    std::size_t piv = r;
    while (piv < d && a(piv, c) == 0) ++piv;
    if (piv == d) throw InvalidInput("coordinates_in_rows: basis rows are dependent");
    if (piv != r)
      for (std::size_t j = 0; j <= k; ++j) std::swap(a(piv, j), a(r, j));
    Rational inv = 1 / a(r, c);
    for (std::size_t j = c; j <= k; ++j) a(r, j) *= inv;
    for (std::size_t i = 0; i < d; ++i) {
      if (i == r || a(i, c) == 0) continue;
      Rational f = a(i, c);
      for (std::size_t j = c; j <= k; ++j) a(i, j) -= f * a(r, j);
    }
    pivot_col.push_back(c);
    ++r;
  }
  if (r < k) throw InvalidInput("coordinates_in_rows: basis rows are dependent");
  for (std::size_t i = r; i < d; ++i)
    if (a(i, k) != 0) return std::nullopt;
  std::vector<Rational> x(k);
  for (std::size_t i = 0; i < k; ++i) x[i] = a(i, k);
  return x;
}

}  // namespace simlat
