#include "simlat/reduction.hpp"

#include <algorithm>
#include <optional>
#include <utility>

namespace simlat {

namespace {

struct Bezout {
  Integer g, x, y;  // g = x a + y b, g >= 0
};

Bezout bezout(const Integer& a, const Integer& b) {
  Bezout r;
  mpz_gcdext(r.g.get_mpz_t(), r.x.get_mpz_t(), r.y.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return r;
}

Integer floor_div(const Integer& a, const Integer& b) {
  Integer q;
  mpz_fdiv_q(q.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return q;
}

// Rows r1 <- x r1 + y r2, r2 <- (a/g) r2 - (b/g) r1 where a = r1[c], b = r2[c].
// Leaves r2[c] = 0 and r1[c] = gcd. Unimodular.
void combine(std::span<Integer> r1, std::span<Integer> r2, std::size_t c) {
  const Integer a = r1[c], b = r2[c];
  Bezout bz = bezout(a, b);
  const Integer ag = a / bz.g, bg = b / bz.g;
  for (std::size_t j = 0; j < r1.size(); ++j) {
    Integer n1 = bz.x * r1[j] + bz.y * r2[j];
    Integer n2 = ag * r2[j] - bg * r1[j];
    r1[j] = std::move(n1);
    r2[j] = std::move(n2);
  }
}

}  // namespace

IntMatrix column_hnf(const IntMatrix& b) {
  if (!b.square()) throw InvalidInput("column_hnf: matrix must be square");
  const std::size_t n = b.rows();
  // Work on rows of the transpose so the column operations become row operations.
  IntMatrix t = b.transpose();
  for (std::size_t ii = n; ii-- > 0;) {
    // Clear entries t(j, ii) for j < ii into t(ii, ii).
    for (std::size_t j = 0; j < ii; ++j) {
      if (t(j, ii) == 0) continue;
      combine(t.row(ii), t.row(j), ii);
    }
    if (t(ii, ii) == 0) throw InvalidInput("column_hnf: singular matrix");
    if (t(ii, ii) < 0)
      for (auto& x : t.row(ii)) x = -x;
  }
  for (std::size_t ii = n; ii-- > 0;) {
    for (std::size_t j = ii + 1; j < n; ++j) {
      Integer q = floor_div(t(j, ii), t(ii, ii));
      if (q == 0) continue;
      for (std::size_t k = 0; k <= ii; ++k) t(j, k) -= q * t(ii, k);
    }
  }
  return t.transpose();
}

IntMatrix row_hnf(const IntMatrix& generators) {
  const std::size_t d = generators.cols();
  std::vector<std::optional<std::vector<Integer>>> pivot(d);
  for (std::size_t g = 0; g < generators.rows(); ++g) {
    std::vector<Integer> v(generators.row(g).begin(), generators.row(g).end());
    for (std::size_t c = 0; c < d; ++c) {
      if (v[c] == 0) continue;
      if (!pivot[c]) {
        if (v[c] < 0)
          for (auto& x : v) x = -x;
        pivot[c] = std::move(v);
        break;
      }
      combine(*pivot[c], v, c);
      if ((*pivot[c])[c] < 0)
        for (auto& x : *pivot[c]) x = -x;
      // Keep the tail of v small.
      for (std::size_t c2 = c + 1; c2 < d; ++c2) {
        if (!pivot[c2] || v[c2] == 0) continue;
        Integer q = floor_div(v[c2], (*pivot[c2])[c2]);
        if (q != 0)
          for (std::size_t k = 0; k < d; ++k) v[k] -= q * (*pivot[c2])[k];
      }
    }
  }
  std::vector<std::pair<std::size_t, std::vector<Integer>>> rows;
  for (std::size_t c = 0; c < d; ++c)
    if (pivot[c]) rows.emplace_back(c, std::move(*pivot[c]));
  // Reduce entries above each pivot.
  for (std::size_t r = rows.size(); r-- > 0;) {
    const auto& [c, p] = rows[r];
    for (std::size_t s = 0; s < r; ++s) {
      Integer q = floor_div(rows[s].second[c], p[c]);
      if (q != 0)
        for (std::size_t k = 0; k < d; ++k) rows[s].second[k] -= q * p[k];
    }
  }
  IntMatrix out(rows.size(), d);
  for (std::size_t r = 0; r < rows.size(); ++r)
    for (std::size_t k = 0; k < d; ++k) out(r, k) = rows[r].second[k];
  return out;
}

IntMatrix integer_left_kernel(const IntMatrix& m) {
  const std::size_t rows = m.rows(), k = m.cols();
  IntMatrix a(rows, k + rows);
  for (std::size_t i = 0; i < rows; ++i) {
    for (std::size_t j = 0; j < k; ++j) a(i, j) = m(i, j);
    a(i, k + i) = 1;
  }
  std::size_t r = 0;
  for (std::size_t c = 0; c < k && r < rows; ++c) {
    std::size_t piv = r;
    while (piv < rows && a(piv, c) == 0) ++piv;
    if (piv == rows) continue;
    if (piv != r)
      for (std::size_t j = 0; j < a.cols(); ++j) std::swap(a(piv, j), a(r, j));
    for (std::size_t i = r + 1; i < rows; ++i) {
      if (a(i, c) == 0) continue;
      combine(a.row(r), a.row(i), c);
    }
    ++r;
  }
  IntMatrix kernel(rows - r, rows);
  for (std::size_t i = r; i < rows; ++i)
    for (std::size_t j = 0; j < rows; ++j) kernel(i - r, j) = a(i, k + j);
  return row_hnf(kernel);
}

namespace {

Integer round_rational(const Rational& x) {
  // floor(x + 1/2)
  Rational shifted = x + Rational(1, 2);
  Integer q;
  mpz_fdiv_q(q.get_mpz_t(), shifted.get_num_mpz_t(), shifted.get_den_mpz_t());
  return q;
}

}  // namespace

LllResult lll_reduce(const RatMatrix& gram) {
  const std::size_t n = gram.rows();
  RatMatrix g = gram;
  IntMatrix u = IntMatrix::identity(n);
  if (n <= 1) return {g, u};

  const Rational delta(3, 4);
  RatMatrix mu(n, n);
  std::vector<Rational> bstar(n);

  auto reduce = [&](std::size_t k, std::size_t l) {
    if (abs(mu(k, l)) * 2 <= 1) return;
    const Integer q = round_rational(mu(k, l));
    const Rational qr(q);
    // b_k <- b_k - q b_l
    const Rational gkk = g(k, k) - 2 * qr * g(k, l) + qr * qr * g(l, l);
    for (std::size_t j = 0; j < n; ++j) {
      if (j == k) continue;
      g(k, j) -= qr * g(l, j);
      g(j, k) = g(k, j);
    }
    g(k, k) = gkk;
    for (std::size_t i = 0; i < n; ++i) u(i, k) -= q * u(i, l);
    mu(k, l) -= qr;
    for (std::size_t i = 0; i < l; ++i) mu(k, i) -= qr * mu(l, i);
  };

  auto swap_rows = [&](std::size_t k, std::size_t kmax) {
    for (std::size_t j = 0; j < n; ++j) std::swap(g(k, j), g(k - 1, j));
    for (std::size_t j = 0; j < n; ++j) std::swap(g(j, k), g(j, k - 1));
    for (std::size_t i = 0; i < n; ++i) std::swap(u(i, k), u(i, k - 1));
    for (std::size_t j = 0; j + 1 < k; ++j) std::swap(mu(k, j), mu(k - 1, j));
    const Rational m = mu(k, k - 1);
    const Rational b = bstar[k] + m * m * bstar[k - 1];
    mu(k, k - 1) = m * bstar[k - 1] / b;
    bstar[k] = bstar[k - 1] * bstar[k] / b;
    bstar[k - 1] = b;
    for (std::size_t i = k + 1; i <= kmax; ++i) {
      const Rational t = mu(i, k);
      mu(i, k) = mu(i, k - 1) - m * t;
      mu(i, k - 1) = t + mu(k, k - 1) * mu(i, k);
    }
  };

  std::size_t k = 1, kmax = 0;
  bstar[0] = g(0, 0);
  while (k < n) {
    if (k > kmax) {
      kmax = k;
      for (std::size_t j = 0; j < k; ++j) {
        Rational s = g(k, j);
        for (std::size_t i = 0; i < j; ++i) s -= mu(j, i) * mu(k, i) * bstar[i];
        mu(k, j) = s / bstar[j];
      }
      Rational s = g(k, k);
      for (std::size_t j = 0; j < k; ++j) s -= mu(k, j) * mu(k, j) * bstar[j];
      bstar[k] = s;
      if (bstar[k] <= 0) throw InvalidInput("lll_reduce: Gram matrix is not positive definite");
    }
    reduce(k, k - 1);
    if (bstar[k] < (delta - mu(k, k - 1) * mu(k, k - 1)) * bstar[k - 1]) {
      swap_rows(k, kmax);
      k = std::max<std::size_t>(1, k - 1);
    } else {
      for (std::size_t l = k - 1; l-- > 0;) reduce(k, l);
      ++k;
    }
  }
  return {g, u};
}

}  // namespace simlat
