#include <doctest.h>

#include <random>

#include "simlat/errors.hpp"
#include "simlat/matrix.hpp"
#include "simlat/reduction.hpp"

using namespace simlat;

namespace {

IntMatrix int_matrix(std::initializer_list<std::initializer_list<long>> rows) {
  IntMatrix m(rows.size(), rows.begin()->size());
  std::size_t i = 0;
  for (const auto& r : rows) {
    std::size_t j = 0;
    for (long v : r) m(i, j++) = v;
    ++i;
  }
  return m;
}

IntMatrix random_matrix(std::mt19937_64& rng, std::size_t rows, std::size_t cols, long range) {
  std::uniform_int_distribution<long> d(-range, range);
  IntMatrix m(rows, cols);
  for (std::size_t i = 0; i < rows; ++i)
    for (std::size_t j = 0; j < cols; ++j) m(i, j) = d(rng);
  return m;
}

// Same Z-span: each set of rows lies in the span of the other.
bool same_row_lattice(const IntMatrix& a, const IntMatrix& b) {
  auto inside = [](const IntMatrix& rows, const IntMatrix& basis) {
    const RatMatrix rb = to_rational(basis);
    for (std::size_t i = 0; i < rows.rows(); ++i) {
      std::vector<Rational> v;
      for (const auto& x : rows.row(i)) v.emplace_back(x);
      const auto c = coordinates_in_rows(rb, v);
      if (!c) return false;
      for (const auto& x : *c)
        if (x.get_den() != 1) return false;
    }
    return true;
  };
  return inside(a, b) && inside(b, a);
}

}  // namespace

TEST_CASE("determinant, inverse, rank") {
  const IntMatrix m = int_matrix({{2, -1, 0}, {-1, 2, -1}, {0, -1, 2}});
  CHECK(determinant(m) == 4);
  CHECK(determinant(to_rational(m)) == 4);
  const auto inv = inverse(to_rational(m));
  REQUIRE(inv);
  CHECK(*inv * to_rational(m) == RatMatrix::identity(3));
  CHECK(rank(to_rational(int_matrix({{1, 2}, {2, 4}}))) == 1);
  CHECK_FALSE(inverse(to_rational(int_matrix({{1, 2}, {2, 4}}))));
  CHECK_THROWS_AS(determinant(IntMatrix(2, 3)), InvalidInput);

  std::mt19937_64 rng(1);
  for (int t = 0; t < 50; ++t) {
    const IntMatrix a = random_matrix(rng, 4, 4, 9);
    CHECK(determinant(a) == determinant(to_rational(a)));
  }
}

TEST_CASE("leading minors and integrality helpers") {
  const auto minors = leading_minors(to_rational(int_matrix({{2, 1}, {1, 2}})));
  REQUIRE(minors.size() == 2);
  CHECK(minors[0] == 2);
  CHECK(minors[1] == 3);
  RatMatrix half(1, 1);
  half(0, 0) = make_rational(1, 2);
  CHECK_FALSE(is_integral(half));
  CHECK_THROWS_AS(to_integer(half), InvalidInput);
}

TEST_CASE("coordinates_in_rows") {
  const RatMatrix basis = to_rational(int_matrix({{1, 1, 0}, {0, 1, 1}}));
  const std::vector<Rational> v{Rational(2), Rational(5), Rational(3)};
  const auto c = coordinates_in_rows(basis, v);
  REQUIRE(c);
  CHECK((*c)[0] == 2);
  CHECK((*c)[1] == 3);
  const std::vector<Rational> w{Rational(1), Rational(0), Rational(0)};
  CHECK_FALSE(coordinates_in_rows(basis, w));
  CHECK_THROWS_AS(coordinates_in_rows(to_rational(int_matrix({{1, 2}, {2, 4}})), std::vector<Rational>{1, 2}),
                  InvalidInput);
}

TEST_CASE("column HNF") {
  std::mt19937_64 rng(2);
  for (int t = 0; t < 40; ++t) {
    IntMatrix b = random_matrix(rng, 3, 3, 6);
    if (determinant(b) == 0) continue;
    const IntMatrix h = column_hnf(b);
    for (std::size_t i = 0; i < 3; ++i) {
      CHECK(h(i, i) > 0);
      for (std::size_t j = 0; j < i; ++j) CHECK(h(i, j) == 0);
      for (std::size_t j = i + 1; j < 3; ++j) {
        CHECK(h(i, j) >= 0);
        CHECK(h(i, j) < h(i, i));
      }
    }
    CHECK(abs(determinant(h)) == abs(determinant(b)));
    CHECK(same_row_lattice(h.transpose(), b.transpose()));
  }
  CHECK_THROWS_AS(column_hnf(int_matrix({{1, 2}, {2, 4}})), InvalidInput);
}

TEST_CASE("row HNF and integer left kernel") {
  const IntMatrix gens = int_matrix({{2, 0}, {0, 2}, {1, 1}, {4, 6}});
  const IntMatrix h = row_hnf(gens);
  CHECK(h.rows() == 2);
  // gens span {(a, b) : a = b (mod 2)}, of index 2 in Z^2.
  CHECK(abs(determinant(h)) == 2);
  for (std::size_t i = 0; i < gens.rows(); ++i) {
    std::vector<Rational> v;
    for (const auto& x : gens.row(i)) v.emplace_back(x);
    const auto c = coordinates_in_rows(to_rational(h), v);
    REQUIRE(c);
    for (const auto& x : *c) CHECK(x.get_den() == 1);
  }

  std::mt19937_64 rng(3);
  for (int t = 0; t < 30; ++t) {
    const IntMatrix m = random_matrix(rng, 5, 2, 5);
    const IntMatrix k = integer_left_kernel(m);
    const IntMatrix prod = k * m;
    for (std::size_t i = 0; i < prod.rows(); ++i)
      for (const auto& x : prod.row(i)) CHECK(x == 0);
    CHECK(k.rows() == 5 - rank(to_rational(m)));
  }
  // Saturation: the kernel of (2, 4)^T is spanned by (2, -1), not a multiple.
  const IntMatrix k = integer_left_kernel(int_matrix({{2}, {4}}));
  REQUIRE(k.rows() == 1);
  CHECK(abs(k(0, 0)) == 2);
  CHECK(abs(k(0, 1)) == 1);
}

TEST_CASE("LLL on Gram matrices") {
  std::mt19937_64 rng(4);
  for (int t = 0; t < 30; ++t) {
    IntMatrix basis = random_matrix(rng, 4, 4, 20);
    if (determinant(basis) == 0) continue;
    const RatMatrix gram = to_rational(basis * basis.transpose());
    const LllResult r = lll_reduce(gram);
    const RatMatrix u = to_rational(r.transform);
    CHECK(u.transpose() * gram * u == r.gram);
    CHECK(abs(determinant(r.transform)) == 1);
    // Size reduction and the Lovasz condition, recomputed via Gram-Schmidt.
    const std::size_t n = 4;
    std::vector<std::vector<Rational>> mu(n, std::vector<Rational>(n));
    std::vector<Rational> bstar(n);
    for (std::size_t i = 0; i < n; ++i) {
      bstar[i] = r.gram(i, i);
      for (std::size_t j = 0; j < i; ++j) {
        Rational s = r.gram(i, j);
        for (std::size_t k = 0; k < j; ++k) s -= mu[i][k] * mu[j][k] * bstar[k];
        mu[i][j] = s / bstar[j];
        bstar[i] -= mu[i][j] * mu[i][j] * bstar[j];
        CHECK(abs(mu[i][j]) <= make_rational(1, 2));
      }
      if (i > 0) CHECK(bstar[i] >= (make_rational(3, 4) - mu[i][i - 1] * mu[i][i - 1]) * bstar[i - 1]);
    }
  }
}
