#include <doctest.h>

#include <filesystem>
#include <fstream>
#include <sstream>

#include "simlat/errors.hpp"
#include "simlat/gram_io.hpp"
#include "simlat/lattice.hpp"
#include "support.hpp"

using namespace simlat;

namespace {

RatMatrix gram2(long a, long b, long c) {
  RatMatrix g(2, 2);
  g(0, 0) = a;
  g(0, 1) = g(1, 0) = b;
  g(1, 1) = c;
  return g;
}

IntMatrix mat2(long a, long b, long c, long d) {
  IntMatrix m(2, 2);
  m(0, 0) = a;
  m(0, 1) = b;
  m(1, 0) = c;
  m(1, 1) = d;
  return m;
}

}  // namespace

TEST_CASE("GramLattice validation") {
  CHECK_NOTHROW(GramLattice(gram2(2, -1, 2)));
  CHECK_THROWS_AS(GramLattice(gram2(1, 2, 1)), InvalidInput);  // indefinite
  RatMatrix asym = gram2(2, 1, 2);
  asym(0, 1) = 0;
  CHECK_THROWS_AS(GramLattice{asym}, InvalidInput);
  CHECK_THROWS_AS(GramLattice(RatMatrix(0, 0)), InvalidInput);
  CHECK_THROWS_AS(GramLattice(gram2(1, 0, 1), "", LatticeMeta{true, Rational(-1)}), InvalidInput);

  const GramLattice a2(gram2(2, -1, 2), "A2");
  CHECK(a2.is_even());
  CHECK(determinant(a2) == 3);
  CHECK_FALSE(GramLattice(gram2(1, 0, 4)).is_even());
  const LatticeVector v{{1, 1}};
  CHECK(norm(a2, v) == 2);
}

TEST_CASE("integralize") {
  RatMatrix g = gram2(1, 0, 1);
  g(0, 0) = make_rational(1, 2);
  g(1, 1) = make_rational(3, 2);
  const Integralized i = integralize(GramLattice(g));
  CHECK(i.scale == 2);
  CHECK(i.lattice.gram()(1, 1) == 3);

  const Integralized j = integralize(GramLattice(gram2(4, 2, 6)));
  CHECK(j.scale == make_rational(1, 2));
  CHECK(int64_gram(j.lattice) == std::vector<std::int64_t>{2, 1, 1, 3});
}

TEST_CASE("similarity maps") {
  auto z2 = std::make_shared<GramLattice>(gram2(1, 0, 1), "Z2");
  const auto m = SimilarityMap::create(z2, mat2(1, -1, 1, 1), Rational(2));
  CHECK(index_of(m) == 2);
  CHECK(test_support::independently_valid(m));
  CHECK_THROWS_AS(SimilarityMap::create(z2, mat2(1, 1, 1, 2), Rational(2)), InvalidInput);
  CHECK_THROWS_AS(SimilarityMap::create(z2, mat2(1, 0, 0, 1), Rational(0)), InvalidInput);
  CHECK_FALSE(verify_similarity(*z2, mat2(2, 0, 0, 1), Rational(2)));

  const auto sq = compose(m, m);
  CHECK(sq.norm() == 4);
  CHECK(sq.matrix() == mat2(0, -2, 2, 0));
  CHECK(test_support::independently_valid(sq));

  auto other = std::make_shared<GramLattice>(gram2(1, 0, 2), "other");
  CHECK_THROWS_AS(compose(m, SimilarityMap::create(other, mat2(1, 0, 0, 1), Rational(1))), InvalidInput);
}

TEST_CASE("integral index") {
  CHECK(*integral_index(Rational(5), 4) == 25);
  CHECK_FALSE(integral_index(Rational(2), 3));
  CHECK(*integral_index(Rational(4), 3) == 8);
  CHECK_FALSE(integral_index(make_rational(1, 2), 2));
}

TEST_CASE("coset representatives") {
  const auto reps = coset_representatives(mat2(1, -1, 1, 1));
  REQUIRE(reps.size() == 2);
  CHECK(reps[0].coords == std::vector<Coord>{0, 0});
  CHECK(reps[1].coords == std::vector<Coord>{1, 0});

  const IntMatrix b = mat2(3, 1, -1, 2);
  const auto r7 = coset_representatives(b);
  CHECK(r7.size() == 7);
  for (std::size_t i = 0; i < r7.size(); ++i)
    for (std::size_t j = i + 1; j < r7.size(); ++j) CHECK_FALSE(same_coset(b, r7[i], r7[j]));
  CHECK(same_coset(b, LatticeVector{{3, -1}}, LatticeVector{{0, 0}}));
  CHECK_THROWS_AS(coset_representatives(mat2(1, 2, 2, 4)), InvalidInput);
}

TEST_CASE("gram file round trip") {
  RatMatrix g = gram2(2, -1, 2);
  g(1, 1) = make_rational(5, 3);
  std::stringstream ss;
  write_gram(ss, g);
  const GramLattice back = read_gram(ss, "x");
  CHECK(back.gram() == g);

  const auto path = std::filesystem::temp_directory_path() / "simlat_roundtrip.gram";
  save_gram_file(path.string(), g);
  const GramLattice loaded = load_gram_file(path.string());
  CHECK(loaded.gram() == g);
  CHECK(loaded.name() == "file:" + path.string());
  std::filesystem::remove(path);

  std::stringstream bad1("2\n1 0\n");
  CHECK_THROWS_AS(read_gram(bad1), InvalidInput);
  std::stringstream bad2("2\n1 0\n0\n");
  CHECK_THROWS_AS(read_gram(bad2), InvalidInput);
  std::stringstream bad3("2\n1 2\n2 1\n");
  CHECK_THROWS_AS(read_gram(bad3), InvalidInput);
  CHECK_THROWS_AS(load_gram_file("/nonexistent/none.gram"), InvalidInput);
}
