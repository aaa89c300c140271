#include <doctest.h>

#include "simlat/catalog.hpp"
#include "simlat/errors.hpp"
#include "simlat/invariants.hpp"
#include "simlat/kernels.hpp"
#include "simlat/search.hpp"
#include "support.hpp"

using namespace simlat;

namespace {

LatticePtr lat(const char* name) { return catalog_lattice(name).lattice; }

}  // namespace

TEST_CASE("find_similarity: examples") {
  const auto a4_5 = find_similarity(lat("A4"), Rational(5));
  REQUIRE(a4_5.status == SearchStatus::found);
  CHECK(a4_5.witness->matrix().rows() == 4);
  CHECK(index_of(*a4_5.witness) == 25);
  CHECK(test_support::independently_valid(*a4_5.witness));

  CHECK(find_similarity(lat("A4"), Rational(3)).status == SearchStatus::none);

  const auto id = find_similarity(lat("Z2"), Rational(1));
  REQUIRE(id.status == SearchStatus::found);
  CHECK(test_support::independently_valid(*id.witness));
  CHECK(index_of(*id.witness) == 1);

  CHECK(find_similarity(lat("E6"), Rational(2)).status == SearchStatus::none);
  CHECK(find_similarity(lat("diag14"), Rational(2)).status == SearchStatus::none);
  CHECK(find_similarity(lat("Z3"), Rational(2)).status == SearchStatus::none);  // 2^{3/2} is not an integer
  CHECK(find_similarity(lat("Z3"), Rational(4)).status == SearchStatus::found);
  CHECK_THROWS_AS(find_similarity(lat("Z2"), Rational(0)), InvalidInput);
}

TEST_CASE("find_similarity: rational Gram matrices") {
  RatMatrix g(2, 2);
  g(0, 0) = make_rational(1, 3);
  g(1, 1) = make_rational(1, 3);
  auto l = std::make_shared<GramLattice>(g, "Z2/3");
  const auto out = find_similarity(l, Rational(5));
  REQUIRE(out.status == SearchStatus::found);
  CHECK(test_support::independently_valid(*out.witness));
}

TEST_CASE("find_similarity: budget") {
  SearchOptions tiny;
  tiny.budget = 3;
  const auto out = find_similarity(lat("E8"), Rational(3), tiny);
  CHECK(out.status == SearchStatus::budget_exceeded);
  CHECK_THROWS_AS(norm_spectrum(lat("E8"), 3, SpectrumMethod::search, tiny), SpectrumBudgetExceeded);
}

TEST_CASE("enumerate_similarities") {
  // Z2 has 4 norm-1 maps with det +1 and 4 with det -1; one sign of the first
  // column is fixed, leaving 4.
  std::vector<SimilarityMap> maps;
  const auto out = enumerate_similarities(lat("Z2"), Rational(1), 100, [&](const SimilarityMap& m) {
    maps.push_back(m);
    return true;
  });
  CHECK(out.status == SearchStatus::found);
  CHECK(maps.size() == 4);
  for (const auto& m : maps) CHECK(test_support::independently_valid(m));

  std::size_t seen = 0;
  enumerate_similarities(lat("A2"), Rational(1), 100, [&](const SimilarityMap&) { return ++seen < 2; });
  CHECK(seen == 2);

  std::size_t capped = 0;
  enumerate_similarities(lat("A2"), Rational(1), 3, [&](const SimilarityMap&) {
    ++capped;
    return true;
  });
  CHECK(capped == 3);
}

TEST_CASE("search results do not depend on the kernel ISA") {
  const auto before = kernels::active_isa();
  for (const char* name : {"A4", "E6", "Z6"}) {
    for (long c : {2L, 3L, 5L, 7L}) {
      kernels::set_active_isa(kernels::Isa::scalar);
      const auto s = find_similarity(lat(name), Rational(c));
      kernels::set_active_isa(kernels::detected_isa());
      const auto v = find_similarity(lat(name), Rational(c));
      CHECK(s.status == v.status);
      CHECK(s.stats.nodes == v.stats.nodes);
      if (s.witness && v.witness) CHECK(s.witness->matrix() == v.witness->matrix());
    }
  }
  kernels::set_active_isa(before);
}

TEST_CASE("binary form predicate") {
  CHECK(binary_form_predicate(BinaryFormFamily::z2_z6, Integer(5)));
  CHECK_FALSE(binary_form_predicate(BinaryFormFamily::z2_z6, Integer(3)));
  CHECK(binary_form_predicate(BinaryFormFamily::z2_z6, Integer(9)));
  CHECK(binary_form_predicate(BinaryFormFamily::a2_e6, Integer(7)));
  CHECK_FALSE(binary_form_predicate(BinaryFormFamily::a2_e6, Integer(2)));
  CHECK(binary_form_predicate(BinaryFormFamily::a4, Integer(11)));
  CHECK_FALSE(binary_form_predicate(BinaryFormFamily::a4, Integer(3)));
  CHECK_THROWS_AS(binary_form_predicate(BinaryFormFamily::a4, Integer(0)), InvalidInput);
  CHECK(spectrum_family_of("E6") == BinaryFormFamily::a2_e6);
  CHECK_FALSE(spectrum_family_of("E8"));
}

TEST_CASE("norm_spectrum: closed form against the search") {
  CHECK(norm_spectrum(lat("Z2"), 1, SpectrumMethod::search) == std::vector<std::int64_t>{1});
  // The six-dimensional searches prove many "none" results by exhaustion,
  // which is where the time goes; keep their range short.
  for (const auto& [name, c_max] : std::vector<std::pair<const char*, std::int64_t>>{
           {"Z2", 36}, {"A2", 36}, {"A4", 36}, {"E6", 13}, {"Z6", 13}}) {
    INFO(name);
    CHECK(norm_spectrum(lat(name), c_max, SpectrumMethod::search) ==
          norm_spectrum(lat(name), c_max, SpectrumMethod::closed_form));
  }
  CHECK(norm_spectrum(lat("A2"), 20, SpectrumMethod::closed_form) ==
        std::vector<std::int64_t>{1, 3, 4, 7, 9, 12, 13, 16, 19});
  CHECK_THROWS_AS(norm_spectrum(lat("E8"), 5, SpectrumMethod::closed_form), InvalidInput);
}

TEST_CASE("soundness: a found multiplier never contradicts the Hilbert-symbol test") {
  SearchOptions budget;
  budget.budget = 2'000'000;
  for (const char* name : {"Z2", "A2", "A4", "E6", "Z6", "D4", "diag14"}) {
    const long c_max = lat(name)->dim() >= 6 ? 12 : 25;
    for (long c = 1; c <= c_max; ++c) {
      const auto out = find_similarity(lat(name), Rational(c), budget);
      if (out.status != SearchStatus::found) continue;
      INFO(name << " c=" << c);
      CHECK(check_necessary(*lat(name), Rational(c)).verdict != Verdict::fails);
      CHECK(test_support::independently_valid(*out.witness));
    }
  }
}
