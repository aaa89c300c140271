// Acceptance suite: one PASS/FAIL line per criterion, non-zero exit on any FAIL.

#include <chrono>
#include <functional>
#include <iomanip>
#include <iostream>
#include <json.hpp>
#include <numeric>
#include <random>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "simlat/catalog.hpp"
#include "simlat/clean2d.hpp"
#include "simlat/cli.hpp"
#include "simlat/constructions.hpp"
#include "simlat/enumerate.hpp"
#include "simlat/exactmath.hpp"
#include "simlat/invariants.hpp"
#include "simlat/quaternion.hpp"
#include "simlat/search.hpp"
#include "support.hpp"

using namespace simlat;
using nlohmann::json;

namespace {

struct Result {
  bool pass = true;
  std::string detail;
};

// Every similarity map produced anywhere in the run goes through here.
struct MapLedger {
  std::size_t checked = 0;
  std::size_t failed = 0;

  bool operator()(const SimilarityMap& m) {
    ++checked;
    const bool ok = test_support::independently_valid(m);
    if (!ok) ++failed;
    return ok;
  }
};

MapLedger g_maps;

struct CliRun {
  int code;
  json body;
  std::string err;
};

CliRun cli(std::vector<std::string> args) {
  args.push_back("--json");
  std::ostringstream out, err;
  const int code = run_cli(args, out, err);
  json body;
  if (!out.str().empty()) body = json::parse(out.str());
  return {code, body, err.str()};
}

LatticePtr lat(const char* name) { return catalog_lattice(name).lattice; }

// 1. The A4 spectrum up to 36 through the command line.
Result a4_spectrum() {
  const auto r = cli({"spectrum", "--lattice", "A4", "--max", "36", "--method", "search"});
  const std::vector<std::int64_t> want{1, 4, 5, 9, 11, 16, 19, 20, 25, 29, 31, 36};
  std::vector<std::int64_t> got;
  if (r.code == kExitOk) got = r.body["norms"].get<std::vector<std::int64_t>>();
  std::ostringstream d;
  d << "exit " << r.code << ", norms";
  for (auto c : got) d << ' ' << c;
  return {r.code == kExitOk && got == want, d.str()};
}

// 2. Search, the prime-power predicate and the binary form agree for c <= 36.
Result binary_form_families() {
  struct Family {
    const char* name;
    BinaryFormFamily family;
    long k, l;  // r^2 + k r s + l s^2
  };
  const Family families[] = {{"Z2", BinaryFormFamily::z2_z6, 0, 1},
                             {"A2", BinaryFormFamily::a2_e6, -1, 1},
                             {"A4", BinaryFormFamily::a4, 1, -1}};
  std::size_t cases = 0, disagreements = 0;
  std::ostringstream d;
  for (const auto& f : families) {
    for (long c = 1; c <= 36; ++c) {
      const auto out = find_similarity(lat(f.name), Rational(c));
      if (out.status == SearchStatus::budget_exceeded) {
        ++disagreements;
        d << f.name << " c=" << c << " budget; ";
        continue;
      }
      const bool searched = out.status == SearchStatus::found;
      if (searched) g_maps(*out.witness);
      const bool predicate = binary_form_predicate(f.family, Integer(c));
      const bool form = test_support::binary_form_represents(c, f.k, f.l);
      ++cases;
      if (searched != predicate || predicate != form) {
        ++disagreements;
        d << f.name << " c=" << c << " search=" << searched << " predicate=" << predicate << " form=" << form << "; ";
      }
    }
  }
  d << cases << " cases, " << disagreements << " disagreements";
  return {disagreements == 0, d.str()};
}

// 3. No norm-doubling map on E6: the invariant test fails and the search is exhausted.
Result e6_norm_doubling() {
  const auto check = cli({"check", "--lattice", "E6", "--norm", "2"});
  const auto search = cli({"search", "--lattice", "E6", "--norm", "2"});
  const bool ok = check.code == kExitOk && check.body["verdict"] == "fails" && search.code == kExitOk &&
                  search.body["status"] == "none";
  std::ostringstream d;
  d << "check " << (check.code == kExitOk ? check.body["verdict"].get<std::string>() : "exit " + std::to_string(check.code))
    << ", search " << (search.code == kExitOk ? search.body["status"].get<std::string>() : "exit " + std::to_string(search.code));
  if (search.code == kExitOk) d << " after " << search.body["stats"]["nodes"] << " nodes";
  return {ok, d.str()};
}

// 4. diag(1, 4): the local conditions hold at norm 2, yet no map exists.
Result necessity_only() {
  RatMatrix g(2, 2);
  g(0, 0) = 1;
  g(1, 1) = 4;
  auto l = std::make_shared<GramLattice>(g, "diag(1,4)");
  const auto report = check_necessary(*l, Rational(2));
  const auto out = find_similarity(l, Rational(2));
  std::ostringstream d;
  d << "check " << verdict_name(report.verdict) << ", search " << status_name(out.status);
  return {report.verdict == Verdict::passes_necessary && out.status == SearchStatus::none, d.str()};
}

// 5. Quaternionic witnesses for every norm in range.
Result quaternion_witnesses() {
  std::size_t built = 0, bad = 0;
  std::ostringstream d;
  auto record = [&](const SimilarityMap& m, long c, const char* where) {
    ++built;
    if (!g_maps(m) || m.norm() != c) {
      ++bad;
      d << where << " c=" << c << " invalid; ";
    }
  };
  for (long c = 1; c <= 50; ++c) {
    const auto a = represent_by_form(c, FormKind::four_squares);
    const Quaternion q(a[0], a[1], a[2], a[3]);
    for (const char* name : {"Z4", "D4", "E8"}) record(quaternion_multiplier(q, name), c, name);
    const auto b = represent_by_form(c, FormKind::one_one_three_three);
    record(k12_quaternion_multiplier(b[0], b[1], b[2], b[3]), c, "K12");
  }
  for (long c = 1; c <= 15; ++c) {
    const auto a = represent_by_form(c, FormKind::four_squares);
    const Quaternion q(a[0], a[1], a[2], a[3]);
    record(leech_quaternion_multiplier(q, MogTarget::leech), c, "Leech");
    record(leech_quaternion_multiplier(q, MogTarget::bw16), c, "BW16");
  }
  d << built << " maps, " << bad << " invalid";
  return {bad == 0 && built == 4 * 50 + 2 * 15, d.str()};
}

// 6. Circulant similarities of A4 with small coefficients.
Result a4_circulants() {
  std::set<long> norms;
  std::size_t maps = 0, bad = 0;
  for (long a1 = -4; a1 <= 4; ++a1)
    for (long a2 = -4; a2 <= 4; ++a2)
      for (long a3 = -4; a3 <= 4; ++a3)
        for (long a4 = -4; a4 <= 4; ++a4) {
          const auto m = a4_circulant_similarity({a1, a2, a3, a4});
          if (!m) continue;
          ++maps;
          if (!g_maps(*m)) ++bad;
          norms.insert(m->norm().get_num().get_si());
        }
  const bool include = norms.count(1) && norms.count(5) && norms.count(11);
  const bool exclude = !norms.count(19) && !norms.count(29);
  std::ostringstream d;
  d << maps << " maps, " << bad << " invalid, norms";
  for (auto c : norms)
    if (c <= 31) d << ' ' << c;
  d << " ...";
  return {include && exclude && bad == 0, d.str()};
}

std::size_t compare_clean(const QuadLattice& ring, std::int64_t box, std::size_t& cases, std::ostringstream& d) {
  std::size_t disagreements = 0;
  for (std::int64_t a = -box; a <= box; ++a)
    for (std::int64_t b = -box; b <= box; ++b) {
      if (a == 0 && b == 0) continue;
      ++cases;
      const bool p = clean_predicate(ring, {a, b});
      const bool o = clean_oracle(ring, {a, b});
      if (p != o) {
        if (disagreements++ < 5)
          d << family_name(ring.family()) << " N=" << ring.n() << " alpha=(" << a << "," << b << ") predicate=" << p
            << " oracle=" << o << "; ";
      }
    }
  return disagreements;
}

// 7. Clean criteria against the geometric oracle.
Result clean_grid() {
  std::size_t cases = 0, disagreements = 0;
  std::ostringstream d;
  for (std::int64_t n : {3, 7, 11, 15, 19, 23})
    disagreements += compare_clean(QuadLattice(QuadFamily::hexagonal, n), 6, cases, d);
  for (std::int64_t n = 1; n <= 10; ++n) disagreements += compare_clean(QuadLattice(QuadFamily::rectangular, n), 6, cases, d);
  d << cases << " cases, " << disagreements << " disagreements";
  return {disagreements == 0, d.str()};
}

// 8. Clean indices of the hexagonal lattice.
Result hex_clean_spectrum() {
  const QuadLattice ring(QuadFamily::hexagonal, 3);
  const auto got = clean_index_spectrum(ring, 100);
  const std::vector<std::int64_t> listed{1, 7, 13, 19, 31, 37, 43, 49, 61, 67, 73, 79, 91, 97};
  std::vector<std::int64_t> from_factorize, from_trial;
  for (long c = 1; c <= 100; ++c) {
    bool all = true;
    for (const auto& pp : factorize(Integer(c)).factors) all = all && pp.prime % 3 == 1;
    if (all) from_factorize.push_back(c);
    if (test_support::product_of_primes_1_mod_3(c)) from_trial.push_back(c);
  }
  std::ostringstream d;
  d << got.size() << " indices";
  return {got == listed && got == from_factorize && got == from_trial, d.str()};
}

// 9. N = 7: the parity description, the general criterion and the oracle.
Result kleinian() {
  const QuadLattice ring(QuadFamily::hexagonal, 7);
  std::size_t cases = 0, disagreements = 0, divisible_by_7 = 0, oracle_mismatches = 0;
  std::ostringstream d;
  for (std::int64_t a = -8; a <= 8; ++a)
    for (std::int64_t b = -8; b <= 8; ++b) {
      if (a == 0 && b == 0) continue;
      const bool parity = (a % 2 != 0) && (b % 2 == 0) && std::gcd(a, b) == 1;
      // The description is stated in the basis (1, w + 1); it is invariant
      // under the change, but both readings are checked.
      for (const QuadInt alpha : {QuadInt{a, b}, from_shifted_omega(a, b)}) {
        ++cases;
        const bool general = clean_hex_general(7, alpha);
        const bool oracle = clean_oracle(ring, alpha);
        oracle_mismatches += general != oracle;
        if (general != parity || general != oracle) {
          if (quad_norm(ring, alpha) % 7 == 0) ++divisible_by_7;
          if (disagreements++ < 5)
            d << "(" << alpha.x << "," << alpha.y << ") parity=" << parity << " general=" << general
              << " oracle=" << oracle << "; ";
        }
      }
    }
  d << cases << " cases, " << disagreements << " disagreements";
  if (disagreements)
    d << " (" << divisible_by_7 << " with 7 | |alpha|^2; criterion vs oracle mismatches: " << oracle_mismatches << ")";
  return {disagreements == 0, d.str()};
}

// 10. Property suites.
Result properties() {
  std::ostringstream d;
  std::size_t failures = 0;

  std::mt19937_64 rng(10'000);
  std::uniform_int_distribution<long> dist(-5000, 5000);
  auto draw = [&] {
    long v = 0;
    while (v == 0) v = dist(rng);
    return Integer(v);
  };
  std::size_t hilbert_cases = 0;
  for (int trial = 0; trial < 10'000; ++trial) {
    const Integer a = draw(), b = draw(), b2 = draw();
    ++hilbert_cases;
    if (test_support::hilbert_product(a, b) != 1) ++failures;
    for (const auto& place : test_support::places_of(a * b * b2)) {
      const int lhs = hilbert_symbol(Rational(a), Rational(b * b2), place);
      const int rhs = hilbert_symbol(Rational(a), Rational(b), place) * hilbert_symbol(Rational(a), Rational(b2), place);
      if (lhs != rhs) ++failures;
    }
  }
  // Local values against the brute-force isotropy search.
  for (long p : {2L, 3L, 5L, 7L})
    for (long a = -12; a <= 12; ++a)
      for (long b = -12; b <= 12; ++b) {
        if (a == 0 || b == 0) continue;
        ++hilbert_cases;
        if (hilbert_symbol(Rational(a), Rational(b), Place::prime(Integer(p))) !=
            test_support::brute_force_hilbert(a, b, p))
          ++failures;
      }
  const std::size_t hilbert_failures = failures;

  // A few more maps from the search so the ledger also covers rational Gram matrices.
  RatMatrix g(2, 2);
  g(0, 0) = make_rational(2, 3);
  g(0, 1) = g(1, 0) = make_rational(-1, 3);
  g(1, 1) = make_rational(2, 3);
  const auto scaled = find_similarity(std::make_shared<GramLattice>(g, "A2/3"), Rational(7));
  if (scaled.status != SearchStatus::found) ++failures;
  else g_maps(*scaled.witness);
  enumerate_similarities(lat("D4"), Rational(2), 20, [&](const SimilarityMap& m) { return g_maps(m); });

  std::size_t enum_cases = 0;
  std::mt19937_64 grng(7);
  std::uniform_int_distribution<long> small(-3, 3);
  while (enum_cases < 40) {
    const std::size_t n = 1 + enum_cases % 4;
    std::vector<std::vector<long>> b(n, std::vector<long>(n));
    for (auto& row : b)
      for (auto& x : row) x = small(grng);
    std::vector<std::vector<std::int64_t>> gram(n, std::vector<std::int64_t>(n, 0));
    RatMatrix rg(n, n);
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) {
        for (std::size_t k = 0; k < n; ++k) gram[i][j] += b[k][i] * b[k][j];
        rg(i, j) = Integer(static_cast<long>(gram[i][j]));
      }
    if (determinant(rg) == 0) continue;
    const std::int64_t bound = 10;
    Rational trace = 0;
    for (std::size_t i = 0; i < n; ++i) trace += rg(i, i);
    Rational t = 1;
    for (std::size_t i = 1; i < n; ++i) t *= trace;
    const Rational r2 = Rational(bound) * t / determinant(rg);
    const Integer radius = isqrt(Integer(r2.get_num() / r2.get_den())) + 1;
    if (radius > 12) continue;
    std::set<std::vector<std::int64_t>> got;
    for (const auto& v : short_vectors(GramLattice(rg), Rational(bound))) got.insert(v.vector.coords);
    if (got != test_support::naive_short_vectors(gram, bound, radius.get_si())) ++failures;
    ++enum_cases;
  }

  failures += g_maps.failed;
  d << hilbert_cases << " Hilbert cases (" << hilbert_failures << " failures), " << g_maps.checked << " maps checked ("
    << g_maps.failed << " invalid), " << enum_cases << " enumeration comparisons";
  return {failures == 0 && hilbert_cases >= 10'000, d.str()};
}

}  // namespace

int main() {
  const std::vector<std::pair<const char*, std::function<Result()>>> criteria{
      {"A4 norm spectrum up to 36", a4_spectrum},
      {"binary-form families: search, predicate and representation agree", binary_form_families},
      {"E6 has no norm-doubling map", e6_norm_doubling},
      {"diag(1,4): local conditions hold, no norm-2 map", necessity_only},
      {"quaternionic witnesses on Z4, D4, E8, K12, Leech, BW16", quaternion_witnesses},
      {"A4 circulant family norms", a4_circulants},
      {"clean predicate agrees with the geometric oracle", clean_grid},
      {"hexagonal clean index spectrum up to 100", hex_clean_spectrum},
      {"N = 7 clean sublattices", kleinian},
      {"property suites", properties},
  };
  int failed = 0;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    const auto start = std::chrono::steady_clock::now();
    Result r;
    try {
      r = criteria[i].second();
    } catch (const std::exception& e) {
      r = {false, std::string("exception: ") + e.what()};
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    failed += !r.pass;
    std::cout << (r.pass ? "PASS" : "FAIL") << " criterion " << i + 1 << ": " << criteria[i].first << " -- "
              << r.detail << " [" << std::fixed << std::setprecision(2) << secs << "s]" << std::endl;
  }
  return failed == 0 ? 0 : 1;
}
