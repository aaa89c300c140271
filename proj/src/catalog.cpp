#include "simlat/catalog.hpp"

#include <map>
#include <memory>
#include <mutex>

#include "simlat/constructions.hpp"
#include "simlat/enumerate.hpp"
#include "simlat/errors.hpp"
#include "simlat/golay.hpp"
#include "simlat/reduction.hpp"

namespace simlat {

RatMatrix gram_of(const RatMatrix& generator, const RatMatrix& form) {
  return generator * form * generator.transpose();
}

RatMatrix basis_from_generators(const RatMatrix& generators) {
  Integer scale = 1;
  for (std::size_t i = 0; i < generators.rows(); ++i)
    for (const auto& x : generators.row(i)) mpz_lcm(scale.get_mpz_t(), scale.get_mpz_t(), x.get_den_mpz_t());
  const IntMatrix h = row_hnf(to_integer(Rational(scale) * generators));
  RatMatrix out = to_rational(h);
  return make_rational(Integer(1), scale) * out;
}

RatMatrix lll_reduce_rows(const RatMatrix& generator, const RatMatrix& form) {
  const LllResult r = lll_reduce(gram_of(generator, form));
  return to_rational(r.transform).transpose() * generator;
}

namespace {

struct Expected {
  Rational det;
  bool even;
};

RatMatrix identity_form(std::size_t n, const Rational& scale = Rational(1)) {
  return scale * RatMatrix::identity(n);
}

CatalogEntry finish(std::string name, RatMatrix generator, RatMatrix form, LatticeMeta meta, std::string provenance,
                    const Expected& expected) {
  auto lattice = std::make_shared<GramLattice>(gram_of(generator, form), std::move(name), std::move(meta));
  if (determinant(*lattice) != expected.det || lattice->is_even() != expected.even)
    throw InternalError("catalog: invariants of " + lattice->name() + " do not match");
  return {lattice, std::move(generator), std::move(form), std::move(provenance)};
}

CatalogEntry gram_only(std::string name, RatMatrix gram, LatticeMeta meta, std::string provenance,
                       const Expected& expected) {
  auto lattice = std::make_shared<GramLattice>(std::move(gram), std::move(name), std::move(meta));
  if (determinant(*lattice) != expected.det || lattice->is_even() != expected.even)
    throw InternalError("catalog: invariants of " + lattice->name() + " do not match");
  return {lattice, std::nullopt, std::nullopt, std::move(provenance)};
}

LatticeMeta unigeneric_maximal(long r) { return {true, Rational(r)}; }

RatMatrix d_generators(std::size_t n) {
  // (-1, -1, 0, ...), then e_i - e_{i+1}.
  RatMatrix g(n, n);
  g(0, 0) = -1;
  g(0, 1) = -1;
  for (std::size_t i = 1; i < n; ++i) {
    g(i, i - 1) = 1;
    g(i, i) = -1;
  }
  return g;
}

CatalogEntry make_z(std::size_t n) {
  const LatticeMeta meta = n <= 8 ? unigeneric_maximal(1) : LatticeMeta{};
  return finish("Z" + std::to_string(n), RatMatrix::identity(n), identity_form(n), meta,
                n <= 8 ? "odd unimodular lattices of dimension <= 8 are all isometric to Z^n" : "", {1, false});
}

CatalogEntry make_d(std::size_t n) {
  const LatticeMeta meta = n == 4 ? unigeneric_maximal(2) : LatticeMeta{};
  return finish("D" + std::to_string(n), d_generators(n), identity_form(n), meta,
                n == 4 ? "D4 is the unique even lattice of determinant 4 in dimension 4" : "", {4, true});
}

CatalogEntry make_d_plus(std::size_t n, std::string name) {
  RatMatrix gens(n + 1, n);
  const RatMatrix d = d_generators(n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) gens(i, j) = d(i, j);
  for (std::size_t j = 0; j < n; ++j) gens(n, j) = make_rational(1, 2);
  const bool even = (n / 4) % 2 == 0;
  const bool is_e8 = n == 8;
  return finish(std::move(name), lll_reduce_rows(basis_from_generators(gens), identity_form(n)), identity_form(n),
                is_e8 ? unigeneric_maximal(2) : LatticeMeta{},
                is_e8 ? "E8 is the unique even unimodular lattice in dimension 8" : "", {1, even});
}

CatalogEntry make_a2() {
  RatMatrix g(2, 2);
  g(0, 0) = 2;
  g(0, 1) = -1;
  g(1, 0) = -1;
  g(1, 1) = 2;
  return gram_only("A2", g, unigeneric_maximal(2), "A2 has class number one", {3, true});
}

CatalogEntry make_a4() {
  RatMatrix g(4, 5);
  for (std::size_t i = 0; i < 4; ++i) {
    g(i, i) = 1;
    g(i, i + 1) = -1;
  }
  return finish("A4", g, identity_form(5), unigeneric_maximal(2), "A4 has class number one", {5, true});
}

RatMatrix eisenstein_form(std::size_t copies) {
  // (2/3) Re((a + b w)(c + d w-bar)) = (2/3)(ac + bd - (ad + bc)/2).
  RatMatrix f(2 * copies, 2 * copies);
  for (std::size_t k = 0; k < copies; ++k) {
    f(2 * k, 2 * k) = make_rational(2, 3);
    f(2 * k + 1, 2 * k + 1) = make_rational(2, 3);
    f(2 * k, 2 * k + 1) = make_rational(-1, 3);
    f(2 * k + 1, 2 * k) = make_rational(-1, 3);
  }
  return f;
}

CatalogEntry make_e6() {
  const long rows[6][6] = {
      {1, 2, 0, 0, 0, 0},   // theta
      {-2, -1, 0, 0, 0, 0}, // w theta
      {0, 0, 1, 2, 0, 0},
      {0, 0, -2, -1, 0, 0},
      {1, 0, 1, 0, 1, 0},   // (1, 1, 1)
      {0, 1, 0, 1, 0, 1},   // w (1, 1, 1)
  };
  RatMatrix g(6, 6);
  for (std::size_t i = 0; i < 6; ++i)
    for (std::size_t j = 0; j < 6; ++j) g(i, j) = rows[i][j];
  return finish("E6", g, eisenstein_form(3), unigeneric_maximal(2), "E6 has class number one", {3, true});
}

CatalogEntry make_leech() {
  const auto spanning = leech_spanning_vectors();
  RatMatrix gens(spanning.size(), 24);
  for (std::size_t i = 0; i < spanning.size(); ++i)
    for (std::size_t j = 0; j < 24; ++j) gens(i, j) = Integer(static_cast<long>(spanning[i][j]));
  const RatMatrix form = identity_form(24, make_rational(1, 8));
  RatMatrix basis = basis_from_generators(gens);
  if (basis.rows() != 24) throw InternalError("catalog: Leech spanning set has wrong rank");
  CatalogEntry e = finish("Leech", lll_reduce_rows(basis, form), form, {}, "", {1, true});
  if (!short_vectors(*e.lattice, Rational(2)).empty()) throw InternalError("catalog: Leech has roots");
  return e;
}

CatalogEntry make_sublattice(SublatticeTarget target) {
  ExtractedSublattice s = extract_sublattice_basis(target);
  return {std::make_shared<GramLattice>(std::move(s.lattice)), std::move(s.generator),
          identity_form(24, make_rational(1, 8)), ""};
}

CatalogEntry make_diag14() {
  RatMatrix g(2, 2);
  g(0, 0) = 1;
  g(1, 1) = 4;
  return gram_only("diag14", g, {true, std::nullopt},
                   "x^2 + 4y^2 is alone in its genus; not flagged maximal", {4, false});
}

std::optional<std::size_t> suffix_number(std::string_view name, std::string_view prefix, std::string_view suffix) {
  if (name.size() <= prefix.size() + suffix.size() || !name.starts_with(prefix) || !name.ends_with(suffix))
    return std::nullopt;
  const std::string_view digits = name.substr(prefix.size(), name.size() - prefix.size() - suffix.size());
  if (digits.empty() || digits.size() > 2 || digits[0] == '0') return std::nullopt;
  std::size_t n = 0;
  for (char ch : digits) {
    if (ch < '0' || ch > '9') return std::nullopt;
    n = n * 10 + static_cast<std::size_t>(ch - '0');
  }
  return n;
}

CatalogEntry build(std::string_view name) {
  if (name == "A2") return make_a2();
  if (name == "A4") return make_a4();
  if (name == "E6") return make_e6();
  if (name == "E8") return make_d_plus(8, "E8");
  if (name == "Leech") return make_leech();
  if (name == "BW16") return make_sublattice(SublatticeTarget::bw16);
  if (name == "K12") return make_sublattice(SublatticeTarget::k12);
  if (name == "diag14") return make_diag14();
  if (auto n = suffix_number(name, "Z", ""); n && *n >= 1 && *n <= 24) return make_z(*n);
  if (auto n = suffix_number(name, "D", "+"); n && *n % 4 == 0 && *n <= 24) return make_d_plus(*n, std::string(name));
  if (auto n = suffix_number(name, "D", ""); n && *n % 4 == 0 && *n <= 24) return make_d(*n);
  throw InvalidInput("unknown catalog lattice '" + std::string(name) + "'");
}

}  // namespace

const CatalogEntry& catalog_lattice(std::string_view name) {
  static std::recursive_mutex mutex;
  static std::map<std::string, std::unique_ptr<CatalogEntry>, std::less<>> cache;
  std::lock_guard lock(mutex);
  if (auto it = cache.find(name); it != cache.end()) return *it->second;
  auto entry = std::make_unique<CatalogEntry>(build(name));
  return *cache.emplace(std::string(name), std::move(entry)).first->second;
}

std::vector<std::string> catalog_names() {
  std::vector<std::string> names;
  for (int n = 1; n <= 24; ++n) names.push_back("Z" + std::to_string(n));
  names.insert(names.end(), {"A2", "A4", "E6", "E8"});
  for (int m = 1; m <= 6; ++m) names.push_back("D" + std::to_string(4 * m));
  for (int m = 1; m <= 6; ++m) names.push_back("D" + std::to_string(4 * m) + "+");
  names.insert(names.end(), {"BW16", "K12", "Leech", "diag14"});
  return names;
}

}  // namespace simlat
