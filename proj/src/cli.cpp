#include "simlat/cli.hpp"

#include <CLI11.hpp>
#include <fstream>
#include <functional>
#include <ostream>
#include <sstream>

#include "simlat/catalog.hpp"
#include "simlat/clean2d.hpp"
#include "simlat/constructions.hpp"
#include "simlat/errors.hpp"
#include "simlat/gram_io.hpp"
#include "simlat/invariants.hpp"
#include "simlat/json_io.hpp"
#include "simlat/kernels.hpp"
#include "simlat/search.hpp"

namespace simlat {

namespace {

using nlohmann::json;

struct Options {
  bool json = false;
  std::string isa = "auto";

  std::string lattice;
  std::string norm;
  std::uint64_t budget = kDefaultNodeBudget;
  bool all = false;
  std::size_t max_count = 10;
  std::int64_t max = 0;
  std::string spectrum_method = "search";
  std::string clean_method = "predicate";

  long r = 0, s = 0;
  std::string q;
  std::string circulant;

  std::string family;
  std::int64_t n = 0;
  std::int64_t a = 0, b = 0;
  bool shifted = false;

  std::string name;
  std::string path;
  std::string witness;
};

// Raised by command handlers to request a non-zero exit after printing.
struct ExitWith {
  int code;
};

LatticePtr resolve_lattice(const std::string& ref) {
  if (ref.starts_with("file:")) return std::make_shared<GramLattice>(load_gram_file(ref.substr(5)));
  return catalog_lattice(ref).lattice;
}

Rational parse_norm(const std::string& text) {
  const Rational c = parse_rational(text);
  if (c <= 0) throw InvalidInput("norm must be positive");
  return c;
}

std::vector<Rational> parse_list(const std::string& text, std::size_t expected, const char* what) {
  std::vector<Rational> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) out.push_back(parse_rational(item));
  if (out.size() != expected)
    throw InvalidInput(std::string(what) + ": expected " + std::to_string(expected) + " comma-separated values");
  return out;
}

void print_matrix(std::ostream& out, const IntMatrix& m, const std::string& indent = "  ") {
  std::vector<std::string> cells;
  std::size_t width = 1;
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (const auto& x : m.row(i)) {
      cells.push_back(x.get_str());
      width = std::max(width, cells.back().size());
    }
  for (std::size_t i = 0; i < m.rows(); ++i) {
    out << indent;
    for (std::size_t j = 0; j < m.cols(); ++j) {
      const std::string& c = cells[i * m.cols() + j];
      out << (j ? " " : "") << std::string(width - c.size(), ' ') << c;
    }
    out << '\n';
  }
}

void print_map(std::ostream& out, const SimilarityMap& map) {
  out << "lattice: " << map.lattice().name() << "\n"
      << "norm: " << to_string(map.norm()) << "\n"
      << "index: " << index_of(map).get_str() << "\n"
      << "matrix (column j = image of basis vector j):\n";
  print_matrix(out, map.matrix());
}

void emit_json(std::ostream& out, const json& j) { out << j.dump(2) << '\n'; }

QuadLattice quad_lattice(const Options& o) {
  if (o.family == "hex") return QuadLattice(QuadFamily::hexagonal, o.n);
  if (o.family == "rect") return QuadLattice(QuadFamily::rectangular, o.n);
  throw InvalidInput("family must be 'hex' or 'rect'");
}

// ---- commands --------------------------------------------------------------

void cmd_check(const Options& o, std::ostream& out) {
  const LatticePtr lattice = resolve_lattice(o.lattice);
  const auto report = check_necessary(*lattice, parse_norm(o.norm));
  if (o.json) {
    json j = to_json(report);
    j["lattice"] = lattice->name();
    return emit_json(out, j);
  }
  out << "lattice: " << lattice->name() << "\n"
      << "norm: " << to_string(report.norm) << "\n";
  for (const auto& s : report.symbols) out << "  (c, (-1)^k det)_" << s.prime.get_str() << " = " << s.value << "\n";
  out << "verdict: " << verdict_name(report.verdict) << "\n";
  if (!report.notes.empty()) out << "notes: " << report.notes << "\n";
}

void cmd_norm_doubling(const Options& o, std::ostream& out) {
  const LatticePtr lattice = resolve_lattice(o.lattice);
  const auto report = norm_doubling_check(*lattice);
  if (o.json) {
    json j = to_json(report);
    j["lattice"] = lattice->name();
    return emit_json(out, j);
  }
  out << "lattice: " << lattice->name() << "\n"
      << "verdict: " << verdict_name(report.verdict) << "\n"
      << "notes: " << report.notes << "\n";
}

void cmd_search(const Options& o, std::ostream& out) {
  const LatticePtr lattice = resolve_lattice(o.lattice);
  const Rational c = parse_norm(o.norm);
  const SearchOptions so{o.budget};
  SearchOutcome outcome;
  std::vector<SimilarityMap> found;
  if (o.all) {
    if (o.max_count == 0) throw InvalidInput("--max-count must be positive");
    outcome = enumerate_similarities(
        lattice, c, o.max_count,
        [&](const SimilarityMap& m) {
          found.push_back(m);
          return true;
        },
        so);
  } else {
    outcome = find_similarity(lattice, c, so);
  }

  if (o.json) {
    json j = to_json(outcome);
    j["lattice"] = lattice->name();
    j["norm"] = to_json(c);
    if (o.all) {
      json list = json::array();
      for (const auto& m : found) list.push_back(to_json(m));
      j["witnesses"] = list;
    }
    emit_json(out, j);
  } else {
    out << "lattice: " << lattice->name() << "\n"
        << "norm: " << to_string(c) << "\n"
        << "status: " << status_name(outcome.status) << "\n"
        << "nodes: " << outcome.stats.nodes << "\n";
    if (o.all) {
      out << "witnesses: " << found.size() << "\n";
      for (std::size_t i = 0; i < found.size(); ++i) {
        out << "witness " << i + 1 << ":\n";
        print_matrix(out, found[i].matrix());
      }
    } else if (outcome.witness) {
      out << "index: " << index_of(*outcome.witness).get_str() << "\n"
          << "witness (column j = image of basis vector j):\n";
      print_matrix(out, outcome.witness->matrix());
    }
  }
  if (outcome.status == SearchStatus::budget_exceeded) throw ExitWith{kExitBudget};
}

void cmd_spectrum(const Options& o, std::ostream& out) {
  const LatticePtr lattice = resolve_lattice(o.lattice);
  SpectrumMethod method;
  if (o.spectrum_method == "search") {
    method = SpectrumMethod::search;
  } else if (o.spectrum_method == "closed-form") {
    method = SpectrumMethod::closed_form;
  } else {
    throw InvalidInput("method must be 'search' or 'closed-form'");
  }
  const auto values = norm_spectrum(lattice, o.max, method, SearchOptions{o.budget});
  if (o.json) {
    return emit_json(out, {{"lattice", lattice->name()}, {"max", o.max}, {"method", o.spectrum_method}, {"norms", values}});
  }
  out << "lattice: " << lattice->name() << "\nnorms <= " << o.max << ":";
  for (auto v : values) out << ' ' << v;
  out << '\n';
}

// Explicit constructions by lattice name, optionally from a target norm.
struct Constructed {
  SimilarityMap map;
  std::string method;
};

std::optional<std::pair<long, long>> binary_representation(long c, bool eisenstein) {
  for (long r = 0; r * r <= 4 * c; ++r)
    for (long s = 0; s <= r; ++s) {
      const long v = eisenstein ? r * r - r * s + s * s : r * r + s * s;
      if (v == c) return std::make_pair(r, s);
    }
  return std::nullopt;
}

long small_norm(const Rational& c) {
  if (c.get_den() != 1 || !c.get_num().fits_slong_p() || c.get_num() > 1'000'000'000L)
    throw InvalidInput("construct: norm must be an integer in 1..10^9");
  return c.get_num().get_si();
}

bool is_quaternion_family(const std::string& name) {
  if (name == "E8") return true;
  if (name.size() < 2 || (name[0] != 'Z' && name[0] != 'D')) return false;
  const std::string digits = name.substr(1, name.back() == '+' ? name.size() - 2 : name.size() - 1);
  if (digits.empty() || digits.find_first_not_of("0123456789") != std::string::npos) return false;
  return std::stol(digits) % 4 == 0;
}

Quaternion quaternion_from(const std::array<long, 4>& v) { return Quaternion(v[0], v[1], v[2], v[3]); }

Constructed construct(const Options& o, const CLI::App& sub) {
  const std::string& name = o.lattice;
  const bool has_norm = sub.count("--norm") > 0;
  const bool has_rs = sub.count("--r") > 0 || sub.count("--s") > 0;
  const bool has_q = sub.count("--q") > 0;
  const bool has_circ = sub.count("--circulant") > 0;
  if (static_cast<int>(has_norm) + has_rs + has_q + has_circ != 1)
    throw InvalidInput("construct: give exactly one of --norm, --r/--s, --q, --circulant");

  if (has_q) {
    const auto v = parse_list(o.q, 4, "--q");
    if (name == "K12") {
      for (const auto& x : v)
        if (x.get_den() != 1 || !x.get_num().fits_slong_p()) throw InvalidInput("--q for K12 takes four integers");
      return {k12_quaternion_multiplier(v[0].get_num().get_si(), v[1].get_num().get_si(), v[2].get_num().get_si(),
                                        v[3].get_num().get_si()),
              "k12-quaternion"};
    }
    const Quaternion q = Quaternion::from_rationals(v[0], v[1], v[2], v[3]);
    if (name == "Leech") return {leech_quaternion_multiplier(q, MogTarget::leech), "mog-quaternion " + q.to_string()};
    if (name == "BW16") return {leech_quaternion_multiplier(q, MogTarget::bw16), "mog-quaternion " + q.to_string()};
    if (is_quaternion_family(name)) return {quaternion_multiplier(q, name), "quaternion " + q.to_string()};
    throw InvalidInput("construct: --q is not supported for " + name);
  }
  if (has_rs) {
    if (name == "A2") return {eisenstein_multiplier(o.r, o.s, EisensteinTarget::a2), "eisenstein"};
    if (name == "E6") return {eisenstein_multiplier(o.r, o.s, EisensteinTarget::e6), "eisenstein"};
    if (name.starts_with("Z") && !is_quaternion_family(name) && name.size() > 1) {
      const long n = std::stol(name.substr(1));
      if (n % 2 == 0) return {gaussian_multiplier(o.r, o.s, static_cast<std::size_t>(n / 2)), "gaussian"};
    }
    throw InvalidInput("construct: --r/--s is not supported for " + name);
  }
  if (has_circ) {
    if (name != "A4") throw InvalidInput("construct: --circulant applies to A4 only");
    const auto v = parse_list(o.circulant, 4, "--circulant");
    std::array<long, 4> a{};
    for (std::size_t i = 0; i < 4; ++i) {
      if (v[i].get_den() != 1 || !v[i].get_num().fits_slong_p()) throw InvalidInput("--circulant takes integers");
      a[i] = v[i].get_num().get_si();
    }
    auto m = a4_circulant_similarity(a);
    if (!m) throw InvalidInput("construct: circulant constraint does not vanish for these coefficients");
    return {*m, "a4-circulant"};
  }

  const Rational c = parse_norm(o.norm);
  if (name == "K12") {
    const auto v = represent_by_form(small_norm(c), FormKind::one_one_three_three);
    return {k12_quaternion_multiplier(v[0], v[1], v[2], v[3]), "k12-quaternion (r^2+s^2+3t^2+3u^2)"};
  }
  if (name == "Leech" || name == "BW16") {
    const auto q = quaternion_from(represent_by_form(small_norm(c), FormKind::four_squares));
    return {leech_quaternion_multiplier(q, name == "Leech" ? MogTarget::leech : MogTarget::bw16),
            "mog-quaternion " + q.to_string()};
  }
  if (is_quaternion_family(name)) {
    const auto q = quaternion_from(represent_by_form(small_norm(c), FormKind::four_squares));
    return {quaternion_multiplier(q, name), "quaternion " + q.to_string()};
  }
  if (name == "A2" || name == "E6") {
    if (auto rs = binary_representation(small_norm(c), true))
      return {eisenstein_multiplier(rs->first, rs->second, name == "A2" ? EisensteinTarget::a2 : EisensteinTarget::e6),
              "eisenstein"};
  }
  if (name.starts_with("Z") && !is_quaternion_family(name)) {
    const LatticePtr z = resolve_lattice(name);
    if (z->dim() % 2 == 0) {
      if (auto rs = binary_representation(small_norm(c), false))
        return {gaussian_multiplier(rs->first, rs->second, z->dim() / 2), "gaussian"};
    }
  }
  if (name == "A4") {
    const long target = small_norm(c);
    std::array<long, 4> a{};
    for (a[0] = -4; a[0] <= 4; ++a[0])
      for (a[1] = -4; a[1] <= 4; ++a[1])
        for (a[2] = -4; a[2] <= 4; ++a[2])
          for (a[3] = -4; a[3] <= 4; ++a[3])
            if (a4_constraint(a) == 0 && a4_norm(a) == target)
              if (auto m = a4_circulant_similarity(a)) return {*m, "a4-circulant"};
  }
  // Scalar multiplication works for every lattice when c is a square.
  if (c.get_den() == 1 && is_perfect_square(c.get_num())) {
    const LatticePtr lattice = resolve_lattice(name);
    const Integer root = isqrt(c.get_num());
    IntMatrix b(lattice->dim(), lattice->dim());
    for (std::size_t i = 0; i < lattice->dim(); ++i) b(i, i) = root;
    return {SimilarityMap::create(lattice, b, c), "scalar"};
  }
  throw InvalidInput("construct: no explicit construction of norm " + to_string(c) + " for " + name +
                     " (try `search`)");
}

void cmd_construct(const Options& o, const CLI::App& sub, std::ostream& out) {
  const Constructed result = construct(o, sub);
  if (o.json) {
    json j = to_json(result.map);
    j["construction"] = result.method;
    return emit_json(out, j);
  }
  out << "construction: " << result.method << "\n";
  print_map(out, result.map);
}

void cmd_clean(const Options& o, std::ostream& out) {
  const QuadLattice lattice = quad_lattice(o);
  const QuadInt alpha = o.shifted ? from_shifted_omega(o.a, o.b) : QuadInt{o.a, o.b};
  const bool predicate = clean_predicate(lattice, alpha);
  const OracleReport oracle = clean_oracle_report(lattice, alpha);
  const bool agree = predicate == oracle.clean;
  if (o.json) {
    json j = {
        {"family", family_name(lattice.family())},
        {"N", lattice.n()},
        {"alpha", {alpha.x, alpha.y}},
        {"norm", quad_norm(lattice, alpha)},
        {"predicate", predicate},
        {"oracle", oracle.clean},
        {"agree", agree},
        {"cosets", oracle.cosets},
    };
    if (oracle.boundary_point) {
      j["boundary_point"] = oracle.boundary_point->coords;
      j["nearest_count"] = oracle.nearest_count;
    }
    emit_json(out, j);
  } else {
    out << family_name(lattice.family()) << " N=" << lattice.n() << " alpha=" << alpha.x << (alpha.y < 0 ? "" : "+")
        << alpha.y << (lattice.family() == QuadFamily::hexagonal ? "w" : "theta")
        << " norm=" << quad_norm(lattice, alpha) << "\n"
        << "predicate: " << (predicate ? "clean" : "not clean") << "\n"
        << "oracle: " << (oracle.clean ? "clean" : "not clean");
    if (oracle.boundary_point)
      out << " (coset point (" << oracle.boundary_point->coords[0] << ", " << oracle.boundary_point->coords[1]
          << ") has " << oracle.nearest_count << " nearest sublattice points)";
    out << "\n";
    if (!agree) out << "FINDING: the clean criterion disagrees with the geometric oracle\n";
  }
  if (!agree) throw ExitWith{kExitInconsistent};
}

void cmd_clean_spectrum(const Options& o, std::ostream& out) {
  const QuadLattice lattice = quad_lattice(o);
  std::vector<std::int64_t> predicate, oracle;
  const bool use_p = o.clean_method == "predicate" || o.clean_method == "both";
  const bool use_o = o.clean_method == "oracle" || o.clean_method == "both";
  if (!use_p && !use_o) throw InvalidInput("method must be 'predicate', 'oracle' or 'both'");
  if (use_p) predicate = clean_index_spectrum(lattice, o.max, CleanMethod::predicate);
  if (use_o) oracle = clean_index_spectrum(lattice, o.max, CleanMethod::oracle);
  const bool agree = !(use_p && use_o) || predicate == oracle;
  const auto& values = use_p ? predicate : oracle;
  if (o.json) {
    json j = {{"family", family_name(lattice.family())}, {"N", lattice.n()}, {"max", o.max}, {"indices", values},
              {"method", o.clean_method}};
    if (use_p && use_o) j["agree"] = agree;
    emit_json(out, j);
  } else {
    out << family_name(lattice.family()) << " N=" << lattice.n() << " clean indices <= " << o.max << ":";
    for (auto v : values) out << ' ' << v;
    out << "\n";
    if (!agree) out << "FINDING: predicate and oracle spectra differ\n";
  }
  if (!agree) throw ExitWith{kExitInconsistent};
}

void cmd_voronoi(const Options& o, std::ostream& out) {
  const QuadLattice lattice = quad_lattice(o);
  const VoronoiPolygon cell = voronoi_cell(lattice);
  if (o.json) {
    json j = to_json(cell);
    j["family"] = family_name(lattice.family());
    j["N"] = lattice.n();
    return emit_json(out, j);
  }
  out << family_name(lattice.family()) << " N=" << lattice.n() << ": " << cell.vertices.size()
      << " vertices (x, y/sqrt(N))\n";
  for (const auto& v : cell.vertices) out << "  (" << to_string(v.real) << ", " << to_string(v.sqrt_n_coeff) << ")\n";
}

json entry_json(const CatalogEntry& e) {
  const GramLattice& l = *e.lattice;
  json j = {
      {"name", l.name()},
      {"dim", l.dim()},
      {"det", to_string(determinant(l))},
      {"even", l.is_even()},
      {"unigeneric", l.meta().unigeneric},
      {"gram", to_json(l.gram())},
      {"provenance", e.provenance},
  };
  j["maximality"] = l.meta().maximality ? to_json(*l.meta().maximality) : json(nullptr);
  return j;
}

void cmd_catalog_list(const Options& o, std::ostream& out) {
  const auto names = catalog_names();
  if (o.json) return emit_json(out, {{"names", names}});
  for (const auto& n : names) out << n << "\n";
}

void cmd_catalog_show(const Options& o, std::ostream& out) {
  const CatalogEntry& e = catalog_lattice(o.name);
  if (o.json) return emit_json(out, entry_json(e));
  const GramLattice& l = *e.lattice;
  out << "name: " << l.name() << "\n"
      << "dim: " << l.dim() << "\n"
      << "det: " << to_string(determinant(l)) << "\n"
      << "even: " << (l.is_even() ? "yes" : "no") << "\n"
      << "unigeneric: " << (l.meta().unigeneric ? "yes" : "no") << "\n"
      << "maximality: " << (l.meta().maximality ? "(" + to_string(*l.meta().maximality) + ")" : "-") << "\n";
  if (!e.provenance.empty()) out << "provenance: " << e.provenance << "\n";
  out << "gram:\n";
  write_gram(out, l.gram());
}

void cmd_catalog_export(const Options& o, std::ostream& out) {
  const CatalogEntry& e = catalog_lattice(o.name);
  save_gram_file(o.path, e.lattice->gram());
  if (e.generator) {
    std::ofstream g(o.path + ".generator");
    if (!g) throw InvalidInput("cannot write " + o.path + ".generator");
    write_matrix(g, *e.generator);
  }
  if (o.json) return emit_json(out, {{"name", o.name}, {"path", o.path}, {"generator", e.generator.has_value()}});
  out << "wrote " << o.path << (e.generator ? " and " + o.path + ".generator" : "") << "\n";
}

void cmd_verify(const Options& o, std::ostream& out) {
  std::ifstream in(o.witness);
  if (!in) throw InvalidInput("cannot open witness file " + o.witness);
  json j;
  try {
    j = json::parse(in);
  } catch (const json::exception& e) {
    throw InvalidInput(std::string("witness is not valid JSON: ") + e.what());
  }
  // Accepts a map object or a search result carrying one under "witness".
  if (j.contains("witness") && j["witness"].is_object()) j = j["witness"];
  if (!j.contains("lattice") || !j.contains("norm") || !j.contains("matrix"))
    throw InvalidInput("witness needs 'lattice', 'norm' and 'matrix'");
  const LatticePtr lattice = resolve_lattice(j["lattice"].get<std::string>());
  const Rational c = rational_from_json(j["norm"]);
  const IntMatrix b = int_matrix_from_json(j["matrix"]);
  if (b.rows() != lattice->dim() || b.cols() != lattice->dim()) throw InvalidInput("matrix has the wrong shape");
  bool ok = verify_similarity(*lattice, b, c);
  if (ok) {
    const auto idx = integral_index(c, lattice->dim());
    Integer det = determinant(b);
    if (det < 0) det = -det;
    ok = idx && *idx == det;
  }
  if (o.json) {
    emit_json(out, {{"lattice", lattice->name()}, {"norm", to_json(c)}, {"verified", ok}});
  } else {
    out << (ok ? "verified" : "NOT verified") << ": B^T A B = c A and |det B| = c^(n/2) on " << lattice->name()
        << " with c = " << to_string(c) << "\n";
  }
  if (!ok) throw ExitWith{kExitInconsistent};
}

void apply_isa(const std::string& isa) {
  if (isa == "auto") return kernels::set_active_isa(kernels::detected_isa());
  if (isa == "scalar") return kernels::set_active_isa(kernels::Isa::scalar);
  if (isa == "avx2") {
    if (!kernels::isa_supported(kernels::Isa::avx2)) throw InvalidInput("AVX2 is not available on this machine");
    return kernels::set_active_isa(kernels::Isa::avx2);
  }
  throw InvalidInput("--isa must be auto, scalar or avx2");
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  Options o;
  CLI::App app{"Similar sublattices: existence tests, searches, constructions and clean sublattices", "simlat"};
  app.require_subcommand(1);
  app.add_option("--isa", o.isa, "Kernel instruction set: auto, scalar or avx2");

  auto json_flag = [&](CLI::App* sub) { sub->add_flag("--json", o.json, "Machine-readable JSON output"); };
  auto lattice_opt = [&](CLI::App* sub) {
    sub->add_option("--lattice", o.lattice, "Catalog name or file:PATH")->required();
  };
  auto budget_opt = [&](CLI::App* sub) {
    sub->add_option("--budget", o.budget, "Node budget for enumeration and search");
  };
  auto quad_opts = [&](CLI::App* sub) {
    sub->add_option("--family", o.family, "hex or rect")->required();
    sub->add_option("--N", o.n, "N in sqrt(-N)")->required();
  };

  std::function<void(std::ostream&)> action;

  auto* check = app.add_subcommand("check", "Hilbert-symbol test for a multiplier of norm c");
  lattice_opt(check);
  check->add_option("--norm", o.norm, "Norm c (integer or p/q)")->required();
  json_flag(check);
  check->callback([&] { action = [&](std::ostream& os) { cmd_check(o, os); }; });

  auto* doubling = app.add_subcommand("norm-doubling", "Necessary condition for a multiplier of norm 2");
  lattice_opt(doubling);
  json_flag(doubling);
  doubling->callback([&] { action = [&](std::ostream& os) { cmd_norm_doubling(o, os); }; });

  auto* search = app.add_subcommand("search", "Exhaustive search for a multiplier of norm c");
  lattice_opt(search);
  search->add_option("--norm", o.norm, "Norm c")->required();
  budget_opt(search);
  search->add_flag("--all", o.all, "Stream several witnesses");
  search->add_option("--max-count", o.max_count, "Cap for --all (default 10)");
  json_flag(search);
  search->callback([&] { action = [&](std::ostream& os) { cmd_search(o, os); }; });

  auto* spectrum = app.add_subcommand("spectrum", "Norms 1..max admitting a multiplier");
  lattice_opt(spectrum);
  spectrum->add_option("--max", o.max, "Largest norm")->required();
  spectrum->add_option("--method", o.spectrum_method, "search or closed-form (default search)");
  budget_opt(spectrum);
  json_flag(spectrum);
  spectrum->callback([&] { action = [&](std::ostream& os) { cmd_spectrum(o, os); }; });

  auto* construct = app.add_subcommand("construct", "Explicit similarity by construction");
  lattice_opt(construct);
  construct->add_option("--norm", o.norm, "Target norm (picks a representation)");
  construct->add_option("--r", o.r, "Complex multiplier r + s i (Z2m) or r + s w (A2, E6)");
  construct->add_option("--s", o.s, "See --r");
  construct->add_option("--q", o.q, "Quaternion r,s,t,u (halves allowed: -1/2,1/2,1/2,1/2)");
  construct->add_option("--circulant", o.circulant, "A4 circulant coefficients a1,a2,a3,a4");
  json_flag(construct);
  construct->callback([&, construct] { action = [&, construct](std::ostream& os) { cmd_construct(o, *construct, os); }; });

  auto* clean = app.add_subcommand("clean", "Is alpha * L a clean sublattice? (criterion and oracle)");
  quad_opts(clean);
  clean->add_option("--a", o.a, "alpha = a + b w")->required();
  clean->add_option("--b", o.b, "alpha = a + b w")->required();
  clean->add_flag("--shifted-omega", o.shifted, "Read a + b w' with w' = (1 + sqrt(-N))/2 (hexagonal type)");
  json_flag(clean);
  clean->callback([&] { action = [&](std::ostream& os) { cmd_clean(o, os); }; });

  auto* clean_spectrum = app.add_subcommand("clean-spectrum", "Indices <= max of clean similar sublattices");
  quad_opts(clean_spectrum);
  clean_spectrum->add_option("--max", o.max, "Largest index")->required();
  clean_spectrum->add_option("--method", o.clean_method, "predicate, oracle or both (default predicate)");
  json_flag(clean_spectrum);
  clean_spectrum->callback([&] { action = [&](std::ostream& os) { cmd_clean_spectrum(o, os); }; });

  auto* voronoi = app.add_subcommand("voronoi", "Exact Voronoi cell of a quadratic lattice");
  quad_opts(voronoi);
  json_flag(voronoi);
  voronoi->callback([&] { action = [&](std::ostream& os) { cmd_voronoi(o, os); }; });

  auto* catalog = app.add_subcommand("catalog", "Catalog lattices");
  catalog->require_subcommand(1);
  auto* list = catalog->add_subcommand("list", "List names");
  json_flag(list);
  list->callback([&] { action = [&](std::ostream& os) { cmd_catalog_list(o, os); }; });
  auto* show = catalog->add_subcommand("show", "Show one entry");
  show->add_option("name", o.name)->required();
  json_flag(show);
  show->callback([&] { action = [&](std::ostream& os) { cmd_catalog_show(o, os); }; });
  auto* exp = catalog->add_subcommand("export", "Write the Gram file (and generator, if any)");
  exp->add_option("name", o.name)->required();
  exp->add_option("path", o.path)->required();
  json_flag(exp);
  exp->callback([&] { action = [&](std::ostream& os) { cmd_catalog_export(o, os); }; });

  auto* verify = app.add_subcommand("verify", "Re-verify a witness JSON produced by search or construct");
  verify->add_option("--witness", o.witness, "Path to the JSON file")->required();
  json_flag(verify);
  verify->callback([&] { action = [&](std::ostream& os) { cmd_verify(o, os); }; });

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitInvalidInput;
  }

  try {
    apply_isa(o.isa);
    if (!action) throw InvalidInput("no command given");
    action(out);
    return kExitOk;
  } catch (const ExitWith& e) {
    return e.code;
  } catch (const BudgetExceeded& e) {
    err << "budget exceeded: " << e.what() << " (nodes: " << e.nodes() << ")\n";
    return kExitBudget;
  } catch (const InvalidInput& e) {
    err << "invalid input: " << e.what() << "\n";
    return kExitInvalidInput;
  } catch (const std::invalid_argument& e) {
    err << "invalid input: " << e.what() << "\n";
    return kExitInvalidInput;
  } catch (const std::exception& e) {
    err << "internal error: " << e.what() << "\n";
    return kExitInternal;
  }
}

}  // namespace simlat
