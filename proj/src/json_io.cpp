#include "simlat/json_io.hpp"

#include "simlat/errors.hpp"

namespace simlat {

using nlohmann::json;

json to_json(const Rational& r) { return to_string(r); }

namespace {

json integer_json(const Integer& v) {
  if (v.fits_slong_p()) return v.get_si();
  return v.get_str();
}

}  // namespace

json to_json(const IntMatrix& m) {
  json rows = json::array();
  for (std::size_t i = 0; i < m.rows(); ++i) {
    json row = json::array();
    for (const auto& x : m.row(i)) row.push_back(integer_json(x));
    rows.push_back(std::move(row));
  }
  return rows;
}

json to_json(const RatMatrix& m) {
  json rows = json::array();
  for (std::size_t i = 0; i < m.rows(); ++i) {
    json row = json::array();
    for (const auto& x : m.row(i)) row.push_back(to_string(x));
    rows.push_back(std::move(row));
  }
  return rows;
}

json to_json(const SimilarityMap& map) {
  return {
      {"lattice", map.lattice().name()},
      {"dim", map.lattice().dim()},
      {"norm", to_json(map.norm())},
      {"index", index_of(map).get_str()},
      {"matrix", to_json(map.matrix())},
  };
}

json to_json(const SearchOutcome& outcome) {
  json j = {
      {"status", status_name(outcome.status)},
      {"stats", {{"nodes", outcome.stats.nodes}, {"candidates_per_depth", outcome.stats.candidates_per_depth}}},
  };
  j["witness"] = outcome.witness ? to_json(*outcome.witness) : json(nullptr);
  return j;
}

json to_json(const NecessaryConditionReport& report) {
  json symbols = json::array();
  for (const auto& s : report.symbols) symbols.push_back({{"prime", s.prime.get_str()}, {"value", s.value}});
  json primes = json::array();
  for (const auto& p : report.relevant_primes) primes.push_back(p.get_str());
  return {
      {"norm", to_json(report.norm)},
      {"relevant_primes", primes},
      {"symbols", symbols},
      {"verdict", verdict_name(report.verdict)},
      {"notes", report.notes},
  };
}

json to_json(const VoronoiPolygon& cell) {
  json vertices = json::array();
  for (const auto& v : cell.vertices) vertices.push_back({to_string(v.real), to_string(v.sqrt_n_coeff)});
  json edges = json::array();
  for (const auto& [a, b] : cell.edges) edges.push_back({a, b});
  json relevant = json::array();
  for (const auto& v : cell.relevant_vectors) relevant.push_back(v.coords);
  return {{"vertices", vertices}, {"edges", edges}, {"relevant_vectors", relevant}};
}

Rational rational_from_json(const json& j) {
  if (j.is_number_integer()) return Rational(Integer(static_cast<long>(j.get<std::int64_t>())));
  if (j.is_string()) return parse_rational(j.get<std::string>());
  throw InvalidInput("expected a rational (integer or \"p/q\" string)");
}

IntMatrix int_matrix_from_json(const json& j) {
  if (!j.is_array() || j.empty()) throw InvalidInput("expected a non-empty array of rows");
  const std::size_t rows = j.size();
  const std::size_t cols = j[0].is_array() ? j[0].size() : 0;
  if (cols == 0) throw InvalidInput("matrix rows must be non-empty arrays");
  IntMatrix m(rows, cols);
  for (std::size_t i = 0; i < rows; ++i) {
    if (!j[i].is_array() || j[i].size() != cols) throw InvalidInput("matrix rows must have equal length");
    for (std::size_t k = 0; k < cols; ++k) {
      const Rational v = rational_from_json(j[i][k]);
      if (v.get_den() != 1) throw InvalidInput("matrix entries must be integers");
      m(i, k) = v.get_num();
    }
  }
  return m;
}

}  // namespace simlat
