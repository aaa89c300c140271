#pragma once

// JSON forms of results. Objects are key-sorted (nlohmann::json's default
// std::map storage), so output is byte-stable. Rationals are strings "p" or
// "p/q"; integer matrices are arrays of rows.

#include <json.hpp>

#include "simlat/clean2d.hpp"
#include "simlat/invariants.hpp"
#include "simlat/search.hpp"

namespace simlat {

nlohmann::json to_json(const Rational& r);
nlohmann::json to_json(const IntMatrix& m);
nlohmann::json to_json(const RatMatrix& m);
nlohmann::json to_json(const SimilarityMap& map);
nlohmann::json to_json(const SearchOutcome& outcome);
nlohmann::json to_json(const NecessaryConditionReport& report);
nlohmann::json to_json(const VoronoiPolygon& cell);

Rational rational_from_json(const nlohmann::json& j);
IntMatrix int_matrix_from_json(const nlohmann::json& j);

}  // namespace simlat
