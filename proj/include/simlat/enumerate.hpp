#pragma once

#include <cstdint>
#include <vector>

#include "simlat/lattice.hpp"

namespace simlat {

inline constexpr std::uint64_t kDefaultNodeBudget = 100'000'000;

struct EnumOptions {
  std::uint64_t node_budget = kDefaultNodeBudget;
};

struct ShortVector {
  LatticeVector vector;
  Rational norm;
};

/// All nonzero v with v^T A v <= bound, one per +-pair (first nonzero
/// coordinate positive), sorted by (norm, coordinates).
///
/// Fincke-Pohst enumeration on an LLL-reduced basis. Interval bounds come
/// from an exact LDL^T factorization rounded to double and widened outward;
/// every leaf is re-checked with exact integer arithmetic, so the float stage
/// can only admit extra candidates, never drop one.
///
/// Throws BudgetExceeded when more than `node_budget` tree nodes are visited.
std::vector<ShortVector> short_vectors(const GramLattice& lattice, const Rational& bound,
                                       const EnumOptions& options = {});

}  // namespace simlat
