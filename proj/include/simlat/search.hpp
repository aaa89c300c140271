#pragma once

// Exhaustive search for multipliers: integer matrices B with B^T A B = c A.

#include <cstdint>
#include <functional>
#include <optional>
#include <string_view>
#include <vector>

#include "simlat/enumerate.hpp"
#include "simlat/lattice.hpp"

namespace simlat {

enum class SearchStatus { found, none, budget_exceeded };

const char* status_name(SearchStatus s);

struct SearchStats {
  std::uint64_t nodes = 0;
  /// Sum of the candidate-list sizes scanned at each depth.
  std::vector<std::uint64_t> candidates_per_depth;
};

struct SearchOutcome {
  SearchStatus status = SearchStatus::none;
  std::optional<SimilarityMap> witness;
  SearchStats stats;
};

struct SearchOptions {
  std::uint64_t budget = kDefaultNodeBudget;
};

/// Backtracking over columns. Column j draws from the vectors of norm
/// c A_jj; the column with the fewest consistent candidates is assigned next
/// and every other column's list is filtered by its inner product with the
/// new one. The first column picked is restricted to one sign. `none` is only
/// returned after the tree is exhausted within budget.
SearchOutcome find_similarity(LatticePtr lattice, const Rational& c, const SearchOptions& options = {});

/// Streams up to max_count witnesses (in search order) to `sink`; stops early
/// if the sink returns false. The outcome carries the first witness.
SearchOutcome enumerate_similarities(LatticePtr lattice, const Rational& c, std::size_t max_count,
                                     const std::function<bool(const SimilarityMap&)>& sink,
                                     const SearchOptions& options = {});

enum class SpectrumMethod { search, closed_form };

/// Thrown by norm_spectrum when the search for one norm runs out of budget.
class SpectrumBudgetExceeded : public BudgetExceeded {
 public:
  SpectrumBudgetExceeded(std::int64_t norm, std::uint64_t nodes)
      : BudgetExceeded("norm_spectrum: budget exceeded at c = " + std::to_string(norm), nodes), norm_(norm) {}
  std::int64_t norm() const { return norm_; }

 private:
  std::int64_t norm_;
};

/// Families with a closed-form norm spectrum.
enum class BinaryFormFamily {
  z2_z6,  // c = r^2 + s^2
  a2_e6,  // c = r^2 - rs + s^2
  a4,     // c = r^2 + rs - s^2
};

std::optional<BinaryFormFamily> spectrum_family_of(std::string_view lattice_name);

/// Prime-power parity criterion: primes = 3 (mod 4), = 2 (mod 3), or
/// = +-2 (mod 5) respectively must appear to even powers in c.
bool binary_form_predicate(BinaryFormFamily family, const Integer& c);

/// Integers 1..c_max admitting a multiplier, ascending.
std::vector<std::int64_t> norm_spectrum(LatticePtr lattice, std::int64_t c_max, SpectrumMethod method,
                                        const SearchOptions& options = {});

}  // namespace simlat
