#pragma once

// Rational-invariant tests for the existence of a multiplier of norm c.

#include <string>
#include <vector>

#include "simlat/lattice.hpp"

namespace simlat {

enum class Verdict { fails, passes_necessary, passes_sufficient };

const char* verdict_name(Verdict v);

struct PrimeSymbol {
  Integer prime;
  int value = 1;  // +1 or -1
};

struct NecessaryConditionReport {
  Rational norm;
  std::vector<Integer> relevant_primes;
  std::vector<PrimeSymbol> symbols;
  Verdict verdict = Verdict::fails;
  std::string notes;
};

/// For n = 2k: evaluates (c, (-1)^k det)_p at every prime p | 2 c det of the
/// integralized lattice. The verdict is `fails` when a symbol is -1 or
/// c^{n/2} is not an integer; `passes_sufficient` only when the lattice is
/// flagged unigeneric with a maximality class. Odd n defers to
/// odd_dimension_rule.
NecessaryConditionReport check_necessary(const GramLattice& lattice, const Rational& c);

/// Odd dimension: a multiplier of norm c exists iff c is the square of a
/// positive integer (scalar multiplication by sqrt(c)).
bool odd_dimension_rule(std::size_t n, const Rational& c);

/// Norm 2: the dimension is even and every prime = +-3 (mod 8) divides
/// det to an even power.
NecessaryConditionReport norm_doubling_check(const GramLattice& lattice);

}  // namespace simlat
