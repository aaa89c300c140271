#include "simlat/invariants.hpp"

#include <algorithm>

namespace simlat {

const char* verdict_name(Verdict v) {
  switch (v) {
    case Verdict::fails:
      return "fails";
    case Verdict::passes_necessary:
      return "passes-necessary";
    case Verdict::passes_sufficient:
      return "passes-sufficient";
  }
  return "unknown";
}

namespace {

bool flagged_sufficient(const GramLattice& lattice) {
  return lattice.meta().unigeneric && lattice.meta().maximality.has_value();
}

Verdict passing_verdict(const GramLattice& lattice) {
  return flagged_sufficient(lattice) ? Verdict::passes_sufficient : Verdict::passes_necessary;
}

void add_primes(std::vector<Integer>& primes, const Integer& n) {
  if (n == 0) return;
  for (const auto& f : factorize(n).factors) primes.push_back(f.prime);
}

}  // namespace

bool odd_dimension_rule(std::size_t n, const Rational& c) {
  if (n % 2 == 0) throw InvalidInput("odd_dimension_rule: dimension must be odd");
  if (c <= 0) throw InvalidInput("odd_dimension_rule: norm must be positive");
  return c.get_den() == 1 && is_perfect_square(c.get_num());
}

NecessaryConditionReport check_necessary(const GramLattice& lattice, const Rational& c) {
  if (c <= 0) throw InvalidInput("check_necessary: norm must be positive");
  NecessaryConditionReport report;
  report.norm = c;
  const std::size_t n = lattice.dim();

  if (n % 2 == 1) {
    const bool ok = odd_dimension_rule(n, c);
    report.verdict = ok ? passing_verdict(lattice) : Verdict::fails;
    report.notes = ok ? "odd dimension: c is a square, scalar multiplication by sqrt(c) is a multiplier"
                      : "odd dimension: c must be the square of an integer";
    return report;
  }

  const std::size_t k = n / 2;
  const Integralized integral = integralize(lattice);
  const Rational det = determinant(integral.lattice);
  const Rational signed_det = (k % 2 == 0) ? det : Rational(-det);

  std::vector<Integer> primes{Integer(2)};
  add_primes(primes, c.get_num());
  add_primes(primes, c.get_den());
  add_primes(primes, det.get_num());
  add_primes(primes, det.get_den());
  std::sort(primes.begin(), primes.end());
  primes.erase(std::unique(primes.begin(), primes.end()), primes.end());
  report.relevant_primes = primes;

  bool all_one = true;
  for (const Integer& p : primes) {
    const int s = hilbert_symbol(c, signed_det, Place::prime(p));
    report.symbols.push_back({p, s});
    if (s != 1) all_one = false;
  }

  std::vector<std::string> notes;
  if (!integral_index(c, n)) {
    notes.push_back("index c^{n/2} is not an integer");
    all_one = false;
  }
  for (const auto& sym : report.symbols) {
    if (sym.value == -1) notes.push_back("Hilbert symbol is -1 at p = " + sym.prime.get_str());
  }
  if (all_one) {
    notes.push_back(flagged_sufficient(lattice)
                        ? "all symbols are +1 and the lattice is unigeneric and maximal: a multiplier exists"
                        : "all symbols are +1; existence is not implied without unigeneric/maximal flags");
  }
  report.verdict = all_one ? passing_verdict(lattice) : Verdict::fails;
  for (std::size_t i = 0; i < notes.size(); ++i) report.notes += (i ? "; " : "") + notes[i];
  return report;
}

NecessaryConditionReport norm_doubling_check(const GramLattice& lattice) {
  NecessaryConditionReport report;
  report.norm = 2;
  if (lattice.dim() % 2 == 1) {
    report.verdict = Verdict::fails;
    report.notes = "odd dimension: 2 is not a square";
    return report;
  }
  const Integralized integral = integralize(lattice);
  const Rational det = determinant(integral.lattice);
  // The integralized Gram is integral, so det is an integer.
  bool ok = true;
  std::string notes;
  for (const auto& f : factorize(det.get_num()).factors) {
    if (f.prime == 2) continue;
    report.relevant_primes.push_back(f.prime);
    const unsigned long r = mpz_fdiv_ui(f.prime.get_mpz_t(), 8);
    const bool bad = (r == 3 || r == 5) && (f.exponent % 2 == 1);
    report.symbols.push_back({f.prime, bad ? -1 : 1});
    if (bad) {
      ok = false;
      notes += (notes.empty() ? "" : "; ") + f.prime.get_str() + " = +-3 (mod 8) divides det to an odd power";
    }
  }
  if (ok) notes = "every prime = +-3 (mod 8) divides det to an even power";
  report.verdict = ok ? passing_verdict(lattice) : Verdict::fails;
  report.notes = notes;
  return report;
}

}  // namespace simlat
