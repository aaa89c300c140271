#include "simlat/search.hpp"

#include <algorithm>
#include <limits>

#include "simlat/kernels.hpp"

namespace simlat {

const char* status_name(SearchStatus s) {
  switch (s) {
    case SearchStatus::found:
      return "found";
    case SearchStatus::none:
      return "none";
    case SearchStatus::budget_exceeded:
      return "budget-exceeded";
  }
  return "unknown";
}

namespace {

// Candidate vectors for one column, stored column-major for the kernels.
struct Domain {
  std::vector<std::int32_t> coords;  // dim * capacity
  std::size_t capacity = 0;
  std::size_t count = 0;

  kernels::CandidateBlock block(std::size_t dim) const { return {coords.data(), capacity, count, dim}; }
  std::int32_t at(std::size_t k, std::size_t c) const { return coords[k * capacity + c]; }
};

class Searcher {
 public:
  Searcher(LatticePtr lattice, Rational c, const SearchOptions& options, std::size_t max_count,
           const std::function<bool(const SimilarityMap&)>* sink)
      : lattice_(std::move(lattice)), c_(std::move(c)), budget_(options.budget), max_count_(max_count), sink_(sink) {}

  SearchOutcome run() {
    SearchOutcome outcome;
    n_ = lattice_->dim();
    outcome.stats.candidates_per_depth.assign(n_, 0);
    stats_ = &outcome.stats;
    if (!integral_index(c_, n_) || !prepare_targets()) {
      outcome.status = SearchStatus::none;
      return outcome;
    }
    try {
      if (!prepare_domains()) {
        outcome.status = SearchStatus::none;
        return outcome;
      }
      assignment_.assign(n_, std::vector<std::int32_t>(n_, 0));
      assigned_.assign(n_, false);
      descend(0);
    } catch (const StopSearch&) {
    } catch (const BudgetExceeded&) {
      outcome.status = SearchStatus::budget_exceeded;
      outcome.witness = first_;
      return outcome;
    }
    outcome.status = first_ ? SearchStatus::found : SearchStatus::none;
    outcome.witness = first_;
    return outcome;
  }

 private:
  struct StopSearch {};

  bool prepare_targets() {
    const Integralized integral = integralize(*lattice_);
    gram_ = int64_gram(integral.lattice);
    targets_.assign(n_ * n_, 0);
    for (std::size_t i = 0; i < n_ * n_; ++i) {
      Rational t = c_ * Integer(static_cast<long>(gram_[i]));
      if (t.get_den() != 1) return false;
      targets_[i] = to_int64(t.get_num());
    }
    integral_ = std::make_shared<GramLattice>(integral.lattice);
    return true;
  }

  bool prepare_domains() {
    std::int64_t max_norm = 0;
    for (std::size_t j = 0; j < n_; ++j) max_norm = std::max(max_norm, targets_[j * n_ + j]);
    EnumOptions eo;
    eo.node_budget = budget_;
    const auto vectors = short_vectors(*integral_, Rational(Integer(static_cast<long>(max_norm))), eo);

    std::int64_t max_coord = 0;
    depth_domains_.assign(n_ + 1, std::vector<Domain>(n_));
    for (std::size_t j = 0; j < n_; ++j) {
      const std::int64_t want = targets_[j * n_ + j];
      std::vector<const LatticeVector*> reps;
      for (const auto& sv : vectors)
        if (sv.norm == want) reps.push_back(&sv.vector);
      if (reps.empty()) return false;
      Domain& d = depth_domains_[0][j];
      d.capacity = d.count = 2 * reps.size();
      d.coords.assign(n_ * d.capacity, 0);
      for (std::size_t r = 0; r < reps.size(); ++r) {
        for (std::size_t k = 0; k < n_; ++k) {
          const Coord x = reps[r]->coords[k];
          if (x > std::numeric_limits<std::int32_t>::max() / 2 || x < -std::numeric_limits<std::int32_t>::max() / 2)
            throw InternalError("search: candidate coordinate exceeds kernel range");
          max_coord = std::max<std::int64_t>(max_coord, x < 0 ? -x : x);
          d.coords[k * d.capacity + 2 * r] = static_cast<std::int32_t>(x);
          d.coords[k * d.capacity + 2 * r + 1] = static_cast<std::int32_t>(-x);
        }
      }
      for (std::size_t depth = 1; depth <= n_; ++depth) {
        Domain& dd = depth_domains_[depth][j];
        dd.capacity = d.capacity;
        dd.coords.assign(n_ * d.capacity, 0);
      }
    }
    // Weights w = A v must fit in int32; dot products then fit easily in int64.
    std::int64_t max_gram = 0;
    for (auto g : gram_) max_gram = std::max<std::int64_t>(max_gram, g < 0 ? -g : g);
    if (static_cast<long double>(n_) * max_gram * max_coord >= std::numeric_limits<std::int32_t>::max())
      throw InternalError("search: values exceed kernel range");
    for (std::size_t j = 0; j < n_; ++j) scratch_.resize(std::max(scratch_.size(), depth_domains_[0][j].capacity));
    return true;
  }

  void descend(std::size_t depth) {
    if (depth == n_) {
      emit();
      return;
    }
    auto& domains = depth_domains_[depth];
    std::size_t k = n_;
    for (std::size_t j = 0; j < n_; ++j) {
      if (assigned_[j]) continue;
      if (k == n_ || domains[j].count < domains[k].count) k = j;
    }
    const Domain& dom = domains[k];
    stats_->candidates_per_depth[depth] += dom.count;
    std::vector<std::int32_t> w(n_);
    for (std::size_t idx = 0; idx < dom.count; ++idx) {
      if (depth == 0 && !leading_positive(dom, idx)) continue;
      if (++stats_->nodes > budget_) throw BudgetExceeded("search: node budget exceeded", stats_->nodes);
      for (std::size_t r = 0; r < n_; ++r) assignment_[k][r] = dom.at(r, idx);
      for (std::size_t r = 0; r < n_; ++r) {
        std::int64_t s = 0;
        for (std::size_t q = 0; q < n_; ++q) s += gram_[r * n_ + q] * assignment_[k][q];
        w[r] = static_cast<std::int32_t>(s);
      }
      assigned_[k] = true;
      bool consistent = true;
      for (std::size_t l = 0; l < n_ && consistent; ++l) {
        if (assigned_[l]) continue;
        consistent = filter(domains[l], depth_domains_[depth + 1][l], w, targets_[k * n_ + l]);
      }
      if (consistent) descend(depth + 1);
      assigned_[k] = false;
    }
  }

  bool leading_positive(const Domain& dom, std::size_t idx) const {
    for (std::size_t r = 0; r < n_; ++r) {
      const std::int32_t x = dom.at(r, idx);
      if (x != 0) return x > 0;
    }
    return false;
  }

  bool filter(const Domain& src, Domain& dst, const std::vector<std::int32_t>& w, std::int64_t target) {
    const std::size_t hits = kernels::filter_equal(src.block(n_), w, target, scratch_.data());
    dst.count = hits;
    for (std::size_t k = 0; k < n_; ++k) {
      const std::int32_t* from = src.coords.data() + k * src.capacity;
      std::int32_t* to = dst.coords.data() + k * dst.capacity;
      for (std::size_t h = 0; h < hits; ++h) to[h] = from[scratch_[h]];
    }
    return hits > 0;
  }

  void emit() {
    IntMatrix b(n_, n_);
    for (std::size_t col = 0; col < n_; ++col)
      for (std::size_t row = 0; row < n_; ++row) b(row, col) = assignment_[col][row];
    if (!verify_similarity(*lattice_, b, c_)) throw InternalError("search: witness failed verification");
    SimilarityMap map = SimilarityMap::create(lattice_, std::move(b), c_);
    if (!first_) first_ = map;
    ++emitted_;
    const bool more = sink_ ? (*sink_)(map) : false;
    if (!more || emitted_ >= max_count_) throw StopSearch{};
  }

  LatticePtr lattice_;
  Rational c_;
  std::uint64_t budget_;
  std::size_t max_count_;
  const std::function<bool(const SimilarityMap&)>* sink_;

  std::size_t n_ = 0;
  std::shared_ptr<const GramLattice> integral_;
  std::vector<std::int64_t> gram_;
  std::vector<std::int64_t> targets_;
  std::vector<std::vector<Domain>> depth_domains_;
  std::vector<std::uint32_t> scratch_;
  std::vector<std::vector<std::int32_t>> assignment_;
  std::vector<bool> assigned_;
  SearchStats* stats_ = nullptr;
  std::optional<SimilarityMap> first_;
  std::size_t emitted_ = 0;
};

}  // namespace

SearchOutcome find_similarity(LatticePtr lattice, const Rational& c, const SearchOptions& options) {
  if (!lattice) throw InvalidInput("find_similarity: null lattice");
  if (c <= 0) throw InvalidInput("find_similarity: norm must be positive");
  return Searcher(std::move(lattice), c, options, 1, nullptr).run();
}

SearchOutcome enumerate_similarities(LatticePtr lattice, const Rational& c, std::size_t max_count,
                                     const std::function<bool(const SimilarityMap&)>& sink,
                                     const SearchOptions& options) {
  if (!lattice) throw InvalidInput("enumerate_similarities: null lattice");
  if (c <= 0) throw InvalidInput("enumerate_similarities: norm must be positive");
  if (max_count == 0) throw InvalidInput("enumerate_similarities: max_count must be positive");
  return Searcher(std::move(lattice), c, options, max_count, &sink).run();
}

std::optional<BinaryFormFamily> spectrum_family_of(std::string_view name) {
  if (name == "Z2" || name == "Z6") return BinaryFormFamily::z2_z6;
  if (name == "A2" || name == "E6") return BinaryFormFamily::a2_e6;
  if (name == "A4") return BinaryFormFamily::a4;
  return std::nullopt;
}

bool binary_form_predicate(BinaryFormFamily family, const Integer& c) {
  if (c < 1) throw InvalidInput("binary_form_predicate: c must be positive");
  for (const auto& f : factorize(c).factors) {
    if (f.exponent % 2 == 0) continue;
    const unsigned long p = mpz_fdiv_ui(f.prime.get_mpz_t(), 60);
    switch (family) {
      case BinaryFormFamily::z2_z6:
        if (p % 4 == 3) return false;
        break;
      case BinaryFormFamily::a2_e6:
        if (p % 3 == 2) return false;
        break;
      case BinaryFormFamily::a4:
        if (p % 5 == 2 || p % 5 == 3) return false;
        break;
    }
  }
  return true;
}

std::vector<std::int64_t> norm_spectrum(LatticePtr lattice, std::int64_t c_max, SpectrumMethod method,
                                        const SearchOptions& options) {
  if (!lattice) throw InvalidInput("norm_spectrum: null lattice");
  if (c_max < 1) throw InvalidInput("norm_spectrum: c_max must be positive");
  std::vector<std::int64_t> out;
  if (method == SpectrumMethod::closed_form) {
    const auto family = spectrum_family_of(lattice->name());
    if (!family) throw InvalidInput("norm_spectrum: no closed form for lattice '" + lattice->name() + "'");
    for (std::int64_t c = 1; c <= c_max; ++c)
      if (binary_form_predicate(*family, Integer(static_cast<long>(c)))) out.push_back(c);
    return out;
  }
  for (std::int64_t c = 1; c <= c_max; ++c) {
    const SearchOutcome o = find_similarity(lattice, Rational(Integer(static_cast<long>(c))), options);
    if (o.status == SearchStatus::budget_exceeded) throw SpectrumBudgetExceeded(c, o.stats.nodes);
    if (o.status == SearchStatus::found) out.push_back(c);
  }
  return out;
}

}  // namespace simlat
