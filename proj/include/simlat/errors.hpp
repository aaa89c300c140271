#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

namespace simlat {

/// Bad arguments or malformed input data.
class InvalidInput : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// An enumeration or search ran out of its node budget. Never means "absent".
class BudgetExceeded : public std::runtime_error {
 public:
  BudgetExceeded(const std::string& what, std::uint64_t nodes)
      : std::runtime_error(what), nodes_(nodes) {}
  std::uint64_t nodes() const { return nodes_; }

 private:
  std::uint64_t nodes_;
};

/// A broken internal invariant (a construction that failed its own check,
/// an arithmetic overflow guard, an unsplittable factorization).
class InternalError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

}  // namespace simlat
