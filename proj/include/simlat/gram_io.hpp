#pragma once

// Plain-text Gram matrix files:
//   line 1:        n
//   lines 2..n+1:  n whitespace-separated rationals, each `p` or `p/q`

#include <iosfwd>
#include <string>

#include "simlat/lattice.hpp"

namespace simlat {

GramLattice read_gram(std::istream& in, std::string name = {});
GramLattice load_gram_file(const std::string& path);

void write_gram(std::ostream& out, const RatMatrix& gram);
void save_gram_file(const std::string& path, const RatMatrix& gram);

/// Rational matrix in the same textual convention (first line "rows cols").
void write_matrix(std::ostream& out, const RatMatrix& m);

}  // namespace simlat
