#pragma once

// Named lattices. Entries with an ambient realization carry a generator
// matrix G (basis vectors as rows) and an ambient form F with Gram = G F G^T.
//
//   Zn (1..24)      identity
//   A2              basis 1, w of the Eisenstein integers, Gram 2 Re(x y-bar)
//   A4              e_i - e_{i+1} in Z^5
//   E6              {(x, y, z) in E^3 : x = y = z (mod theta)}, theta = 1 + 2w,
//                   basis (theta,0,0), w(theta,0,0), (0,theta,0), w(0,theta,0),
//                   (1,1,1), w(1,1,1); Gram (2/3) Re(x y-bar). Ambient
//                   coordinates are the (1, w) coefficients of each entry.
//   D{4m}, D{4m}+   m = 1..6; D+ adds the glue (1/2, ..., 1/2)
//   E8              D8+
//   Leech           sqrt(8) * Leech in MOG coordinates, F = I/8
//   BW16, K12       sublattices of Leech (see constructions.hpp)
//   diag14          Gram diag(1, 4)

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "simlat/lattice.hpp"

namespace simlat {

struct CatalogEntry {
  LatticePtr lattice;
  std::optional<RatMatrix> generator;
  std::optional<RatMatrix> ambient_form;
  /// Where the unigeneric/maximality flags come from.
  std::string provenance;
};

/// Throws InvalidInput for unknown names. Entries are built on first use and
/// validated (Gram = G F G^T, determinant, parity).
const CatalogEntry& catalog_lattice(std::string_view name);

std::vector<std::string> catalog_names();

/// Basis rows of the Z-span of rational row vectors (via a row HNF).
RatMatrix basis_from_generators(const RatMatrix& generators);

/// Replaces the rows of G by an LLL-reduced basis of the same lattice.
RatMatrix lll_reduce_rows(const RatMatrix& generator, const RatMatrix& form);

/// G F G^T.
RatMatrix gram_of(const RatMatrix& generator, const RatMatrix& form);

}  // namespace simlat
