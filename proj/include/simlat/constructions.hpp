#pragma once

// Explicit similarities: complex multiplication (Z^2m, A2, E6), the A4
// circulant family, quaternion right multiplication (Z^4m, D4m, D4m+, E8,
// Leech, BW16, K12), and representations by the forms that feed them.

#include <array>
#include <functional>
#include <optional>
#include <span>
#include <string_view>

#include "simlat/catalog.hpp"
#include "simlat/lattice.hpp"
#include "simlat/quaternion.hpp"

namespace simlat {

/// Multiplication by r + s i on each of m complex coordinates of Z^{2m}.
SimilarityMap gaussian_multiplier(long r, long s, std::size_t copies);

enum class EisensteinTarget { a2, e6 };

/// Multiplication by r + s w (w = e^{2 pi i / 3}) on A2 or E6; norm r^2 - rs + s^2.
SimilarityMap eisenstein_multiplier(long r, long s, EisensteinTarget target);

/// a^T Q a for the A4 circulant coefficients.
long a4_constraint(const std::array<long, 4>& a);
/// (1/2) a^T M a with M tridiagonal (2, -1).
long a4_norm(const std::array<long, 4>& a);

/// sigma = a1 alpha + a2 alpha^2 + a3 alpha^3 + a4 alpha^4 on A4, where alpha
/// is the cyclic shift of Z^5. Empty unless the constraint vanishes and a != 0.
std::optional<SimilarityMap> a4_circulant_similarity(const std::array<long, 4>& a);

enum class QuaternionTarget { z, d, d_plus };

/// Right multiplication by q on each quaternionic block of Z^{4m}, D_{4m} or
/// D_{4m}^+. Throws InvalidInput for q = 0, non-Hurwitz q, or when q does not
/// preserve the lattice (half-integral q on Z^{4m}, for instance).
SimilarityMap quaternion_multiplier(const Quaternion& q, QuaternionTarget target, std::size_t m);
/// Same, by catalog name: Z{4m}, D{4m}, D{4m}+ or E8.
SimilarityMap quaternion_multiplier(const Quaternion& q, std::string_view lattice_name);

enum class MogTarget { leech, bw16 };

/// Right multiplication by q on the six column quaternions of a MOG array.
/// Column c (0-based) reads rows top to bottom as 1, k, i, j when c is even
/// and 1, j, k, i when c is odd.
SimilarityMap leech_quaternion_multiplier(const Quaternion& q, MogTarget target);

/// Right multiplication by r + s i + t sqrt3 j + u sqrt3 k on K12, viewed as
/// triples of elements of the quaternion algebra (-1, -3).
SimilarityMap k12_quaternion_multiplier(long r, long s, long t, long u);

enum class FormKind { four_squares, one_one_three_three };

/// The lexicographically largest non-negative (r, s, t, u) with
/// r^2 + s^2 + t^2 + u^2 = c, resp. r^2 + s^2 + 3t^2 + 3u^2 = c.
std::array<long, 4> represent_by_form(long c, FormKind form);

enum class SublatticeTarget { bw16, k12 };

struct ExtractedSublattice {
  RatMatrix generator;  // rows in sqrt(8) * Leech MOG coordinates
  GramLattice lattice;
};

/// BW16: Leech vectors whose last two MOG columns vanish. K12: Leech vectors
/// whose rows 2..4 agree in every column. Validated against det (2^8, 3^6),
/// parity and minimum 4.
ExtractedSublattice extract_sublattice_basis(SublatticeTarget target);

using AmbientAction = std::function<std::vector<Rational>(std::span<const Rational>)>;

/// The map of an ambient linear action on a catalog lattice with a generator.
/// Throws InvalidInput when the image of some basis vector leaves the lattice.
SimilarityMap map_from_ambient(const CatalogEntry& entry, const AmbientAction& act, const Rational& norm);

}  // namespace simlat
