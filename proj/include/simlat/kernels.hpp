#pragma once

// Batched integer inner-product kernels for the similarity search.
//
// A candidate block stores vectors column-major ("structure of arrays"):
// coordinate k of candidate c lives at coords[k * stride + c]. The search
// filters thousands of candidates against one weight vector w = A * v, so
// the hot loop is count-many dot products of length dim.
//
// Every kernel has a scalar reference and an AVX2 variant; the active one is
// picked at runtime (CPU detection, overridable with SIMLAT_ISA=scalar).
//
// Precondition for all kernels: dim * max|coord| * max|weight| < 2^63.

#include <cstddef>
#include <cstdint>
#include <span>

namespace simlat::kernels {

enum class Isa { scalar, avx2 };

const char* isa_name(Isa isa);
bool isa_supported(Isa isa);
/// Best ISA supported by this CPU and build.
Isa detected_isa();
Isa active_isa();
/// Throws std::invalid_argument if the ISA is not supported here.
void set_active_isa(Isa isa);

struct CandidateBlock {
  const std::int32_t* coords = nullptr;
  std::size_t stride = 0;
  std::size_t count = 0;
  std::size_t dim = 0;
};

/// out[c] = sum_k coords[k][c] * weights[k] for c < count.
void dot_batch(const CandidateBlock& block, std::span<const std::int32_t> weights, std::int64_t* out);

/// Writes the (increasing) indices c with dot(c) == target; returns how many.
std::size_t filter_equal(const CandidateBlock& block, std::span<const std::int32_t> weights,
                         std::int64_t target, std::uint32_t* out_indices);

namespace scalar {
void dot_batch(const CandidateBlock& block, std::span<const std::int32_t> weights, std::int64_t* out);
std::size_t filter_equal(const CandidateBlock& block, std::span<const std::int32_t> weights,
                         std::int64_t target, std::uint32_t* out_indices);
}  // namespace scalar

#if defined(SIMLAT_HAVE_AVX2)
namespace avx2 {
void dot_batch(const CandidateBlock& block, std::span<const std::int32_t> weights, std::int64_t* out);
std::size_t filter_equal(const CandidateBlock& block, std::span<const std::int32_t> weights,
                         std::int64_t target, std::uint32_t* out_indices);
}  // namespace avx2
#endif

}  // namespace simlat::kernels
