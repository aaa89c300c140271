// Compiled with -mavx2; only reached after a runtime CPU check.

#include <immintrin.h>

#include "simlat/kernels.hpp"

namespace simlat::kernels::avx2 {

namespace {

// Dot products for the four candidates starting at c.
inline __m256i dot4(const CandidateBlock& block, std::span<const std::int32_t> weights, std::size_t c) {
  __m256i acc = _mm256_setzero_si256();
  for (std::size_t k = 0; k < block.dim; ++k) {
    const __m128i raw =
        _mm_loadu_si128(reinterpret_cast<const __m128i*>(block.coords + k * block.stride + c));
    const __m256i lanes = _mm256_cvtepi32_epi64(raw);
    // mul_epi32 multiplies the sign-extended low halves of each 64-bit lane.
    const __m256i w = _mm256_set1_epi64x(weights[k]);
    acc = _mm256_add_epi64(acc, _mm256_mul_epi32(lanes, w));
  }
  return acc;
}

}  // namespace

void dot_batch(const CandidateBlock& block, std::span<const std::int32_t> weights, std::int64_t* out) {
  std::size_t c = 0;
  for (; c + 4 <= block.count; c += 4) {
    _mm256_storeu_si256(reinterpret_cast<__m256i*>(out + c), dot4(block, weights, c));
  }
  for (; c < block.count; ++c) {
    std::int64_t s = 0;
    for (std::size_t k = 0; k < block.dim; ++k) {
      s += static_cast<std::int64_t>(block.coords[k * block.stride + c]) * weights[k];
    }
    out[c] = s;
  }
}

std::size_t filter_equal(const CandidateBlock& block, std::span<const std::int32_t> weights,
                         std::int64_t target, std::uint32_t* out_indices) {
  const __m256i t = _mm256_set1_epi64x(target);
  std::size_t hits = 0;
  std::size_t c = 0;
  for (; c + 4 <= block.count; c += 4) {
    const __m256i eq = _mm256_cmpeq_epi64(dot4(block, weights, c), t);
    int mask = _mm256_movemask_pd(_mm256_castsi256_pd(eq));
    while (mask) {
      const int lane = __builtin_ctz(static_cast<unsigned>(mask));
      out_indices[hits++] = static_cast<std::uint32_t>(c + lane);
      mask &= mask - 1;
    }
  }
  for (; c < block.count; ++c) {
    std::int64_t s = 0;
    for (std::size_t k = 0; k < block.dim; ++k) {
      s += static_cast<std::int64_t>(block.coords[k * block.stride + c]) * weights[k];
    }
    if (s == target) out_indices[hits++] = static_cast<std::uint32_t>(c);
  }
  return hits;
}

}  // namespace simlat::kernels::avx2
