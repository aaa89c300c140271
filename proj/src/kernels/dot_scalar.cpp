#include "simlat/kernels.hpp"

namespace simlat::kernels::scalar {

void dot_batch(const CandidateBlock& block, std::span<const std::int32_t> weights, std::int64_t* out) {
  for (std::size_t c = 0; c < block.count; ++c) out[c] = 0;
  for (std::size_t k = 0; k < block.dim; ++k) {
    const std::int64_t w = weights[k];
    if (w == 0) continue;
    const std::int32_t* col = block.coords + k * block.stride;
    for (std::size_t c = 0; c < block.count; ++c) out[c] += static_cast<std::int64_t>(col[c]) * w;
  }
}

std::size_t filter_equal(const CandidateBlock& block, std::span<const std::int32_t> weights,
                         std::int64_t target, std::uint32_t* out_indices) {
  std::size_t hits = 0;
  for (std::size_t c = 0; c < block.count; ++c) {
    std::int64_t s = 0;
    for (std::size_t k = 0; k < block.dim; ++k) {
      s += static_cast<std::int64_t>(block.coords[k * block.stride + c]) * weights[k];
    }
    if (s == target) out_indices[hits++] = static_cast<std::uint32_t>(c);
  }
  return hits;
}

}  // namespace simlat::kernels::scalar
