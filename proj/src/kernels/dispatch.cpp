#include <atomic>
#include <cstdlib>
#include <stdexcept>
#include <string>
#include <string_view>

#include "simlat/kernels.hpp"

namespace simlat::kernels {

const char* isa_name(Isa isa) {
  switch (isa) {
    case Isa::scalar:
      return "scalar";
    case Isa::avx2:
      return "avx2";
  }
  return "unknown";
}

bool isa_supported(Isa isa) {
  switch (isa) {
    case Isa::scalar:
      return true;
    case Isa::avx2:
#if defined(SIMLAT_HAVE_AVX2)
      return __builtin_cpu_supports("avx2");
#else
      return false;
#endif
  }
  return false;
}

Isa detected_isa() { return isa_supported(Isa::avx2) ? Isa::avx2 : Isa::scalar; }

namespace {

Isa initial_isa() {
  if (const char* env = std::getenv("SIMLAT_ISA")) {
    if (std::string_view(env) == "scalar") return Isa::scalar;
  }
  return detected_isa();
}

std::atomic<Isa>& active() {
  static std::atomic<Isa> isa{initial_isa()};
  return isa;
}

}  // namespace

Isa active_isa() { return active().load(std::memory_order_relaxed); }

void set_active_isa(Isa isa) {
  if (!isa_supported(isa)) throw std::invalid_argument(std::string("ISA not supported: ") + isa_name(isa));
  active().store(isa, std::memory_order_relaxed);
}

void dot_batch(const CandidateBlock& block, std::span<const std::int32_t> weights, std::int64_t* out) {
#if defined(SIMLAT_HAVE_AVX2)
  if (active_isa() == Isa::avx2) return avx2::dot_batch(block, weights, out);
#endif
  scalar::dot_batch(block, weights, out);
}

std::size_t filter_equal(const CandidateBlock& block, std::span<const std::int32_t> weights,
                         std::int64_t target, std::uint32_t* out_indices) {
#if defined(SIMLAT_HAVE_AVX2)
  if (active_isa() == Isa::avx2) return avx2::filter_equal(block, weights, target, out_indices);
#endif
  return scalar::filter_equal(block, weights, target, out_indices);
}

}  // namespace simlat::kernels
