#include <cmath>

#include "simlat/constructions.hpp"
#include "simlat/errors.hpp"

namespace simlat {

namespace {

long isqrt_long(long n) {
  long r = static_cast<long>(std::sqrt(static_cast<double>(n)));
  while (r * r > n) --r;
  while ((r + 1) * (r + 1) <= n) ++r;
  return r;
}

}  // namespace

std::array<long, 4> represent_by_form(long c, FormKind form) {
  if (c < 1) throw InvalidInput("represent_by_form: c must be positive");
  if (c > 1'000'000'000L) throw InvalidInput("represent_by_form: c too large");
  const long w = form == FormKind::four_squares ? 1 : 3;
  for (long r = isqrt_long(c); r >= 0; --r) {
    const long c1 = c - r * r;
    for (long s = isqrt_long(c1); s >= 0; --s) {
      const long c2 = c1 - s * s;
      for (long t = isqrt_long(c2 / w); t >= 0; --t) {
        const long c3 = c2 - w * t * t;
        if (c3 % w != 0) continue;
        const long u = isqrt_long(c3 / w);
        if (u * u * w == c3) return {r, s, t, u};
      }
    }
  }
  throw InternalError("represent_by_form: no representation of " + std::to_string(c) + " by a universal form");
}

}  // namespace simlat
