#include <cstdlib>
#include <cstring>

#include "krasno/simd/kernels.hpp"

namespace krasno::simd {

bool avx2_supported() {
#if defined(__x86_64__) || defined(__i386__)
  static const bool ok = __builtin_cpu_supports("avx2") && __builtin_cpu_supports("fma");
  return ok;
#else
  return false;
#endif
}

Isa active_isa() {
  static const Isa isa = [] {
    const char* e = std::getenv("KRASNO_SIMD");
    if (e && std::strcmp(e, "scalar") == 0) return Isa::Scalar;
    return avx2_supported() ? Isa::Avx2 : Isa::Scalar;
  }();
  return isa;
}

const char* isa_name(Isa isa) { return isa == Isa::Avx2 ? "avx2" : "scalar"; }

double shoelace2(const double* x, const double* y, std::size_t n) {
  return active_isa() == Isa::Avx2 ? avx2::shoelace2(x, y, n) : scalar::shoelace2(x, y, n);
}

void dot_minmax(const double* x, const double* y, std::size_t n, double ux, double uy, double* lo, double* hi) {
  if (active_isa() == Isa::Avx2) avx2::dot_minmax(x, y, n, ux, uy, lo, hi);
  else scalar::dot_minmax(x, y, n, ux, uy, lo, hi);
}

void parity_inside(const double* x0, const double* y0, const double* x1, const double* y1, std::size_t m,
                   const double* qx, const double* qy, std::size_t n, std::uint8_t* out) {
  if (active_isa() == Isa::Avx2) avx2::parity_inside(x0, y0, x1, y1, m, qx, qy, n, out);
  else scalar::parity_inside(x0, y0, x1, y1, m, qx, qy, n, out);
}

}  // namespace krasno::simd
