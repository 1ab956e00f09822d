#pragma once

#include <cstddef>
#include <cstdint>

// Double batch kernels, scalar and AVX2. Same four-lane order in both.
namespace krasno::simd {

enum class Isa { Scalar, Avx2 };

// Chosen once: AVX2 when the CPU has it, unless KRASNO_SIMD=scalar.
Isa active_isa();
const char* isa_name(Isa isa);
bool avx2_supported();

// Twice the signed area of the closed ring (x[i], y[i]).
double shoelace2(const double* x, const double* y, std::size_t n);

// min and max of ux*x[i] + uy*y[i]; n >= 1.
void dot_minmax(const double* x, const double* y, std::size_t n, double ux, double uy, double* lo, double* hi);

// Even-odd point in polygon over an edge soup (x0,y0)->(x1,y1). out[j] = 1 when
// query j is inside. Points on edges land on either side.
void parity_inside(const double* x0, const double* y0, const double* x1, const double* y1, std::size_t m,
                   const double* qx, const double* qy, std::size_t n, std::uint8_t* out);

namespace scalar {
double shoelace2(const double* x, const double* y, std::size_t n);
void dot_minmax(const double* x, const double* y, std::size_t n, double ux, double uy, double* lo, double* hi);
void parity_inside(const double* x0, const double* y0, const double* x1, const double* y1, std::size_t m,
                   const double* qx, const double* qy, std::size_t n, std::uint8_t* out);
}  // namespace scalar

namespace avx2 {
double shoelace2(const double* x, const double* y, std::size_t n);
void dot_minmax(const double* x, const double* y, std::size_t n, double ux, double uy, double* lo, double* hi);
void parity_inside(const double* x0, const double* y0, const double* x1, const double* y1, std::size_t m,
                   const double* qx, const double* qy, std::size_t n, std::uint8_t* out);
}  // namespace avx2

}  // namespace krasno::simd
