#include <immintrin.h>

#include <algorithm>

#include "krasno/simd/kernels.hpp"

namespace krasno::simd::avx2 {

double shoelace2(const double* x, const double* y, std::size_t n) {
  if (n < 3) return 0;
  __m256d acc = _mm256_setzero_pd();
  std::size_t i = 0;
  for (; i + 4 <= n - 1; i += 4) {
    const __m256d xa = _mm256_loadu_pd(x + i), ya = _mm256_loadu_pd(y + i);
    const __m256d xb = _mm256_loadu_pd(x + i + 1), yb = _mm256_loadu_pd(y + i + 1);
    acc = _mm256_add_pd(acc, _mm256_sub_pd(_mm256_mul_pd(xa, yb), _mm256_mul_pd(ya, xb)));
  }
  alignas(32) double a[4];
  _mm256_store_pd(a, acc);
  double s = (a[0] + a[2]) + (a[1] + a[3]);
  for (; i < n - 1; ++i) s += x[i] * y[i + 1] - y[i] * x[i + 1];
  return s + (x[n - 1] * y[0] - y[n - 1] * x[0]);
}

void dot_minmax(const double* x, const double* y, std::size_t n, double ux, double uy, double* lo, double* hi) {
  const double first = ux * x[0] + uy * y[0];
  __m256d mn = _mm256_set1_pd(first), mx = mn;
  const __m256d vx = _mm256_set1_pd(ux), vy = _mm256_set1_pd(uy);
  std::size_t i = 0;
  for (; i + 4 <= n; i += 4) {
    const __m256d d = _mm256_add_pd(_mm256_mul_pd(vx, _mm256_loadu_pd(x + i)), _mm256_mul_pd(vy, _mm256_loadu_pd(y + i)));
    mn = _mm256_min_pd(mn, d);
    mx = _mm256_max_pd(mx, d);
  }
  alignas(32) double a[4], b[4];
  _mm256_store_pd(a, mn);
  _mm256_store_pd(b, mx);
  double l = std::min(std::min(a[0], a[1]), std::min(a[2], a[3]));
  double h = std::max(std::max(b[0], b[1]), std::max(b[2], b[3]));
  for (; i < n; ++i) {
    const double d = ux * x[i] + uy * y[i];
    l = std::min(l, d);
    h = std::max(h, d);
  }
  *lo = l;
  *hi = h;
}

// four queries per step against every edge
void parity_inside(const double* x0, const double* y0, const double* x1, const double* y1, std::size_t m,
                   const double* qx, const double* qy, std::size_t n, std::uint8_t* out) {
  std::size_t j = 0;
  for (; j + 4 <= n; j += 4) {
    const __m256d px = _mm256_loadu_pd(qx + j), py = _mm256_loadu_pd(qy + j);
    __m256d c = _mm256_setzero_pd();
    for (std::size_t e = 0; e < m; ++e) {
      const __m256d a0 = _mm256_set1_pd(x0[e]), b0 = _mm256_set1_pd(y0[e]);
      const __m256d a1 = _mm256_set1_pd(x1[e]), b1 = _mm256_set1_pd(y1[e]);
      const __m256d up = _mm256_cmp_pd(b0, py, _CMP_LE_OQ), up1 = _mm256_cmp_pd(b1, py, _CMP_LE_OQ);
      const __m256d straddle = _mm256_xor_pd(up, up1);
      if (_mm256_movemask_pd(straddle) == 0) continue;
      const __m256d t = _mm256_div_pd(_mm256_sub_pd(py, b0), _mm256_sub_pd(b1, b0));
      const __m256d xc = _mm256_add_pd(a0, _mm256_mul_pd(t, _mm256_sub_pd(a1, a0)));
      const __m256d hit = _mm256_and_pd(straddle, _mm256_cmp_pd(px, xc, _CMP_LT_OQ));
      c = _mm256_xor_pd(c, hit);
    }
    const int mask = _mm256_movemask_pd(c);
    for (int l = 0; l < 4; ++l) out[j + l] = static_cast<std::uint8_t>((mask >> l) & 1);
  }
  if (j < n) scalar::parity_inside(x0, y0, x1, y1, m, qx + j, qy + j, n - j, out + j);
}

}  // namespace krasno::simd::avx2
