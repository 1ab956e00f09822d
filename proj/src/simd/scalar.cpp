#include <algorithm>

#include "krasno/simd/kernels.hpp"

namespace krasno::simd::scalar {

double shoelace2(const double* x, const double* y, std::size_t n) {
  if (n < 3) return 0;
  double acc[4] = {0, 0, 0, 0};
  std::size_t i = 0;
  // edges i -> i+1 for i < n-1 in lanes, closing edge added last
  for (; i + 4 <= n - 1; i += 4)
    for (int l = 0; l < 4; ++l) acc[l] += x[i + l] * y[i + l + 1] - y[i + l] * x[i + l + 1];
  double s = (acc[0] + acc[2]) + (acc[1] + acc[3]);
  for (; i < n - 1; ++i) s += x[i] * y[i + 1] - y[i] * x[i + 1];
  return s + (x[n - 1] * y[0] - y[n - 1] * x[0]);
}

void dot_minmax(const double* x, const double* y, std::size_t n, double ux, double uy, double* lo, double* hi) {
  double mn = ux * x[0] + uy * y[0], mx = mn;
  for (std::size_t i = 0; i < n; ++i) {
    const double d = ux * x[i] + uy * y[i];
    mn = std::min(mn, d);
    mx = std::max(mx, d);
  }
  *lo = mn;
  *hi = mx;
}

void parity_inside(const double* x0, const double* y0, const double* x1, const double* y1, std::size_t m,
                   const double* qx, const double* qy, std::size_t n, std::uint8_t* out) {
  for (std::size_t j = 0; j < n; ++j) {
    unsigned c = 0;
    for (std::size_t e = 0; e < m; ++e) {
      const bool up = y0[e] <= qy[j], up1 = y1[e] <= qy[j];
      if (up == up1) continue;
      const double t = (qy[j] - y0[e]) / (y1[e] - y0[e]);
      const double xc = x0[e] + t * (x1[e] - x0[e]);
      if (qx[j] < xc) c ^= 1u;
    }
    out[j] = static_cast<std::uint8_t>(c);
  }
}

}  // namespace krasno::simd::scalar
