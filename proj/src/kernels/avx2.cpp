// AVX2 kernels. Compiled with -mavx2 (no -mfma); only called after the
// dispatcher has confirmed CPU support.

#include "stabkit/errors.hpp"
#include "stabkit/kernels.hpp"

#if defined(STABKIT_HAVE_AVX2_KERNELS)
#include <immintrin.h>

#include <algorithm>
#include <cmath>
#endif

namespace stabkit::kernels::detail {

#if defined(STABKIT_HAVE_AVX2_KERNELS)

Complex inner_avx2(const Complex* x, const Complex* y, std::size_t n) {
  const auto* xd = reinterpret_cast<const double*>(x);
  const auto* yd = reinterpret_cast<const double*>(y);
  __m256d re_acc = _mm256_setzero_pd();  // [xr*yr, xi*yi, xr*yr, xi*yi]
  __m256d im_acc = _mm256_setzero_pd();  // [xr*yi, xi*yr, xr*yi, xi*yr]
  std::size_t k = 0;
  for (; k + 2 <= n; k += 2) {
    const __m256d xv = _mm256_loadu_pd(xd + 2 * k);
    const __m256d yv = _mm256_loadu_pd(yd + 2 * k);
    const __m256d ys = _mm256_permute_pd(yv, 0b0101);
    re_acc = _mm256_add_pd(re_acc, _mm256_mul_pd(xv, yv));
    im_acc = _mm256_add_pd(im_acc, _mm256_mul_pd(xv, ys));
  }
  alignas(32) double re[4];
  alignas(32) double im[4];
  _mm256_store_pd(re, re_acc);
  _mm256_store_pd(im, im_acc);
  if (k < n) {
    const double xr = x[k].real(), xi = x[k].imag();
    const double yr = y[k].real(), yi = y[k].imag();
    re[0] += xr * yr;
    re[1] += xi * yi;
    im[0] += xr * yi;
    im[1] += xi * yr;
  }
  return {(re[0] + re[1]) + (re[2] + re[3]), (im[0] - im[1]) + (im[2] - im[3])};
}

void axpy_avx2(Complex alpha, const Complex* x, Complex* y, std::size_t n) {
  const auto* xd = reinterpret_cast<const double*>(x);
  auto* yd = reinterpret_cast<double*>(y);
  const __m256d ar = _mm256_set1_pd(alpha.real());
  const __m256d ai = _mm256_set1_pd(alpha.imag());
  std::size_t k = 0;
  for (; k + 2 <= n; k += 2) {
    const __m256d xv = _mm256_loadu_pd(xd + 2 * k);
    const __m256d xs = _mm256_permute_pd(xv, 0b0101);
    // [ar*xr - ai*xi, ar*xi + ai*xr] per complex lane.
    const __m256d prod = _mm256_addsub_pd(_mm256_mul_pd(ar, xv), _mm256_mul_pd(ai, xs));
    _mm256_storeu_pd(yd + 2 * k, _mm256_add_pd(_mm256_loadu_pd(yd + 2 * k), prod));
  }
  if (k < n) axpy_scalar(alpha, x + k, y + k, n - k);
}

double max_abs_diff_avx2(const Complex* x, const Complex* y, std::size_t n) {
  const auto* xd = reinterpret_cast<const double*>(x);
  const auto* yd = reinterpret_cast<const double*>(y);
  __m256d best = _mm256_setzero_pd();
  std::size_t k = 0;
  for (; k + 2 <= n; k += 2) {
    const __m256d diff = _mm256_sub_pd(_mm256_loadu_pd(xd + 2 * k), _mm256_loadu_pd(yd + 2 * k));
    const __m256d sq = _mm256_mul_pd(diff, diff);
    // [dr^2 + di^2, same, ...] per complex lane.
    const __m256d mod2 = _mm256_hadd_pd(sq, sq);
    best = _mm256_max_pd(best, _mm256_sqrt_pd(mod2));
  }
  alignas(32) double lanes[4];
  _mm256_store_pd(lanes, best);
  double out = std::max(std::max(lanes[0], lanes[1]), std::max(lanes[2], lanes[3]));
  if (k < n) out = std::max(out, max_abs_diff_scalar(x + k, y + k, n - k));
  return out;
}

#else

Complex inner_avx2(const Complex*, const Complex*, std::size_t) {
  throw InvalidArgument("AVX2 kernels not compiled in");
}
void axpy_avx2(Complex, const Complex*, Complex*, std::size_t) {
  throw InvalidArgument("AVX2 kernels not compiled in");
}
double max_abs_diff_avx2(const Complex*, const Complex*, std::size_t) {
  throw InvalidArgument("AVX2 kernels not compiled in");
}

#endif

}  // namespace stabkit::kernels::detail
