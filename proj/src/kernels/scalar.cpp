// Scalar reference kernels. The accumulation layout mirrors one 256-bit
// register holding two complex numbers: lane pair 0 takes even indices, lane
// pair 1 odd indices, and the lanes are combined in a fixed order at the end.

#include <algorithm>
#include <cmath>

#include "stabkit/kernels.hpp"

namespace stabkit::kernels::detail {

Complex inner_scalar(const Complex* x, const Complex* y, std::size_t n) {
  // re_acc[l] collects x.re*y.re (l even) or x.im*y.im (l odd);
  // im_acc[l] collects x.re*y.im (l even) or x.im*y.re (l odd).
  double re_acc[4] = {0.0, 0.0, 0.0, 0.0};
  double im_acc[4] = {0.0, 0.0, 0.0, 0.0};
  std::size_t k = 0;
  for (; k + 2 <= n; k += 2) {
    for (std::size_t j = 0; j < 2; ++j) {
      const double xr = x[k + j].real(), xi = x[k + j].imag();
      const double yr = y[k + j].real(), yi = y[k + j].imag();
      re_acc[2 * j] += xr * yr;
      re_acc[2 * j + 1] += xi * yi;
      im_acc[2 * j] += xr * yi;
      im_acc[2 * j + 1] += xi * yr;
    }
  }
  if (k < n) {
    const double xr = x[k].real(), xi = x[k].imag();
    const double yr = y[k].real(), yi = y[k].imag();
    re_acc[0] += xr * yr;
    re_acc[1] += xi * yi;
    im_acc[0] += xr * yi;
    im_acc[1] += xi * yr;
  }
  const double re = (re_acc[0] + re_acc[1]) + (re_acc[2] + re_acc[3]);
  const double im = (im_acc[0] - im_acc[1]) + (im_acc[2] - im_acc[3]);
  return {re, im};
}

void axpy_scalar(Complex alpha, const Complex* x, Complex* y, std::size_t n) {
  const double ar = alpha.real(), ai = alpha.imag();
  for (std::size_t k = 0; k < n; ++k) {
    const double xr = x[k].real(), xi = x[k].imag();
    const double re = ar * xr - ai * xi;
    const double im = ar * xi + ai * xr;
    y[k] = Complex(y[k].real() + re, y[k].imag() + im);
  }
}

double max_abs_diff_scalar(const Complex* x, const Complex* y, std::size_t n) {
  double best = 0.0;
  for (std::size_t k = 0; k < n; ++k) {
    const double dr = x[k].real() - y[k].real();
    const double di = x[k].imag() - y[k].imag();
    best = std::max(best, std::sqrt(dr * dr + di * di));
  }
  return best;
}

}  // namespace stabkit::kernels::detail
