#pragma once

// Complex-vector inner loops used by the Hilbert-space realizations.
//
// Every kernel has a scalar reference and, where the CPU supports it, an AVX2
// variant. The variants use the same lane layout and operation order as the
// reference (two interleaved complex lanes, no fused multiply-add), so they
// return bit-identical results. The active variant is selected once at
// startup from CPUID and can be pinned with STABKIT_ISA=scalar|avx2.

#include <complex>
#include <cstddef>
#include <span>
#include <string_view>
#include <vector>

namespace stabkit {

using Complex = std::complex<double>;

namespace kernels {

enum class Isa { scalar, avx2 };

std::string_view isa_name(Isa isa);

struct KernelTable {
  /// sum_k conj(x_k) y_k
  Complex (*inner)(const Complex* x, const Complex* y, std::size_t n);
  /// y_k += alpha x_k
  void (*axpy)(Complex alpha, const Complex* x, Complex* y, std::size_t n);
  /// max_k |x_k - y_k|
  double (*max_abs_diff)(const Complex* x, const Complex* y, std::size_t n);
};

bool isa_supported(Isa isa);
/// Table for a specific variant; throws InvalidArgument if unsupported.
const KernelTable& table(Isa isa);
std::vector<Isa> supported_isas();

Isa active_isa();
/// Throws InvalidArgument if the CPU lacks `isa`.
void set_active_isa(Isa isa);

Complex inner(std::span<const Complex> x, std::span<const Complex> y);
void axpy(Complex alpha, std::span<const Complex> x, std::span<Complex> y);
double max_abs_diff(std::span<const Complex> x, std::span<const Complex> y);
double norm(std::span<const Complex> x);

namespace detail {
Complex inner_scalar(const Complex* x, const Complex* y, std::size_t n);
void axpy_scalar(Complex alpha, const Complex* x, Complex* y, std::size_t n);
double max_abs_diff_scalar(const Complex* x, const Complex* y, std::size_t n);

Complex inner_avx2(const Complex* x, const Complex* y, std::size_t n);
void axpy_avx2(Complex alpha, const Complex* x, Complex* y, std::size_t n);
double max_abs_diff_avx2(const Complex* x, const Complex* y, std::size_t n);
}  // namespace detail

}  // namespace kernels
}  // namespace stabkit
