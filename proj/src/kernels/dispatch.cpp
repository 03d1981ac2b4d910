#include <atomic>
#include <cmath>
#include <cstdlib>
#include <string>

#include "stabkit/errors.hpp"
#include "stabkit/kernels.hpp"

namespace stabkit::kernels {

namespace {

constexpr KernelTable kScalar{&detail::inner_scalar, &detail::axpy_scalar, &detail::max_abs_diff_scalar};
constexpr KernelTable kAvx2{&detail::inner_avx2, &detail::axpy_avx2, &detail::max_abs_diff_avx2};

bool cpu_has_avx2() {
#if defined(STABKIT_HAVE_AVX2_KERNELS) && (defined(__GNUC__) || defined(__clang__))
  return __builtin_cpu_supports("avx2");
#else
  return false;
#endif
}

Isa initial_isa() {
  if (const char* env = std::getenv("STABKIT_ISA")) {
    const std::string want(env);
    if (want == "scalar") return Isa::scalar;
    if (want == "avx2" && cpu_has_avx2()) return Isa::avx2;
  }
  return cpu_has_avx2() ? Isa::avx2 : Isa::scalar;
}

std::atomic<const KernelTable*>& active_table() {
  static std::atomic<const KernelTable*> table{initial_isa() == Isa::avx2 ? &kAvx2 : &kScalar};
  return table;
}

}  // namespace

std::string_view isa_name(Isa isa) { return isa == Isa::avx2 ? "avx2" : "scalar"; }

bool isa_supported(Isa isa) { return isa == Isa::scalar || cpu_has_avx2(); }

const KernelTable& table(Isa isa) {
  if (!isa_supported(isa)) throw InvalidArgument("ISA not supported: " + std::string(isa_name(isa)));
  return isa == Isa::avx2 ? kAvx2 : kScalar;
}

std::vector<Isa> supported_isas() {
  std::vector<Isa> out{Isa::scalar};
  if (isa_supported(Isa::avx2)) out.push_back(Isa::avx2);
  return out;
}

Isa active_isa() { return active_table().load() == &kAvx2 ? Isa::avx2 : Isa::scalar; }

void set_active_isa(Isa isa) { active_table().store(&table(isa)); }

Complex inner(std::span<const Complex> x, std::span<const Complex> y) {
  if (x.size() != y.size()) throw DimensionMismatch("inner: length mismatch");
  return active_table().load()->inner(x.data(), y.data(), x.size());
}

void axpy(Complex alpha, std::span<const Complex> x, std::span<Complex> y) {
  if (x.size() != y.size()) throw DimensionMismatch("axpy: length mismatch");
  active_table().load()->axpy(alpha, x.data(), y.data(), x.size());
}

double max_abs_diff(std::span<const Complex> x, std::span<const Complex> y) {
  if (x.size() != y.size()) throw DimensionMismatch("max_abs_diff: length mismatch");
  return active_table().load()->max_abs_diff(x.data(), y.data(), x.size());
}

double norm(std::span<const Complex> x) { return std::sqrt(inner(x, x).real()); }

}  // namespace stabkit::kernels
