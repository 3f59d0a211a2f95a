#include <atomic>
#include <string>

#include "bessel_geom/errors.hpp"
#include "bessel_geom/series_kernels.hpp"

namespace bessel_geom::kernels {

namespace {

bool cpu_has_avx2() {
#if defined(BESSEL_GEOM_HAVE_AVX2_KERNEL) && (defined(__GNUC__) || defined(__clang__))
  __builtin_cpu_init();
  return __builtin_cpu_supports("avx2") && __builtin_cpu_supports("fma");
#else
  return false;
#endif
}

Backend detect() { return cpu_has_avx2() ? Backend::Avx2 : Backend::Scalar; }

std::atomic<Backend>& current() {
  static std::atomic<Backend> backend{detect()};
  return backend;
}

}  // namespace

bool backend_available(Backend backend) {
  switch (backend) {
    case Backend::Scalar:
      return true;
    case Backend::Avx2:
      return cpu_has_avx2();
  }
  return false;
}

Backend active_backend() { return current().load(std::memory_order_relaxed); }

void set_backend(Backend backend) {
  if (!backend_available(backend)) {
    throw DomainError("kernel backend " + std::string(backend_name(backend)) +
                      " is not available on this CPU");
  }
  current().store(backend, std::memory_order_relaxed);
}

std::string_view backend_name(Backend backend) {
  switch (backend) {
    case Backend::Scalar:
      return "scalar";
    case Backend::Avx2:
      return "avx2";
  }
  return "unknown";
}

void evaluate(std::span<const double> coefficients,
              ConstSplitComplexSpan points, PolynomialOutputs out) {
  switch (active_backend()) {
#if defined(BESSEL_GEOM_HAVE_AVX2_KERNEL)
    case Backend::Avx2:
      evaluate_avx2(coefficients, points, out);
      return;
#endif
    default:
      evaluate_scalar(coefficients, points, out);
      return;
  }
}

}  // namespace bessel_geom::kernels
