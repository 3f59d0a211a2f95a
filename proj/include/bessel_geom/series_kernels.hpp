#pragma once

#include <span>
#include <string_view>

namespace bessel_geom::kernels {

// Batched evaluation of a real-coefficient polynomial and its first two
// derivatives at many complex points, stored split (re/im arrays).
//
// The scalar kernel is the reference. Vector kernels must agree with it to
// rounding (they may use fused multiply-add) and are picked at runtime from
// what the CPU supports.

enum class Backend { Scalar, Avx2 };

struct SplitComplexSpan {
  std::span<double> re;
  std::span<double> im;
};

struct ConstSplitComplexSpan {
  std::span<const double> re;
  std::span<const double> im;
};

struct PolynomialOutputs {
  SplitComplexSpan value;
  SplitComplexSpan first;
  SplitComplexSpan second;
};

void evaluate_scalar(std::span<const double> coefficients,
                     ConstSplitComplexSpan points, PolynomialOutputs out);

#if defined(BESSEL_GEOM_HAVE_AVX2_KERNEL)
void evaluate_avx2(std::span<const double> coefficients,
                   ConstSplitComplexSpan points, PolynomialOutputs out);
#endif

/// Runs the currently active backend.
void evaluate(std::span<const double> coefficients,
              ConstSplitComplexSpan points, PolynomialOutputs out);

bool backend_available(Backend backend);

/// Best backend the running CPU supports, unless overridden.
Backend active_backend();

/// Forces a backend (tests, benchmarking). Throws DomainError when the
/// backend is not available on this CPU.
void set_backend(Backend backend);

std::string_view backend_name(Backend backend);

}  // namespace bessel_geom::kernels
