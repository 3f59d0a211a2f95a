// Compiled with -mavx2 -mfma; only reached after a runtime CPU check.
#include <immintrin.h>

#include <cstddef>

#include "bessel_geom/series_kernels.hpp"
#include "kernel_checks.hpp"

namespace bessel_geom::kernels {

namespace {

struct Lanes {
  __m256d re;
  __m256d im;
};

// s * z + add, four points at a time.
inline Lanes mul_add(Lanes s, Lanes z, Lanes add) {
  const __m256d re = _mm256_fmadd_pd(s.re, z.re,
                                     _mm256_fnmadd_pd(s.im, z.im, add.re));
  const __m256d im = _mm256_fmadd_pd(s.re, z.im,
                                     _mm256_fmadd_pd(s.im, z.re, add.im));
  return {re, im};
}

}  // namespace

void evaluate_avx2(std::span<const double> coefficients,
                   ConstSplitComplexSpan points, PolynomialOutputs out) {
  detail::check_shapes(coefficients, points, out);
  const std::size_t degree = coefficients.size() - 1;
  const std::size_t n = points.re.size();
  const std::size_t vector_end = n - n % 4;
  const __m256d zero = _mm256_setzero_pd();
  const __m256d two = _mm256_set1_pd(2.0);

  for (std::size_t i = 0; i < vector_end; i += 4) {
    const Lanes z{_mm256_loadu_pd(points.re.data() + i),
                  _mm256_loadu_pd(points.im.data() + i)};
    Lanes s0{_mm256_set1_pd(coefficients[degree]), zero};
    Lanes s1{zero, zero};
    Lanes s2{zero, zero};
    for (std::size_t j = degree; j-- > 0;) {
      s2 = mul_add(s2, z, s1);
      s1 = mul_add(s1, z, s0);
      s0 = mul_add(s0, z, Lanes{_mm256_set1_pd(coefficients[j]), zero});
    }
    _mm256_storeu_pd(out.value.re.data() + i, s0.re);
    _mm256_storeu_pd(out.value.im.data() + i, s0.im);
    _mm256_storeu_pd(out.first.re.data() + i, s1.re);
    _mm256_storeu_pd(out.first.im.data() + i, s1.im);
    _mm256_storeu_pd(out.second.re.data() + i, _mm256_mul_pd(two, s2.re));
    _mm256_storeu_pd(out.second.im.data() + i, _mm256_mul_pd(two, s2.im));
  }

  if (vector_end == n) return;
  const std::size_t rest = n - vector_end;
  evaluate_scalar(coefficients,
                  {points.re.subspan(vector_end, rest),
                   points.im.subspan(vector_end, rest)},
                  {{out.value.re.subspan(vector_end, rest),
                    out.value.im.subspan(vector_end, rest)},
                   {out.first.re.subspan(vector_end, rest),
                    out.first.im.subspan(vector_end, rest)},
                   {out.second.re.subspan(vector_end, rest),
                    out.second.im.subspan(vector_end, rest)}});
}

}  // namespace bessel_geom::kernels
