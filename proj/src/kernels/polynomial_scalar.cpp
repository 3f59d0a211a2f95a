#include <cstddef>

#include "bessel_geom/series_kernels.hpp"
#include "kernel_checks.hpp"

namespace bessel_geom::kernels {

// Simultaneous Horner recurrence for f, f' and f''/2:
//   s2 <- s2 z + s1,  s1 <- s1 z + s0,  s0 <- s0 z + a_j.
void evaluate_scalar(std::span<const double> coefficients,
                     ConstSplitComplexSpan points, PolynomialOutputs out) {
  detail::check_shapes(coefficients, points, out);
  const std::size_t degree = coefficients.size() - 1;
  for (std::size_t i = 0; i < points.re.size(); ++i) {
    const double zr = points.re[i];
    const double zi = points.im[i];
    double s0r = coefficients[degree], s0i = 0.0;
    double s1r = 0.0, s1i = 0.0;
    double s2r = 0.0, s2i = 0.0;
    for (std::size_t j = degree; j-- > 0;) {
      const double t2r = s2r * zr - s2i * zi + s1r;
      const double t2i = s2r * zi + s2i * zr + s1i;
      const double t1r = s1r * zr - s1i * zi + s0r;
      const double t1i = s1r * zi + s1i * zr + s0i;
      const double t0r = s0r * zr - s0i * zi + coefficients[j];
      const double t0i = s0r * zi + s0i * zr;
      s2r = t2r;
      s2i = t2i;
      s1r = t1r;
      s1i = t1i;
      s0r = t0r;
      s0i = t0i;
    }
    out.value.re[i] = s0r;
    out.value.im[i] = s0i;
    out.first.re[i] = s1r;
    out.first.im[i] = s1i;
    out.second.re[i] = 2.0 * s2r;
    out.second.im[i] = 2.0 * s2i;
  }
}

}  // namespace bessel_geom::kernels
