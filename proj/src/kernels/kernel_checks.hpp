#pragma once

#include "bessel_geom/errors.hpp"
#include "bessel_geom/series_kernels.hpp"

namespace bessel_geom::kernels::detail {

inline void check_shapes(std::span<const double> coefficients,
                         const ConstSplitComplexSpan& points,
                         const PolynomialOutputs& out) {
  if (coefficients.empty()) throw DomainError("empty coefficient list");
  const auto n = points.re.size();
  const bool ok = points.im.size() == n && out.value.re.size() == n &&
                  out.value.im.size() == n && out.first.re.size() == n &&
                  out.first.im.size() == n && out.second.re.size() == n &&
                  out.second.im.size() == n;
  if (!ok) throw DomainError("kernel input and output lengths differ");
}

}  // namespace bessel_geom::kernels::detail
