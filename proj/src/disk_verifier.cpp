#include "bessel_geom/disk_verifier.hpp"

#include <cmath>
#include <numbers>
#include <optional>
#include <sstream>

#include "bessel_geom/errors.hpp"
#include "bessel_geom/series_kernels.hpp"

namespace bessel_geom {

namespace {

struct Derivatives {
  Complex u;
  Complex du;
  Complex d2u;
};

std::optional<double> quotient(QuotientKind which, const Derivatives& d,
                               Complex z, double alpha) {
  if (which == QuotientKind::Starlike) {
    if (std::abs(d.u) < kDegeneracyGuard) return std::nullopt;
    const Complex w = z * d.du / d.u;
    const Complex den = w + (1.0 - 2.0 * alpha);
    if (std::abs(den) < kDegeneracyGuard) return std::nullopt;
    return std::abs(w - 1.0) / std::abs(den);
  }
  if (std::abs(d.du) < kDegeneracyGuard) return std::nullopt;
  const Complex v = z * d.d2u / d.du;
  const Complex den = v + 2.0 * (1.0 - alpha);
  if (std::abs(den) < kDegeneracyGuard) return std::nullopt;
  return std::abs(v) / std::abs(den);
}

void check_point(Complex z) {
  const double r = std::abs(z);
  if (!(r > 0.0 && r < 1.0)) {
    std::ostringstream msg;
    msg << "quotients are sampled on 0 < |z| < 1, got |z| = " << r;
    throw DomainError(msg.str());
  }
}

double checked(std::optional<double> value, Complex z) {
  if (!value) {
    std::ostringstream msg;
    msg << "quotient denominator below guard at z = " << z;
    throw DegenerateError(msg.str());
  }
  return *value;
}

Derivatives from_series(const BesselParams& params, Complex z) {
  const SeriesDerivatives d = eval_u_derivatives(params, z);
  return {d.u.value, d.du.value, d.d2u.value};
}

Derivatives from_polynomial(const TaylorPolynomial& f, Complex z) {
  const double zr = z.real();
  const double zi = z.imag();
  double ur, ui, dr, di, d2r, d2i;
  kernels::evaluate_scalar(f.coefficients, {{&zr, 1}, {&zi, 1}},
                           {{{&ur, 1}, {&ui, 1}},
                            {{&dr, 1}, {&di, 1}},
                            {{&d2r, 1}, {&d2i, 1}}});
  return {{ur, ui}, {dr, di}, {d2r, d2i}};
}

}  // namespace

DiskGrid DiskGrid::default_grid() {
  return {{0.1, 0.2, 0.3, 0.4, 0.5, 0.6, 0.7, 0.8, 0.9, 0.95, 0.99, 0.999},
          720};
}

void DiskGrid::validate() const {
  if (radii.empty()) throw DomainError("disk grid has no rings");
  if (angles_per_ring <= 0) throw DomainError("angles per ring must be > 0");
  for (const double r : radii) {
    if (!(r > 0.0 && r < 1.0)) throw DomainError("ring radius outside (0, 1)");
  }
}

double DiskGrid::max_radius() const {
  double m = 0.0;
  for (const double r : radii) m = std::max(m, r);
  return m;
}

double starlike_quotient(const BesselParams& params, Complex z, double alpha) {
  check_point(z);
  return checked(quotient(QuotientKind::Starlike, from_series(params, z), z, alpha), z);
}

double convex_quotient(const BesselParams& params, Complex z, double alpha) {
  check_point(z);
  return checked(quotient(QuotientKind::Convex, from_series(params, z), z, alpha), z);
}

double starlike_quotient(const TaylorPolynomial& f, Complex z, double alpha) {
  check_point(z);
  return checked(quotient(QuotientKind::Starlike, from_polynomial(f, z), z, alpha), z);
}

double convex_quotient(const TaylorPolynomial& f, Complex z, double alpha) {
  check_point(z);
  return checked(quotient(QuotientKind::Convex, from_polynomial(f, z), z, alpha), z);
}

SupEstimate sup_estimate(const BesselParams& params, const ClassSpec& cls,
                         QuotientKind which, const DiskGrid& grid) {
  grid.validate();
  return sup_estimate(taylor_polynomial(params, grid.max_radius()), cls, which,
                      grid);
}

SupEstimate sup_estimate(const TaylorPolynomial& f, const ClassSpec& cls,
                         QuotientKind which, const DiskGrid& grid) {
  grid.validate();
  if (grid.max_radius() > f.radius) {
    throw DomainError("grid extends beyond the polynomial's accuracy radius");
  }
  const auto n = static_cast<std::size_t>(grid.size());
  const auto angles = static_cast<std::size_t>(grid.angles_per_ring);
  std::vector<double> zr(n), zi(n);
  for (std::size_t ring = 0; ring < grid.radii.size(); ++ring) {
    for (std::size_t j = 0; j < angles; ++j) {
      const double theta = 2.0 * std::numbers::pi * static_cast<double>(j) /
                           static_cast<double>(angles);
      zr[ring * angles + j] = grid.radii[ring] * std::cos(theta);
      zi[ring * angles + j] = grid.radii[ring] * std::sin(theta);
    }
  }
  std::vector<double> ur(n), ui(n), dr(n), di(n), d2r(n), d2i(n);
  kernels::evaluate(f.coefficients, {zr, zi},
                    {{ur, ui}, {dr, di}, {d2r, d2i}});

  SupEstimate est;
  est.points = static_cast<int>(n);
  est.ring_max.assign(grid.radii.size(), 0.0);
  for (std::size_t i = 0; i < n; ++i) {
    const Complex z(zr[i], zi[i]);
    const auto value = quotient(which,
                                {{ur[i], ui[i]}, {dr[i], di[i]}, {d2r[i], d2i[i]}},
                                z, cls.alpha());
    if (!value) {
      ++est.degenerate_points;
      continue;
    }
    if (*value >= cls.beta()) ++est.violations;
    double& ring_max = est.ring_max[i / angles];
    ring_max = std::max(ring_max, *value);
    if (*value > est.max_quotient) {
      est.max_quotient = *value;
      est.argmax_z = z;
    }
  }
  return est;
}

int ring_monotonicity_breaks(const SupEstimate& estimate, double tol) {
  int breaks = 0;
  for (std::size_t i = 1; i < estimate.ring_max.size(); ++i) {
    if (estimate.ring_max[i] < estimate.ring_max[i - 1] - tol) ++breaks;
  }
  return breaks;
}

}  // namespace bessel_geom
