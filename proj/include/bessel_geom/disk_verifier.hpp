#pragma once

#include <vector>

#include "bessel_geom/bessel_core.hpp"
#include "bessel_geom/class_spec.hpp"

namespace bessel_geom {

/// Concentric sample rings inside the unit disk; z = 0 is never sampled
/// (both quotients tend to 0 there).
struct DiskGrid {
  std::vector<double> radii;
  int angles_per_ring = 720;

  /// Radii 0.1, 0.2, ..., 0.9, 0.95, 0.99, 0.999 with 720 angles each.
  static DiskGrid default_grid();

  /// Throws DomainError unless every radius is in (0, 1) and
  /// angles_per_ring > 0.
  void validate() const;
  double max_radius() const;
  int size() const { return static_cast<int>(radii.size()) * angles_per_ring; }
};

inline constexpr double kDegeneracyGuard = 1e-14;

enum class QuotientKind { Starlike, Convex };

/// |(w - 1) / (w + 1 - 2 alpha)| with w = z u'(z) / u(z). Requires
/// 0 < |z| < 1; throws DegenerateError if |u| or the denominator falls
/// below kDegeneracyGuard.
double starlike_quotient(const BesselParams& params, Complex z, double alpha);

/// |v / (v + 2 (1 - alpha))| with v = z u''(z) / u'(z).
double convex_quotient(const BesselParams& params, Complex z, double alpha);

/// Same quotients for an arbitrary normalized Taylor polynomial.
double starlike_quotient(const TaylorPolynomial& f, Complex z, double alpha);
double convex_quotient(const TaylorPolynomial& f, Complex z, double alpha);

/// Empirical supremum of a quotient over a grid. A sampled maximum below
/// beta is consistent with membership; it does not certify it.
struct SupEstimate {
  double max_quotient = 0.0;
  Complex argmax_z{0.0, 0.0};
  int violations = 0;         // points with quotient >= beta
  int degenerate_points = 0;  // points skipped by the guard
  int points = 0;
  std::vector<double> ring_max;  // per radius, same order as the grid
};

SupEstimate sup_estimate(const BesselParams& params, const ClassSpec& cls,
                         QuotientKind which,
                         const DiskGrid& grid = DiskGrid::default_grid());

SupEstimate sup_estimate(const TaylorPolynomial& f, const ClassSpec& cls,
                         QuotientKind which,
                         const DiskGrid& grid = DiskGrid::default_grid());

/// Number of adjacent ring pairs whose maxima decrease by more than tol
/// going outward. Reported only; the quotient is not analytic.
int ring_monotonicity_breaks(const SupEstimate& estimate, double tol = 1e-9);

}  // namespace bessel_geom
