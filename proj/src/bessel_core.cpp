#include "bessel_geom/bessel_core.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include "bessel_geom/compensated_sum.hpp"
#include "bessel_geom/errors.hpp"

namespace bessel_geom {

namespace {

bool is_nonpositive_integer(double x) {
  return x <= 0.0 && std::nearbyint(x) == x;
}

// Bounds on sum_{m > n} w(m) |P_m| for the weights 1, m and m (m - 1), given
// |P_{n+1}| and r = |P_{n+2} / P_{n+1}|. The term ratios decrease
// monotonically once q + n > 0, so each remainder is majorized by a geometric
// series starting at term n + 1.
struct Remainders {
  double plain;
  double first;
  double second;
  bool ratios_ok;  // every geometric ratio <= 1/2
};

Remainders remainders_after(int n, double next_magnitude, double next_ratio) {
  const double nn = n;
  const double rho0 = next_ratio;
  const double rho1 = next_ratio * (nn + 2.0) / (nn + 1.0);
  const double rho2 = next_ratio * (nn + 2.0) / nn;
  Remainders r{};
  r.ratios_ok = rho0 <= 0.5 && rho1 <= 0.5 && rho2 <= 0.5;
  if (!r.ratios_ok) return r;
  r.plain = next_magnitude / (1.0 - rho0);
  r.first = (nn + 1.0) * next_magnitude / (1.0 - rho1);
  r.second = (nn + 1.0) * nn * next_magnitude / (1.0 - rho2);
  return r;
}

void check_series_args(Complex z, double eps) {
  if (!(eps > 0.0)) throw DomainError("series tolerance must be positive");
  if (!(std::abs(z) <= kMaxSeriesArgument)) {
    std::ostringstream msg;
    msg << "|z| = " << std::abs(z) << " outside the working region |z| <= "
        << kMaxSeriesArgument;
    throw DomainError(msg.str());
  }
}

// Sums u = z + sum_{n>=2} P_n z^2, u' = 1 + sum n P_n z and
// u'' = sum n (n-1) P_n with P_n = a_n z^{n-2}.
SeriesDerivatives sum_series(const BesselParams& params, Complex z, double eps,
                             bool derivatives) {
  check_series_args(z, eps);
  const double q = params.q();
  const double neg_c = -params.c();
  const double abs_cz = std::abs(params.c()) * std::abs(z);
  const Complex z2 = z * z;
  const double abs_z = std::abs(z);

  ComplexCompensatedSum u(z);
  ComplexCompensatedSum du(Complex(1.0, 0.0));
  ComplexCompensatedSum d2u;

  Complex term = neg_c / q;  // P_2
  for (int n = 2;; ++n) {
    const double nn = n;
    u += term * z2;
    if (derivatives) {
      du += nn * term * z;
      d2u += nn * (nn - 1.0) * term;
    }

    const Complex next = term * neg_c * z / ((q + (nn - 1.0)) * nn);
    if (n >= kMinSeriesTerms && q + nn > 0.0) {
      const double next_ratio = abs_cz / ((q + nn) * (nn + 1.0));
      const Remainders rem = remainders_after(n, std::abs(next), next_ratio);
      if (rem.ratios_ok) {
        const double tail0 = abs_z * abs_z * rem.plain;
        const double tail1 = abs_z * rem.first;
        const double tail2 = rem.second;
        const bool done = derivatives
                              ? (tail0 < eps && tail1 < eps && tail2 < eps)
                              : tail0 < eps;
        if (done) {
          SeriesDerivatives out;
          out.u = {u.value(), n, tail0};
          out.du = {du.value(), n, tail1};
          out.d2u = {d2u.value(), n, tail2};
          return out;
        }
      }
    }
    if (n >= kMaxSeriesTerms) {
      throw NoConvergence("series did not meet its tail criterion within " +
                          std::to_string(kMaxSeriesTerms) + " terms");
    }
    term = next;
  }
}

}  // namespace

BesselParams::BesselParams(double p, double b, double c)
    : p_(p), b_(b), c_(c), q_(p + (b + 1.0) / 2.0) {
  if (!std::isfinite(p) || !std::isfinite(b) || !std::isfinite(c)) {
    throw DomainError("Bessel parameters must be finite");
  }
  if (is_nonpositive_integer(q_)) {
    std::ostringstream msg;
    msg << "q = p + (b+1)/2 = " << q_ << " is a pole of the Pochhammer symbol";
    throw PoleError(msg.str());
  }
}

double order_lower_bound(BesselKind kind) {
  return kind == BesselKind::Kind3 ? -1.5 : -1.0;
}

BesselParams make_params(BesselKind kind, double p) {
  if (!(p > order_lower_bound(kind))) {
    std::ostringstream msg;
    msg << "order p = " << p << " must exceed " << order_lower_bound(kind);
    throw DomainError(msg.str());
  }
  switch (kind) {
    case BesselKind::Kind1:
      return {p, 1.0, 1.0};
    case BesselKind::Kind2:
      return {p, 1.0, -1.0};
    case BesselKind::Kind3:
      return {p, 2.0, 1.0};
  }
  throw DomainError("unknown Bessel kind");
}

double pochhammer(double lambda, int mu) {
  if (mu < 0) throw DomainError("Pochhammer index must be non-negative");
  double product = 1.0;
  for (int j = 0; j < mu; ++j) product *= lambda + j;
  return product;
}

double coefficient(const BesselParams& params, int k) {
  if (k < 1) throw DomainError("coefficient index must be >= 1");
  double a = 1.0;
  for (int n = 1; n < k; ++n) a *= -params.c() / ((params.q() + (n - 1)) * n);
  return a;
}

SeriesValue eval_u(const BesselParams& params, Complex z, double eps) {
  return sum_series(params, z, eps, false).u;
}

SeriesDerivatives eval_u_derivatives(const BesselParams& params, Complex z,
                                     double eps) {
  return sum_series(params, z, eps, true);
}

SeriesValue eval_w(const BesselParams& params, double x, double eps) {
  if (!(x > 0.0)) throw DomainError("eval_w requires a real argument x > 0");
  if (!(eps > 0.0)) throw DomainError("series tolerance must be positive");
  const double gamma_q = std::tgamma(params.q());
  const double scale = std::pow(x / 2.0, params.p()) / gamma_q;
  if (!std::isfinite(scale) || scale == 0.0) {
    throw DomainError("(x/2)^p / Gamma(q) is not representable");
  }
  const double z = x * x / 4.0;
  const double factor = std::abs(scale) / z;
  const SeriesValue u = eval_u(params, Complex(z, 0.0), eps / factor);
  return {u.value * (scale / z), u.terms_used, u.tail_bound * factor};
}

TaylorPolynomial taylor_polynomial(const BesselParams& params, double radius,
                                   double eps) {
  if (!(radius > 0.0) || !(radius <= kMaxSeriesArgument)) {
    throw DomainError("Taylor polynomial radius must lie in (0, 4]");
  }
  if (!(eps > 0.0)) throw DomainError("series tolerance must be positive");
  const double q = params.q();
  const double neg_c = -params.c();
  const double abs_cr = std::abs(params.c()) * radius;

  TaylorPolynomial poly;
  poly.radius = radius;
  poly.coefficients = {0.0, 1.0};
  double a = neg_c / q;       // a_2
  double scaled = a;          // a_n radius^(n-2), the majorant term P_n
  for (int n = 2;; ++n) {
    const double nn = n;
    poly.coefficients.push_back(a);
    const double next = a * neg_c / ((q + (nn - 1.0)) * nn);
    if (n >= kMinSeriesTerms && q + nn > 0.0) {
      // Same majorants as sum_series evaluated at |z| = radius.
      const double next_magnitude =
          std::abs(scaled * neg_c * radius / ((q + (nn - 1.0)) * nn));
      const double next_ratio = abs_cr / ((q + nn) * (nn + 1.0));
      const Remainders rem = remainders_after(n, next_magnitude, next_ratio);
      if (rem.ratios_ok) {
        const double tail = std::max({radius * radius * rem.plain,
                                      radius * rem.first, rem.second});
        if (tail < eps) {
          poly.tail_bound = tail;
          return poly;
        }
      }
    }
    if (n >= kMaxSeriesTerms) {
      throw NoConvergence("Taylor polynomial did not converge within " +
                          std::to_string(kMaxSeriesTerms) + " terms");
    }
    scaled *= neg_c * radius / ((q + (nn - 1.0)) * nn);
    a = next;
  }
}

}  // namespace bessel_geom
