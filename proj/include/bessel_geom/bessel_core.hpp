#pragma once

#include <complex>
#include <vector>

namespace bessel_geom {

using Complex = std::complex<double>;

inline constexpr double kDefaultSeriesEps = 1e-13;
inline constexpr int kMinSeriesTerms = 10;
inline constexpr int kMaxSeriesTerms = 10000;
/// Largest |z| accepted by the series evaluators.
inline constexpr double kMaxSeriesArgument = 4.0;

/// Real parameters (p, b, c) of the generalized Bessel function together with
/// the Pochhammer shift q = p + (b + 1) / 2.
///
/// Construction rejects q in {0, -1, -2, ...} with PoleError, so every
/// coefficient denominator (q)_k is nonzero.
class BesselParams {
 public:
  BesselParams(double p, double b, double c);

  double p() const { return p_; }
  double b() const { return b_; }
  double c() const { return c_; }
  double q() const { return q_; }

 private:
  double p_;
  double b_;
  double c_;
  double q_;
};

/// Classical specializations: Kind1 = J_p (b=1, c=1), Kind2 = I_p (b=1, c=-1),
/// Kind3 = spherical j_p (b=2, c=1).
enum class BesselKind { Kind1, Kind2, Kind3 };

/// Parameters of a classical kind. Throws DomainError unless p > -1 (Kind1,
/// Kind2) or p > -3/2 (Kind3).
BesselParams make_params(BesselKind kind, double p);

/// Lower bound (exclusive) on p for a classical kind.
double order_lower_bound(BesselKind kind);

/// A truncated series evaluation. tail_bound majorizes the truncation error
/// |exact - value| (floating-point rounding is not included).
struct SeriesValue {
  Complex value;
  int terms_used = 0;
  double tail_bound = 0.0;
};

struct SeriesDerivatives {
  SeriesValue u;
  SeriesValue du;
  SeriesValue d2u;
};

/// Rising factorial lambda (lambda+1) ... (lambda+mu-1), computed as a running
/// product; 1 for mu = 0. Large arguments overflow to +/-inf.
double pochhammer(double lambda, int mu);

/// Taylor coefficient a_k of u_{p,b,c}: a_1 = 1,
/// a_k = (-c)^{k-1} / ((q)_{k-1} (k-1)!).
double coefficient(const BesselParams& params, int k);

/// u_{p,b,c}(z) for |z| <= 4, truncated once the geometric majorant of the
/// remainder drops below eps.
SeriesValue eval_u(const BesselParams& params, Complex z,
                   double eps = kDefaultSeriesEps);

/// (u, u', u'') from the term-wise differentiated series, each carrying its
/// own tail bound.
SeriesDerivatives eval_u_derivatives(const BesselParams& params, Complex z,
                                     double eps = kDefaultSeriesEps);

/// w_{p,b,c}(x) for real 0 < x <= 4, recovered from u by inverting the
/// normalization: w(x) = u(x^2/4) (x/2)^(p-2) / Gamma(q).
SeriesValue eval_w(const BesselParams& params, double x,
                   double eps = kDefaultSeriesEps);

/// Truncated Taylor polynomial of a normalized function f(z) = z + ...
/// coefficients[k] holds a_k (coefficients[0] == 0).
struct TaylorPolynomial {
  std::vector<double> coefficients;
  /// Bound on the truncation error of f, f' and f'' for |z| <= radius.
  double tail_bound = 0.0;
  double radius = 1.0;

  int degree() const { return static_cast<int>(coefficients.size()) - 1; }
};

/// Taylor polynomial of u_{p,b,c} accurate to eps (for f, f' and f'') on the
/// closed disk |z| <= radius.
TaylorPolynomial taylor_polynomial(const BesselParams& params,
                                   double radius = 1.0,
                                   double eps = 1e-15);

}  // namespace bessel_geom
