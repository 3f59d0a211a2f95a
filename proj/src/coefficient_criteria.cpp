#include "bessel_geom/coefficient_criteria.hpp"

#include <cmath>
#include <string>

#include "bessel_geom/compensated_sum.hpp"
#include "bessel_geom/errors.hpp"

namespace bessel_geom {

namespace {

enum class Lemma { Starlike, Convex };

// k - 1 + beta (k + 1 - 2 alpha), times k for the convex criterion.
double weight(Lemma lemma, const ClassSpec& cls, double k) {
  const double base = k - 1.0 + cls.beta() * (k + 1.0 - 2.0 * cls.alpha());
  return lemma == Lemma::Convex ? k * base : base;
}

Verdict classify(double sum, double tail, double threshold) {
  if (sum + tail <= threshold) return Verdict::Holds;
  if (sum - tail > threshold) return Verdict::Fails;
  return Verdict::Indeterminate;
}

SumReport finish(double sum, double tail, int terms, const ClassSpec& cls) {
  SumReport report;
  report.sum = sum;
  report.tail_bound = tail;
  report.threshold = cls.threshold();
  report.margin = report.threshold - sum;
  report.verdict = classify(sum, tail, report.threshold);
  report.terms_used = terms;
  return report;
}

SumReport weighted_sum(Lemma lemma, const BesselParams& params,
                       const ClassSpec& cls, double eps, CoefficientSign sign) {
  if (!(params.q() > 0.0)) {
    throw DomainError("coefficient criteria require q = p + (b+1)/2 > 0");
  }
  if (!(eps > 0.0)) throw DomainError("criterion tolerance must be positive");
  const double q = params.q();
  const double abs_c = std::abs(params.c());
  const double step_c = sign == CoefficientSign::Absolute ? abs_c : -params.c();

  CompensatedSum sum;
  double a = step_c / q;  // coefficient a_2 (sign per mode)
  for (int k = 2;; ++k) {
    const double kk = k;
    sum += weight(lemma, cls, kk) * a;
    const double next = a * step_c / ((q + (kk - 1.0)) * kk);
    if (k >= kMinSeriesTerms) {
      // Weighted term ratios decrease in k because q > 0 and the weight
      // ratio w(k+1)/w(k) decreases.
      const double ratio = weight(lemma, cls, kk + 2.0) /
                           weight(lemma, cls, kk + 1.0) * abs_c /
                           ((q + kk) * (kk + 1.0));
      if (ratio <= 0.5) {
        const double tail =
            weight(lemma, cls, kk + 1.0) * std::abs(next) / (1.0 - ratio);
        if (tail < eps) return finish(sum.value(), tail, k, cls);
      }
    }
    if (k >= kMaxSeriesTerms) {
      throw NoConvergence("coefficient sum did not converge within " +
                          std::to_string(kMaxSeriesTerms) + " terms");
    }
    a = next;
  }
}

SumReport finite_sum(Lemma lemma, std::span<const double> coefficients,
                     const ClassSpec& cls) {
  CompensatedSum sum;
  for (std::size_t k = 2; k < coefficients.size(); ++k) {
    sum += weight(lemma, cls, static_cast<double>(k)) * std::abs(coefficients[k]);
  }
  return finish(sum.value(), 0.0, static_cast<int>(coefficients.size()) - 1, cls);
}

}  // namespace

std::string_view to_string(Verdict verdict) {
  switch (verdict) {
    case Verdict::Holds:
      return "holds";
    case Verdict::Fails:
      return "fails";
    case Verdict::Indeterminate:
      return "indeterminate";
  }
  return "unknown";
}

SumReport lemma1_sum(const BesselParams& params, const ClassSpec& cls,
                     double eps, CoefficientSign sign) {
  return weighted_sum(Lemma::Starlike, params, cls, eps, sign);
}

SumReport lemma2_sum(const BesselParams& params, const ClassSpec& cls,
                     double eps, CoefficientSign sign) {
  return weighted_sum(Lemma::Convex, params, cls, eps, sign);
}

SumReport lemma1_sum(std::span<const double> coefficients, const ClassSpec& cls) {
  return finite_sum(Lemma::Starlike, coefficients, cls);
}

SumReport lemma2_sum(std::span<const double> coefficients, const ClassSpec& cls) {
  return finite_sum(Lemma::Convex, coefficients, cls);
}

double lemma1_closed_form(const BesselParams& params, const ClassSpec& cls) {
  if (!(params.c() < 0.0)) {
    throw DomainError("closed form needs c < 0 (all coefficients positive)");
  }
  if (!(params.q() > 0.0)) throw DomainError("closed form needs q > 0");
  const SeriesDerivatives at_one =
      eval_u_derivatives(params, Complex(1.0, 0.0), 1e-15);
  const double u1 = at_one.u.value.real();
  const double du1 = at_one.du.value.real();
  return (1.0 + cls.beta()) * (du1 - u1) + cls.threshold() * (u1 - 1.0);
}

}  // namespace bessel_geom
