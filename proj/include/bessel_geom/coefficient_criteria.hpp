#pragma once

#include <span>
#include <string_view>

#include "bessel_geom/bessel_core.hpp"
#include "bessel_geom/class_spec.hpp"

namespace bessel_geom {

inline constexpr double kDefaultCriterionEps = 1e-12;

/// Outcome of a coefficient criterion that respects the truncation bound:
/// Holds when sum + tail <= threshold, Fails when sum - tail > threshold.
enum class Verdict { Holds, Fails, Indeterminate };

std::string_view to_string(Verdict verdict);

/// Absolute uses |c|^{k-1} (what the lemmas require); AsPrinted uses
/// (-c)^{k-1} as in the displayed sums, which only coincide for c < 0.
enum class CoefficientSign { Absolute, AsPrinted };

struct SumReport {
  double sum = 0.0;
  double tail_bound = 0.0;
  double threshold = 0.0;
  double margin = 0.0;  // threshold - sum
  Verdict verdict = Verdict::Indeterminate;
  int terms_used = 0;

  bool holds() const { return verdict == Verdict::Holds; }
};

/// Sum over k >= 2 of [k - 1 + beta (k + 1 - 2 alpha)] |a_k|. Holds implies
/// u_{p,b,c} is in S*(alpha, beta). Requires q > 0.
SumReport lemma1_sum(const BesselParams& params, const ClassSpec& cls,
                     double eps = kDefaultCriterionEps,
                     CoefficientSign sign = CoefficientSign::Absolute);

/// Same with the extra weight k; Holds implies membership in K(alpha, beta).
SumReport lemma2_sum(const BesselParams& params, const ClassSpec& cls,
                     double eps = kDefaultCriterionEps,
                     CoefficientSign sign = CoefficientSign::Absolute);

/// Criteria applied to an explicit finite coefficient list
/// (coefficients[k] = a_k, entries 0 and 1 ignored). tail_bound is 0.
SumReport lemma1_sum(std::span<const double> coefficients, const ClassSpec& cls);
SumReport lemma2_sum(std::span<const double> coefficients, const ClassSpec& cls);

/// For c < 0 the starlikeness sum telescopes:
/// (1 + beta)(u'(1) - u(1)) + 2 beta (1 - alpha)(u(1) - 1).
/// Throws DomainError unless c < 0 and q > 0.
double lemma1_closed_form(const BesselParams& params, const ClassSpec& cls);

}  // namespace bessel_geom
