#pragma once

#include <optional>
#include <string_view>
#include <vector>

#include "bessel_geom/bessel_core.hpp"
#include "bessel_geom/class_spec.hpp"

namespace bessel_geom {

/// One displayed sufficient condition. Eq2_* are the beta = 1 forms.
enum class CriterionId {
  Theorem1,
  Theorem2,
  Cor1,
  Cor2,
  Cor3,
  Cor10,
  Cor11,
  Cor12,
  Eq2_8,
  Eq2_9,
  Eq2_10,
  Eq2_13,
  Eq2_14,
  Eq2_15,
};

std::string_view to_string(CriterionId id);
std::optional<CriterionId> criterion_from_string(std::string_view name);

/// AsPrinted transcribes the displayed inequality. TheoremDerived evaluates
/// the general theorem instead: for theorem1/2_condition that is the form the
/// proof actually supports (|c| wherever the proof writes -c); for corollaries
/// it is the theorem display with (b, c) substituted, cleared by a fixed
/// positive factor so the value is comparable with the printed one.
enum class Variant { AsPrinted, TheoremDerived };

std::string_view to_string(Variant variant);

struct ConditionVerdict {
  CriterionId criterion;
  Variant variant;
  double value = 0.0;  // left-hand side of "value >= 0"
  bool holds = false;
  double p = 0.0;
  double b = 0.0;
  double c = 0.0;
  double alpha = 0.0;
  double beta = 0.0;
};

/// Starlikeness condition for u_{p,b,c}. Throws DomainError if q <= 0.
ConditionVerdict theorem1_condition(const BesselParams& params,
                                    const ClassSpec& cls,
                                    Variant variant = Variant::TheoremDerived);

/// Convexity condition for u_{p,b,c}. Throws DomainError if q <= 0.
ConditionVerdict theorem2_condition(const BesselParams& params,
                                    const ClassSpec& cls,
                                    Variant variant = Variant::TheoremDerived);

/// Static description of a corollary: the classical kind it specializes, the
/// theorem it comes from and the positive factor relating the two displays.
struct CorollaryInfo {
  CriterionId id;
  BesselKind kind;
  CriterionId theorem;  // Theorem1 or Theorem2
  bool beta_one;        // Eq-tagged forms, defined for beta = 1 only
};

/// Throws DomainError for Theorem1/Theorem2.
CorollaryInfo corollary_info(CriterionId id);

/// All twelve corollary ids in display order.
const std::vector<CriterionId>& corollary_ids();

/// Evaluates a corollary condition for the kind's order p. Throws DomainError
/// outside the kind's p range and BetaMismatch for an Eq-tagged form with
/// beta != 1.
ConditionVerdict corollary_condition(CriterionId id, double p,
                                     const ClassSpec& cls, Variant variant);

/// Corollary value obtained from the |c| (proof-supported) theorem form,
/// cleared by the same positive factor as the TheoremDerived variant.
double corollary_absolute_form(CriterionId id, double p, const ClassSpec& cls);

// Audit of printed corollaries against the theorems they are derived from.

struct AuditRow {
  CriterionId criterion;
  double p = 0.0;
  double alpha = 0.0;
  double beta = 0.0;
  double printed = 0.0;
  double derived = 0.0;
  double absolute = 0.0;
  bool agree = false;  // holds flags of printed and derived coincide
};

struct AuditSummary {
  CriterionId criterion;
  int points = 0;
  int disagreements = 0;
  std::optional<AuditRow> first_disagreement;
};

struct AuditGrid {
  int p_points = 50;
  double p_offset = 0.05;  // first p sits this far above the kind's bound
  double p_step = 0.5;
  std::vector<double> alphas{0.0, 0.2, 0.4, 0.6, 0.8};
  std::vector<double> betas{0.2, 0.4, 0.6, 0.8, 1.0};
};

/// Rows in (criterion, p, alpha, beta) order. Eq-tagged forms only use the
/// beta = 1 slice of the grid.
std::vector<AuditRow> corollary_audit(const AuditGrid& grid = {});

std::vector<AuditSummary> summarize_audit(const std::vector<AuditRow>& rows);

}  // namespace bessel_geom
