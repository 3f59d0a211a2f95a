#include "bessel_geom/theorem_conditions.hpp"

#include <array>
#include <cmath>
#include <string>

#include "bessel_geom/errors.hpp"

namespace bessel_geom {

namespace {

struct Name {
  CriterionId id;
  std::string_view text;
};

constexpr std::array<Name, 14> kNames{{
    {CriterionId::Theorem1, "theorem1"},
    {CriterionId::Theorem2, "theorem2"},
    {CriterionId::Cor1, "cor1"},
    {CriterionId::Cor2, "cor2"},
    {CriterionId::Cor3, "cor3"},
    {CriterionId::Cor10, "cor10"},
    {CriterionId::Cor11, "cor11"},
    {CriterionId::Cor12, "cor12"},
    {CriterionId::Eq2_8, "eq2.8"},
    {CriterionId::Eq2_9, "eq2.9"},
    {CriterionId::Eq2_10, "eq2.10"},
    {CriterionId::Eq2_13, "eq2.13"},
    {CriterionId::Eq2_14, "eq2.14"},
    {CriterionId::Eq2_15, "eq2.15"},
}};

void require_positive_q(const BesselParams& params) {
  if (!(params.q() > 0.0)) {
    throw DomainError("theorem conditions require q = p + (b+1)/2 > 0");
  }
}

// Display of the starlikeness theorem with `x` standing where it writes -c.
double theorem1_value(double q, double x, const ClassSpec& cls) {
  const double e = std::exp(x / (q + 1.0));
  return cls.threshold() * (2.0 - e + (1.0 - e) / q) -
         (1.0 + cls.beta()) * x / q * e;
}

// Display of the convexity theorem in terms of c itself.
double theorem2_value(double q, double c, const ClassSpec& cls) {
  const double alpha = cls.alpha();
  const double beta = cls.beta();
  const double t = cls.threshold();
  const double lead = t * (1.0 + (q + 1.0) / q) * std::exp(c / (q + 1.0));
  const double bracket = (1.0 + beta) * c * c / (q * (q + 1.0)) -
                         2.0 * (1.0 + beta * (2.0 - alpha)) * c / q +
                         t * (q + 1.0) / q;
  return lead - bracket;
}

ConditionVerdict make_verdict(CriterionId id, Variant variant, double value,
                              double p, double b, double c,
                              const ClassSpec& cls) {
  ConditionVerdict v{id, variant};
  v.value = value;
  v.holds = value >= 0.0;
  v.p = p;
  v.b = b;
  v.c = c;
  v.alpha = cls.alpha();
  v.beta = cls.beta();
  return v;
}

double printed_corollary(CriterionId id, double p, const ClassSpec& cls) {
  const double a = cls.alpha();
  const double b = cls.beta();
  const double e1 = std::exp(1.0 / (p + 2.0));
  const double e3 = std::exp(2.0 / (2.0 * p + 5.0));
  switch (id) {
    case CriterionId::Cor1:
      return 2.0 * b * (1.0 - a) * (e1 * (2.0 * p + 3.0) - (p + 2.0)) + b + 1.0;
    case CriterionId::Cor2:
      return 2.0 * b * (1.0 - a) * ((2.0 * p + 3.0) - (p + 2.0) * e1) +
             (b + 1.0) * e1;
    case CriterionId::Cor3:
      return b * (1.0 - a) * (2.0 * p + 4.0) * (2.0 * e3 - 1.0) + a * b + 1.0;
    case CriterionId::Cor10:
      return 2.0 * b * (1.0 - a) * (1.0 + (p + 2.0) / (p + 1.0)) * e1 -
             ((1.0 + b) / ((p + 1.0) * (p + 2.0)) +
              2.0 * b * (1.0 - a) * (p + 2.0) / (p + 1.0) -
              2.0 * (1.0 + b * (2.0 - a)) / (p + 1.0));
    case CriterionId::Cor11:
      return 2.0 * b * (1.0 - a) * (1.0 + (p + 2.0) / (p + 1.0)) -
             ((1.0 + b) / ((p + 1.0) * (p + 2.0)) +
              2.0 * (1.0 + b * (2.0 - a)) / (p + 1.0) +
              2.0 * b * (1.0 - a) * (p + 2.0) / (p + 1.0)) *
                 e1;
    case CriterionId::Cor12:
      return b * (1.0 - a) * (1.0 + (2.0 * p + 5.0) / (2.0 * p + 3.0)) * e3 -
             (2.0 * (1.0 + b) / ((2.0 * p + 3.0) * (2.0 * p + 5.0)) +
              b * (1.0 - a) * (2.0 * p + 5.0) / (2.0 * p + 3.0) -
              2.0 * (1.0 + b * (2.0 - a)) / (2.0 * p + 3.0));
    case CriterionId::Eq2_8:
      return (1.0 - a) * (e1 * (2.0 * p + 3.0) - (p + 2.0)) + 1.0;
    case CriterionId::Eq2_9:
      return (1.0 - a) * ((2.0 * p + 3.0) - (p + 2.0) * e1) + e1;
    case CriterionId::Eq2_10:
      return (1.0 - a) * (2.0 * p + 4.0) * (2.0 * e3 - 1.0) + a + 1.0;
    case CriterionId::Eq2_13:
      return (1.0 - a) * (1.0 + (p + 2.0) / (p + 1.0)) * e1 -
             (1.0 / ((p + 1.0) * (p + 2.0)) + (1.0 - a) * (p + 2.0) / (p + 1.0) -
              (3.0 - a) / (p + 1.0));
    case CriterionId::Eq2_14:
      return (1.0 - a) * (1.0 + (p + 2.0) / (p + 1.0)) -
             (1.0 / ((p + 1.0) * (p + 2.0)) + (3.0 - a) / (p + 1.0) +
              (1.0 - a) * (p + 2.0) / (p + 1.0)) *
                 e1;
    case CriterionId::Eq2_15:
      return (1.0 - a) * (1.0 + (2.0 * p + 5.0) / (2.0 * p + 3.0)) * e3 -
             (4.0 / ((2.0 * p + 3.0) * (2.0 * p + 5.0)) +
              (1.0 - a) * (2.0 * p + 5.0) / (2.0 * p + 3.0) -
              2.0 * (3.0 - a) / (2.0 * p + 3.0));
    default:
      throw DomainError("not a corollary: " + std::string(to_string(id)));
  }
}

// Positive factor turning the theorem display (at the corollary's (b, c))
// into the corollary display.
double clearing_factor(CriterionId id, double p) {
  const double e1 = std::exp(1.0 / (p + 2.0));
  const double e3 = std::exp(2.0 / (2.0 * p + 5.0));
  switch (id) {
    case CriterionId::Cor1:
      return (p + 1.0) * e1;
    case CriterionId::Cor2:
      return p + 1.0;
    case CriterionId::Cor3:
      return (p + 1.5) * e3;
    case CriterionId::Cor10:
      return 1.0;
    case CriterionId::Cor11:
      return e1;
    case CriterionId::Cor12:
      return 0.5;
    case CriterionId::Eq2_8:
      return 0.5 * (p + 1.0) * e1;
    case CriterionId::Eq2_9:
      return 0.5 * (p + 1.0);
    case CriterionId::Eq2_10:
      return (p + 1.5) * e3;
    case CriterionId::Eq2_13:
      return 0.5;
    case CriterionId::Eq2_14:
      return 0.5 * e1;
    case CriterionId::Eq2_15:
      return 0.5;
    default:
      throw DomainError("not a corollary: " + std::string(to_string(id)));
  }
}

CorollaryInfo checked_info(CriterionId id, double p, const ClassSpec& cls) {
  const CorollaryInfo info = corollary_info(id);
  if (!(p > order_lower_bound(info.kind))) {
    throw DomainError(std::string(to_string(id)) + " requires p > " +
                      std::to_string(order_lower_bound(info.kind)));
  }
  if (info.beta_one && cls.beta() != 1.0) {
    throw BetaMismatch(std::string(to_string(id)) + " is the beta = 1 form");
  }
  return info;
}

double theorem_display(const CorollaryInfo& info, double p,
                       const ClassSpec& cls, bool absolute) {
  const BesselParams params = make_params(info.kind, p);
  const Variant v = absolute ? Variant::TheoremDerived : Variant::AsPrinted;
  return info.theorem == CriterionId::Theorem1
             ? theorem1_condition(params, cls, v).value
             : theorem2_condition(params, cls, v).value;
}

}  // namespace

std::string_view to_string(CriterionId id) {
  for (const auto& name : kNames) {
    if (name.id == id) return name.text;
  }
  return "unknown";
}

std::optional<CriterionId> criterion_from_string(std::string_view text) {
  for (const auto& name : kNames) {
    if (name.text == text) return name.id;
  }
  return std::nullopt;
}

std::string_view to_string(Variant variant) {
  return variant == Variant::AsPrinted ? "printed" : "derived";
}

ConditionVerdict theorem1_condition(const BesselParams& params,
                                    const ClassSpec& cls, Variant variant) {
  require_positive_q(params);
  const double x =
      variant == Variant::AsPrinted ? -params.c() : std::abs(params.c());
  return make_verdict(CriterionId::Theorem1, variant,
                      theorem1_value(params.q(), x, cls), params.p(),
                      params.b(), params.c(), cls);
}

ConditionVerdict theorem2_condition(const BesselParams& params,
                                    const ClassSpec& cls, Variant variant) {
  require_positive_q(params);
  const double c =
      variant == Variant::AsPrinted ? params.c() : -std::abs(params.c());
  return make_verdict(CriterionId::Theorem2, variant,
                      theorem2_value(params.q(), c, cls), params.p(),
                      params.b(), params.c(), cls);
}

CorollaryInfo corollary_info(CriterionId id) {
  using enum CriterionId;
  switch (id) {
    case Cor1:
      return {id, BesselKind::Kind1, Theorem1, false};
    case Cor2:
      return {id, BesselKind::Kind2, Theorem1, false};
    case Cor3:
      return {id, BesselKind::Kind3, Theorem1, false};
    case Cor10:
      return {id, BesselKind::Kind1, Theorem2, false};
    case Cor11:
      return {id, BesselKind::Kind2, Theorem2, false};
    case Cor12:
      return {id, BesselKind::Kind3, Theorem2, false};
    case Eq2_8:
      return {id, BesselKind::Kind1, Theorem1, true};
    case Eq2_9:
      return {id, BesselKind::Kind2, Theorem1, true};
    case Eq2_10:
      return {id, BesselKind::Kind3, Theorem1, true};
    case Eq2_13:
      return {id, BesselKind::Kind1, Theorem2, true};
    case Eq2_14:
      return {id, BesselKind::Kind2, Theorem2, true};
    case Eq2_15:
      return {id, BesselKind::Kind3, Theorem2, true};
    default:
      throw DomainError("not a corollary: " + std::string(to_string(id)));
  }
}

const std::vector<CriterionId>& corollary_ids() {
  using enum CriterionId;
  static const std::vector<CriterionId> ids{Cor1,  Cor2,   Cor3,   Cor10,
                                            Cor11, Cor12,  Eq2_8,  Eq2_9,
                                            Eq2_10, Eq2_13, Eq2_14, Eq2_15};
  return ids;
}

ConditionVerdict corollary_condition(CriterionId id, double p,
                                     const ClassSpec& cls, Variant variant) {
  const CorollaryInfo info = checked_info(id, p, cls);
  const BesselParams params = make_params(info.kind, p);
  const double value =
      variant == Variant::AsPrinted
          ? printed_corollary(id, p, cls)
          : clearing_factor(id, p) * theorem_display(info, p, cls, false);
  return make_verdict(id, variant, value, params.p(), params.b(), params.c(),
                      cls);
}

double corollary_absolute_form(CriterionId id, double p, const ClassSpec& cls) {
  const CorollaryInfo info = checked_info(id, p, cls);
  return clearing_factor(id, p) * theorem_display(info, p, cls, true);
}

std::vector<AuditRow> corollary_audit(const AuditGrid& grid) {
  std::vector<AuditRow> rows;
  for (const CriterionId id : corollary_ids()) {
    const CorollaryInfo info = corollary_info(id);
    const double bound = order_lower_bound(info.kind);
    for (int i = 0; i < grid.p_points; ++i) {
      const double p = bound + grid.p_offset + grid.p_step * i;
      for (const double alpha : grid.alphas) {
        for (const double beta : grid.betas) {
          if (info.beta_one && beta != 1.0) continue;
          const ClassSpec cls(alpha, beta);
          const auto printed = corollary_condition(id, p, cls, Variant::AsPrinted);
          const auto derived =
              corollary_condition(id, p, cls, Variant::TheoremDerived);
          AuditRow row{id, p, alpha, beta};
          row.printed = printed.value;
          row.derived = derived.value;
          row.absolute = corollary_absolute_form(id, p, cls);
          row.agree = printed.holds == derived.holds;
          rows.push_back(row);
        }
      }
    }
  }
  return rows;
}

std::vector<AuditSummary> summarize_audit(const std::vector<AuditRow>& rows) {
  std::vector<AuditSummary> summaries;
  for (const CriterionId id : corollary_ids()) {
    AuditSummary summary{id, 0, 0, std::nullopt};
    for (const AuditRow& row : rows) {
      if (row.criterion != id) continue;
      ++summary.points;
      if (!row.agree) {
        ++summary.disagreements;
        if (!summary.first_disagreement) summary.first_disagreement = row;
      }
    }
    summaries.push_back(summary);
  }
  return summaries;
}

}  // namespace bessel_geom
