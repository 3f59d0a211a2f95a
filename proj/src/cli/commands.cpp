#include "commands.hpp"

#include <cmath>
#include <cstdlib>
#include <ostream>
#include <string>
#include <vector>

#include "bessel_geom/bessel_core.hpp"
#include "bessel_geom/cli.hpp"
#include "bessel_geom/coefficient_criteria.hpp"
#include "bessel_geom/disk_verifier.hpp"
#include "bessel_geom/errors.hpp"
#include "bessel_geom/parallel.hpp"
#include "bessel_geom/theorem_conditions.hpp"
#include "bessel_geom/thresholds.hpp"
#include "output.hpp"

namespace bessel_geom::cli {

namespace {

constexpr double kPositivityStep = 0.005;
constexpr double kPositivityHigh = 50.0;
constexpr double kPositivityOffset = 1e-3;

void emit(std::ostream& out, const Json& record) { out << record.dump(2) << '\n'; }

Json series_json(const SeriesValue& v) {
  return Json{{"re", number(v.value.real())},
              {"im", number(v.value.imag())},
              {"tail_bound", number(v.tail_bound)},
              {"terms_used", v.terms_used}};
}

Json sum_json(const SumReport& r, std::string_view criterion) {
  return Json{{"criterion", criterion},
              {"sum", number(r.sum)},
              {"tail_bound", number(r.tail_bound)},
              {"threshold", number(r.threshold)},
              {"margin", number(r.margin)},
              {"verdict", to_string(r.verdict)},
              {"terms_used", r.terms_used}};
}

Json root_json(const RootResult& r) {
  return Json{{"x0", number(r.x0)},
              {"low", number(r.low)},
              {"high", number(r.high)},
              {"iterations", r.iterations},
              {"residual", number(r.residual)}};
}

DiskGrid grid_with_angles(int angles) {
  DiskGrid grid = DiskGrid::default_grid();
  grid.angles_per_ring = angles;
  return grid;
}

QuotientKind quotient_kind(const std::string& cls) {
  return cls == "convex" ? QuotientKind::Convex : QuotientKind::Starlike;
}

std::vector<double> axis(const std::array<double, 2>& range, int steps) {
  if (steps < 1) throw DomainError("grid steps must be >= 1");
  if (range[0] > range[1]) throw DomainError("range must satisfy low <= high");
  if (steps == 1 || range[0] == range[1]) return {range[0]};
  std::vector<double> values(static_cast<std::size_t>(steps));
  for (int i = 0; i < steps; ++i) {
    values[i] = i == steps - 1
                    ? range[1]
                    : range[0] + (range[1] - range[0]) * i / (steps - 1);
  }
  return values;
}

struct ScanRow {
  double p, alpha, beta;
  std::string theorem = "n/a";
  std::string lemma = "n/a";
  double disk_max = std::nan("");
};

}  // namespace

unsigned resolve_threads(std::optional<unsigned> flag) {
  if (flag) return *flag;
  if (const char* env = std::getenv("BESSEL_GEOM_THREADS")) {
    char* end = nullptr;
    const long value = std::strtol(env, &end, 10);
    if (end != env && *end == '\0' && value >= 0) {
      return static_cast<unsigned>(value);
    }
  }
  return 0;
}

int cmd_eval(const EvalOptions& o, std::ostream& out, std::ostream&) {
  const BesselParams params(o.p, o.b, o.c);
  const Complex z(o.z_re, o.z_im);
  const SeriesDerivatives d = eval_u_derivatives(params, z, o.eps);
  Json result{{"q", params.q()},
              {"u", series_json(d.u)},
              {"du", series_json(d.du)},
              {"d2u", series_json(d.d2u)}};
  if (o.with_w) {
    if (o.z_im != 0.0 || !(o.z_re > 0.0)) {
      throw DomainError("--w needs a real positive --z (w is evaluated at x = z)");
    }
    const SeriesValue w = eval_w(params, o.z_re, o.eps);
    result["w"] = Json{{"x", o.z_re},
                       {"value", number(w.value.real())},
                       {"tail_bound", number(w.tail_bound)},
                       {"terms_used", w.terms_used}};
  }
  Json inputs{{"p", o.p}, {"b", o.b},       {"c", o.c},
              {"z_re", o.z_re}, {"z_im", o.z_im}, {"eps", o.eps},
              {"w", o.with_w}};
  emit(out, output_record("eval", std::move(inputs), std::move(result)));
  return kExitOk;
}

int cmd_check(const CheckOptions& o, std::ostream& out, std::ostream& err) {
  const BesselParams params(o.p, o.b, o.c);
  const ClassSpec cls(o.alpha, o.beta);
  const bool star = o.cls == "star";
  const bool run_lemma = o.mode == "lemma" || o.mode == "all";
  const bool run_theorem = o.mode == "theorem" || o.mode == "all";
  const bool run_disk = o.mode == "disk" || o.mode == "all";
  const Variant variant =
      o.variant == "printed" ? Variant::AsPrinted : Variant::TheoremDerived;

  Json result = Json::object();
  std::optional<SumReport> lemma;
  std::optional<ConditionVerdict> derived;
  std::optional<SupEstimate> disk;

  if (run_lemma) {
    lemma = star ? lemma1_sum(params, cls, o.eps) : lemma2_sum(params, cls, o.eps);
    result["lemma"] = sum_json(*lemma, star ? "lemma1" : "lemma2");
  }
  if (run_theorem) {
    const auto condition = star ? theorem1_condition : theorem2_condition;
    const ConditionVerdict requested = condition(params, cls, variant);
    derived = condition(params, cls, Variant::TheoremDerived);
    result["theorem"] = Json{{"criterion", to_string(requested.criterion)},
                             {"variant", to_string(requested.variant)},
                             {"value", number(requested.value)},
                             {"holds", requested.holds},
                             {"derived_value", number(derived->value)},
                             {"derived_holds", derived->holds}};
  }
  if (run_disk) {
    disk = sup_estimate(params, cls, quotient_kind(o.cls), grid_with_angles(o.angles));
    result["disk"] =
        Json{{"max_quotient", number(disk->max_quotient)},
             {"argmax", complex_json(disk->argmax_z)},
             {"violations", disk->violations},
             {"degenerate_points", disk->degenerate_points},
             {"points", disk->points},
             {"verdict", disk->violations == 0 ? "consistent-with-membership"
                                               : "violated"}};
  }

  std::vector<std::string> problems;
  if (derived && lemma && derived->holds && lemma->verdict == Verdict::Fails) {
    problems.emplace_back("theorem condition holds but the lemma sum fails");
  }
  if (lemma && disk && lemma->holds() && disk->violations > 0) {
    problems.emplace_back("lemma sum holds but the disk quotient reaches beta");
  }
  const bool evaluated = (derived && lemma) || (lemma && disk);
  result["chain"] = Json{
      {"status", !evaluated          ? "not-evaluated"
                 : problems.empty() ? "CONSISTENT"
                                    : "INCONSISTENT"},
      {"problems", problems}};

  Json inputs{{"p", o.p},          {"b", o.b},         {"c", o.c},
              {"alpha", o.alpha},  {"beta", o.beta},   {"class", o.cls},
              {"mode", o.mode},    {"variant", o.variant}, {"eps", o.eps},
              {"angles", o.angles}};
  emit(out, output_record("check", std::move(inputs), std::move(result)));
  if (!problems.empty()) {
    for (const auto& problem : problems) err << "INCONSISTENT: " << problem << '\n';
    return kExitInconsistent;
  }
  return kExitOk;
}

int cmd_threshold(const ThresholdOptions& o, std::ostream& out, std::ostream&) {
  const auto figure = figure_from_number(o.figure);
  if (!figure) throw DomainError("--figure must be 1..6");
  if (!(o.tol > 0.0)) throw DomainError("--tol must be positive");
  const double s = singularity(*figure);

  Json roots = Json::array();
  for (const RootResult& r : find_roots(*figure, o.tol)) roots.push_back(root_json(r));

  Json result{{"figure", o.figure}, {"singularity", s}, {"roots", roots}};
  double scan_low = s + kPositivityOffset;
  try {
    const RootResult threshold = find_threshold(*figure, o.tol);
    result["status"] = "root";
    result["threshold"] = root_json(threshold);
    scan_low = std::max(scan_low, threshold.high + kPositivityOffset);
  } catch (const NoBracket&) {
    result["status"] = "no-bracket";
    result["threshold"] = nullptr;
  }

  Json changes = Json::array();
  for (const SignChange& c :
       positivity_scan(*figure, scan_low, kPositivityHigh, kPositivityStep)) {
    changes.push_back(Json{{"low", c.low}, {"high", c.high}});
  }
  const bool nonnegative = changes.empty() && figure_eval(*figure, scan_low) >= 0.0;
  result["positivity"] = Json{{"low", scan_low},
                              {"high", kPositivityHigh},
                              {"step", kPositivityStep},
                              {"sign_changes", changes},
                              {"nonnegative_on_grid", nonnegative}};

  Json inputs{{"figure", o.figure}, {"tol", o.tol}};
  emit(out, output_record("threshold", std::move(inputs), std::move(result)));
  return kExitOk;
}

int cmd_figure(const FigureOptions& o, std::ostream& out, std::ostream&) {
  const auto figure = figure_from_number(o.figure);
  if (!figure) throw DomainError("--figure must be 1..6");
  if (!(o.low < o.high)) throw DomainError("--low must be below --high");
  if (!(o.step > 0.0)) throw DomainError("--step must be positive");

  const auto count =
      static_cast<long long>(std::floor((o.high - o.low) / o.step + 1e-9)) + 1;
  std::vector<std::pair<double, double>> rows;
  rows.reserve(static_cast<std::size_t>(count));
  for (long long i = 0; i < count; ++i) {
    const double x = o.low + static_cast<double>(i) * o.step;
    const double g = x == singularity(*figure) ? std::nan("") : figure_eval(*figure, x);
    rows.emplace_back(x, g);
  }

  if (o.format == "csv") {
    out << "x,g\n";
    for (const auto& [x, g] : rows) out << format_double(x) << ',' << format_double(g) << '\n';
    return kExitOk;
  }
  Json points = Json::array();
  for (const auto& [x, g] : rows) points.push_back(Json{{"x", number(x)}, {"g", number(g)}});
  Json inputs{{"figure", o.figure}, {"low", o.low}, {"high", o.high}, {"step", o.step}};
  emit(out, output_record("figure", std::move(inputs),
                          Json{{"figure", o.figure},
                               {"singularity", singularity(*figure)},
                               {"points", points}}));
  return kExitOk;
}

int cmd_scan(const ScanOptions& o, std::ostream& out, std::ostream&) {
  const std::vector<double> ps = axis(o.p_range, o.p_steps.value_or(o.steps));
  const std::vector<double> alphas = axis(o.alpha_range, o.alpha_steps.value_or(o.steps));
  const std::vector<double> betas = axis(o.beta_range, o.beta_steps.value_or(o.steps));
  for (const double a : alphas) static_cast<void>(ClassSpec(a, 1.0));
  for (const double b : betas) static_cast<void>(ClassSpec(0.0, b));

  std::vector<ScanRow> rows;
  for (const double p : ps) {
    for (const double a : alphas) {
      for (const double b : betas) rows.push_back({p, a, b});
    }
  }
  const bool star = o.cls == "star";
  const DiskGrid grid = grid_with_angles(o.angles);
  grid.validate();

  parallel_for(rows.size(), resolve_threads(o.parallel), [&](std::size_t i) {
    ScanRow& row = rows[i];
    const ClassSpec cls(row.alpha, row.beta);
    std::optional<BesselParams> params;
    try {
      params.emplace(row.p, o.b, o.c);
    } catch (const PoleError&) {
      return;
    }
    if (params->q() > 0.0) {
      const auto theorem = star ? theorem1_condition(*params, cls)
                                : theorem2_condition(*params, cls);
      row.theorem = theorem.holds ? "holds" : "fails";
      const auto lemma = star ? lemma1_sum(*params, cls, o.eps)
                              : lemma2_sum(*params, cls, o.eps);
      row.lemma = std::string(to_string(lemma.verdict));
    }
    row.disk_max = sup_estimate(*params, cls, quotient_kind(o.cls), grid).max_quotient;
  });

  if (o.format == "csv") {
    out << "p,alpha,beta,theorem,lemma,disk_max\n";
    for (const ScanRow& r : rows) {
      out << format_double(r.p) << ',' << format_double(r.alpha) << ','
          << format_double(r.beta) << ',' << r.theorem << ',' << r.lemma << ','
          << format_double(r.disk_max) << '\n';
    }
    return kExitOk;
  }
  Json table = Json::array();
  for (const ScanRow& r : rows) {
    table.push_back(Json{{"p", r.p},
                         {"alpha", r.alpha},
                         {"beta", r.beta},
                         {"theorem", r.theorem},
                         {"lemma", r.lemma},
                         {"disk_max", number(r.disk_max)}});
  }
  Json inputs{{"b", o.b},
              {"c", o.c},
              {"p_range", o.p_range},
              {"alpha_range", o.alpha_range},
              {"beta_range", o.beta_range},
              {"class", o.cls},
              {"steps", Json::array({ps.size(), alphas.size(), betas.size()})},
              {"angles", o.angles},
              {"eps", o.eps}};
  emit(out, output_record("scan", std::move(inputs), Json{{"rows", table}}));
  return kExitOk;
}

int cmd_audit(const AuditOptions& o, std::ostream& out, std::ostream&) {
  const AuditGrid grid;
  const std::vector<AuditRow> rows = corollary_audit(grid);
  if (o.format == "csv") {
    out << "criterion,p,alpha,beta,printed,derived,absolute,agree\n";
    for (const AuditRow& r : rows) {
      out << to_string(r.criterion) << ',' << format_double(r.p) << ','
          << format_double(r.alpha) << ',' << format_double(r.beta) << ','
          << format_double(r.printed) << ',' << format_double(r.derived) << ','
          << format_double(r.absolute) << ',' << (r.agree ? "yes" : "no") << '\n';
    }
    return kExitOk;
  }
  auto row_json = [](const AuditRow& r) {
    return Json{{"criterion", to_string(r.criterion)},
                {"p", number(r.p)},
                {"alpha", number(r.alpha)},
                {"beta", number(r.beta)},
                {"printed", number(r.printed)},
                {"derived", number(r.derived)},
                {"absolute", number(r.absolute)},
                {"agree", r.agree}};
  };
  Json summaries = Json::array();
  for (const AuditSummary& s : summarize_audit(rows)) {
    summaries.push_back(Json{{"criterion", to_string(s.criterion)},
                             {"points", s.points},
                             {"disagreements", s.disagreements},
                             {"first_disagreement", s.first_disagreement
                                                        ? row_json(*s.first_disagreement)
                                                        : Json(nullptr)}});
  }
  Json result{{"summary", summaries}};
  if (o.rows) {
    Json all = Json::array();
    for (const AuditRow& r : rows) all.push_back(row_json(r));
    result["rows"] = all;
  }
  Json inputs{{"p_points", grid.p_points},
              {"p_offset", grid.p_offset},
              {"p_step", grid.p_step},
              {"alphas", grid.alphas},
              {"betas", grid.betas},
              {"rows", o.rows}};
  emit(out, output_record("audit", std::move(inputs), std::move(result)));
  return kExitOk;
}

}  // namespace bessel_geom::cli
