#include "bessel_geom/cli.hpp"

#include <algorithm>
#include <ostream>

#include <CLI11.hpp>

#include "bessel_geom/errors.hpp"
#include "commands.hpp"

namespace bessel_geom::cli {

namespace {

const std::vector<std::string> kFormats{"json", "csv"};

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out,
        std::ostream& err) {
  CLI::App app{"Generalized Bessel functions: series evaluation, starlikeness "
               "and convexity conditions, threshold roots",
               "bessel-geom"};
  app.require_subcommand(1);

  EvalOptions eval;
  auto* eval_cmd = app.add_subcommand("eval", "Evaluate u, u', u'' (and w)");
  eval_cmd->add_option("--p", eval.p, "Order p")->required();
  eval_cmd->add_option("--b", eval.b, "Parameter b")->required();
  eval_cmd->add_option("--c", eval.c, "Parameter c")->required();
  eval_cmd->add_option("--z", eval.z_re, "Real part of z")->required();
  eval_cmd->add_option("--z-imag", eval.z_im, "Imaginary part of z");
  eval_cmd->add_option("--eps", eval.eps, "Truncation tolerance");
  eval_cmd->add_flag("--w", eval.with_w, "Also evaluate w at x = z (real z > 0)");

  CheckOptions check;
  auto* check_cmd = app.add_subcommand("check", "Evaluate membership conditions");
  check_cmd->add_option("--p", check.p, "Order p")->required();
  check_cmd->add_option("--b", check.b, "Parameter b")->required();
  check_cmd->add_option("--c", check.c, "Parameter c")->required();
  check_cmd->add_option("--alpha", check.alpha, "Order alpha in [0, 1)");
  check_cmd->add_option("--beta", check.beta, "Type beta in (0, 1]");
  check_cmd->add_option("--class", check.cls, "star | convex")
      ->check(CLI::IsMember({"star", "convex"}));
  check_cmd->add_option("--mode", check.mode, "lemma | theorem | disk | all")
      ->check(CLI::IsMember({"lemma", "theorem", "disk", "all"}));
  check_cmd->add_option("--variant", check.variant, "printed | derived")
      ->check(CLI::IsMember({"printed", "derived"}));
  check_cmd->add_option("--eps", check.eps, "Lemma-sum truncation tolerance");
  check_cmd->add_option("--angles", check.angles, "Disk samples per ring")
      ->check(CLI::PositiveNumber);

  ThresholdOptions threshold;
  auto* threshold_cmd =
      app.add_subcommand("threshold", "Locate the root x0 of a figure function");
  threshold_cmd->add_option("--figure", threshold.figure, "Figure 1..6")
      ->required();
  threshold_cmd->add_option("--tol", threshold.tol, "Bisection tolerance");

  FigureOptions figure;
  auto* figure_cmd = app.add_subcommand("figure", "Tabulate a figure function");
  figure_cmd->add_option("--figure", figure.figure, "Figure 1..6")->required();
  figure_cmd->add_option("--low", figure.low, "First abscissa");
  figure_cmd->add_option("--high", figure.high, "Last abscissa");
  figure_cmd->add_option("--step", figure.step, "Grid step");
  figure_cmd->add_option("--format", figure.format, "json | csv")
      ->check(CLI::IsMember(kFormats));

  ScanOptions scan;
  auto* scan_cmd =
      app.add_subcommand("scan", "Classify a (p, alpha, beta) parameter grid");
  scan_cmd->add_option("--b", scan.b, "Parameter b")->required();
  scan_cmd->add_option("--c", scan.c, "Parameter c")->required();
  scan_cmd->add_option("--p-range", scan.p_range, "p low and high")->required();
  scan_cmd->add_option("--alpha-range", scan.alpha_range, "alpha low and high");
  scan_cmd->add_option("--beta-range", scan.beta_range, "beta low and high");
  scan_cmd->add_option("--class", scan.cls, "star | convex")
      ->check(CLI::IsMember({"star", "convex"}));
  scan_cmd->add_option("--steps", scan.steps, "Points per axis");
  scan_cmd->add_option("--p-steps", scan.p_steps, "Points along p");
  scan_cmd->add_option("--alpha-steps", scan.alpha_steps, "Points along alpha");
  scan_cmd->add_option("--beta-steps", scan.beta_steps, "Points along beta");
  scan_cmd->add_option("--parallel", scan.parallel,
                       "Worker threads (0 = auto; default BESSEL_GEOM_THREADS)");
  scan_cmd->add_option("--angles", scan.angles, "Disk samples per ring")
      ->check(CLI::PositiveNumber);
  scan_cmd->add_option("--eps", scan.eps, "Lemma-sum truncation tolerance");
  scan_cmd->add_option("--format", scan.format, "json | csv")
      ->check(CLI::IsMember(kFormats));

  AuditOptions audit;
  auto* audit_cmd = app.add_subcommand(
      "audit", "Compare printed corollary conditions with the theorems");
  audit_cmd->add_option("--format", audit.format, "json | csv")
      ->check(CLI::IsMember(kFormats));
  audit_cmd->add_flag("--rows", audit.rows, "Include every grid row in JSON");

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitUsage;
  }

  try {
    if (*eval_cmd) return cmd_eval(eval, out, err);
    if (*check_cmd) return cmd_check(check, out, err);
    if (*threshold_cmd) return cmd_threshold(threshold, out, err);
    if (*figure_cmd) return cmd_figure(figure, out, err);
    if (*scan_cmd) return cmd_scan(scan, out, err);
    if (*audit_cmd) return cmd_audit(audit, out, err);
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  }
  return kExitUsage;
}

}  // namespace bessel_geom::cli
