#pragma once

#include <array>
#include <iosfwd>
#include <optional>
#include <string>

namespace bessel_geom::cli {

struct EvalOptions {
  double p = 0.0;
  double b = 1.0;
  double c = 1.0;
  double z_re = 0.0;
  double z_im = 0.0;
  double eps = 1e-12;
  bool with_w = false;
};

struct CheckOptions {
  double p = 0.0;
  double b = 1.0;
  double c = -1.0;
  double alpha = 0.0;
  double beta = 1.0;
  std::string cls = "star";     // star | convex
  std::string mode = "all";     // lemma | theorem | disk | all
  std::string variant = "derived";  // printed | derived
  double eps = 1e-12;
  int angles = 720;
};

struct ThresholdOptions {
  int figure = 1;
  double tol = 1e-10;
};

struct FigureOptions {
  int figure = 1;
  double low = -1.9;
  double high = 5.0;
  double step = 0.05;
  std::string format = "json";
};

struct ScanOptions {
  double b = 1.0;
  double c = -1.0;
  std::array<double, 2> p_range{1.0, 1.0};
  std::array<double, 2> alpha_range{0.0, 0.0};
  std::array<double, 2> beta_range{1.0, 1.0};
  std::string cls = "star";
  int steps = 10;
  std::optional<int> p_steps;
  std::optional<int> alpha_steps;
  std::optional<int> beta_steps;
  std::optional<unsigned> parallel;
  int angles = 720;
  double eps = 1e-12;
  std::string format = "json";
};

struct AuditOptions {
  std::string format = "json";
  bool rows = false;
};

int cmd_eval(const EvalOptions& o, std::ostream& out, std::ostream& err);
int cmd_check(const CheckOptions& o, std::ostream& out, std::ostream& err);
int cmd_threshold(const ThresholdOptions& o, std::ostream& out, std::ostream& err);
int cmd_figure(const FigureOptions& o, std::ostream& out, std::ostream& err);
int cmd_scan(const ScanOptions& o, std::ostream& out, std::ostream& err);
int cmd_audit(const AuditOptions& o, std::ostream& out, std::ostream& err);

/// Worker count: explicit flag, else BESSEL_GEOM_THREADS, else 0 (auto).
unsigned resolve_threads(std::optional<unsigned> flag);

}  // namespace bessel_geom::cli
