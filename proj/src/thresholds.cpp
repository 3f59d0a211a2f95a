#include "bessel_geom/thresholds.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>
#include <string>
#include <utility>

#include "bessel_geom/errors.hpp"

namespace bessel_geom {

namespace {

bool negative(Figure id, double x) { return figure_eval(id, x) < 0.0; }

std::string label(Figure id) {
  return "figure " + std::to_string(figure_number(id));
}

// Moves an endpoint that sits exactly on the singularity just off it and
// rejects windows that straddle it.
void normalize_window(Figure id, double& low, double& high) {
  const double s = singularity(id);
  if (low == s) low = s + kSingularityGap;
  if (high == s) high = s - kSingularityGap;
  if (!(low < high)) throw DomainError("empty scan window");
  if (low < s && high > s) {
    std::ostringstream msg;
    msg << "window [" << low << ", " << high << "] contains the singularity at "
        << s;
    throw DomainError(msg.str());
  }
}

}  // namespace

std::optional<Figure> figure_from_number(int number) {
  if (number < 1 || number > 6) return std::nullopt;
  return static_cast<Figure>(number);
}

int figure_number(Figure id) { return static_cast<int>(id); }

double singularity(Figure id) {
  switch (id) {
    case Figure::Fig3:
    case Figure::Fig6:
      return -2.5;
    default:
      return -2.0;
  }
}

double figure_eval(Figure id, double x) {
  if (x == singularity(id)) {
    throw SingularityError(label(id) + " is singular at x = " +
                           std::to_string(singularity(id)));
  }
  // Quadratics that vanish at the singularity are kept factored so that
  // (x - s) * exp(1 / (x - s)) never degenerates into 0 * inf.
  const double e1 = std::exp(1.0 / (x + 2.0));
  const double e3 = std::exp(2.0 / (2.0 * x + 5.0));
  switch (id) {
    case Figure::Fig1:
      return (2.0 * x + 3.0) * e1 - (x + 1.0);
    case Figure::Fig2:
      return (2.0 * x + 3.0) - e1 * (x + 1.0);
    case Figure::Fig3:
      return 4.0 * (x + 2.0) * e3 - (2.0 * x + 3.0);
    case Figure::Fig4:
      return (2.0 * x + 3.0) * ((x + 2.0) * e1) - (x * x + x - 1.0);
    case Figure::Fig5:
      return (2.0 * x + 3.0) * (x + 2.0) - (x * x + 7.0 * x + 11.0) * e1;
    case Figure::Fig6:
      return 4.0 * (x + 2.0) * ((2.0 * x + 5.0) * e3) -
             (4.0 * x * x + 8.0 * x - 1.0);
  }
  throw DomainError("unknown figure");
}

RootResult bisect(Figure id, double a, double b, double tol) {
  if (!(tol > 0.0)) throw DomainError("bisection tolerance must be positive");
  if (!(a < b)) throw DomainError("bisection needs a < b");
  const bool neg_a = negative(id, a);
  if (neg_a == negative(id, b)) {
    throw NoBracket(label(id) + ": endpoints do not bracket a sign change");
  }
  RootResult result;
  while (b - a > 2.0 * tol) {
    const double mid = a + 0.5 * (b - a);
    if (mid <= a || mid >= b) break;
    if (negative(id, mid) == neg_a) {
      a = mid;
    } else {
      b = mid;
    }
    ++result.iterations;
  }
  result.low = a;
  result.high = b;
  result.x0 = a + 0.5 * (b - a);
  result.residual = std::abs(figure_eval(id, result.x0));
  return result;
}

std::vector<SignChange> positivity_scan(Figure id, double low, double high,
                                        double step) {
  if (!(step > 0.0)) throw DomainError("scan step must be positive");
  const double s = singularity(id);
  if (!(low < high)) throw DomainError("scan needs low < high");
  if (low <= s && high >= s) {
    throw DomainError("scan window touches the singularity of " + label(id));
  }
  std::vector<SignChange> changes;
  const auto intervals = static_cast<long long>(std::ceil((high - low) / step));
  double prev_x = low;
  bool prev_neg = negative(id, low);
  for (long long i = 1; i <= intervals; ++i) {
    const double x = i == intervals ? high : low + static_cast<double>(i) * step;
    const bool neg = negative(id, x);
    if (neg != prev_neg) changes.push_back({prev_x, x});
    prev_x = x;
    prev_neg = neg;
  }
  return changes;
}

std::vector<RootResult> find_roots(Figure id, double tol) {
  const double s = singularity(id);
  std::vector<RootResult> roots;
  for (const auto& [low, high] :
       {std::pair{s - kSearchWindow, s - kSingularityGap},
        std::pair{s + kSingularityGap, s + kSearchWindow}}) {
    for (const SignChange& change :
         positivity_scan(id, low, high, kBracketScanStep)) {
      roots.push_back(bisect(id, change.low, change.high, tol));
    }
  }
  return roots;
}

RootResult find_threshold(Figure id, double tol) {
  const std::vector<RootResult> roots = find_roots(id, tol);
  if (roots.empty()) {
    throw NoBracket(label(id) + ": no sign change on either side of x = " +
                    std::to_string(singularity(id)));
  }
  return roots.back();
}

RootResult find_threshold(Figure id, double tol, double low, double high) {
  normalize_window(id, low, high);
  const std::vector<SignChange> changes =
      positivity_scan(id, low, high, std::min(kBracketScanStep, high - low));
  if (changes.empty()) {
    std::ostringstream msg;
    msg << label(id) << ": no sign change on [" << low << ", " << high << "]";
    throw NoBracket(msg.str());
  }
  return bisect(id, changes.back().low, changes.back().high, tol);
}

}  // namespace bessel_geom
