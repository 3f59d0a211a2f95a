#pragma once

#include <optional>
#include <vector>

namespace bessel_geom {

/// Auxiliary one-variable functions of the order whose non-negativity gives
/// the alpha = 0, beta = 1 closed-form conditions.
enum class Figure { Fig1 = 1, Fig2, Fig3, Fig4, Fig5, Fig6 };

/// Figure from its number 1..6; nullopt otherwise.
std::optional<Figure> figure_from_number(int number);
int figure_number(Figure id);

/// Abscissa of the essential singularity (-2 or -5/2).
double singularity(Figure id);

/// g(x). Throws SingularityError at exactly x = singularity(id).
double figure_eval(Figure id, double x);

struct RootResult {
  double x0 = 0.0;
  double low = 0.0;
  double high = 0.0;
  int iterations = 0;
  double residual = 0.0;  // |g(x0)|
};

struct SignChange {
  double low = 0.0;
  double high = 0.0;
};

inline constexpr double kDefaultRootTol = 1e-10;

/// Grid step used to locate brackets before bisection.
inline constexpr double kBracketScanStep = 1e-3;
/// Half-width of each search window on either side of the singularity.
inline constexpr double kSearchWindow = 100.0;
/// Gap left open around the singularity.
inline constexpr double kSingularityGap = 1e-6;

/// Bisection on [a, b], which must bracket a change between g < 0 and
/// g >= 0. Stops once the bracket is no wider than 2 tol.
RootResult bisect(Figure id, double a, double b, double tol = kDefaultRootTol);

/// Every interval [x, x + step] on the grid low, low + step, ..., high where g
/// moves between negative and non-negative. Requires singularity < low < high
/// or low < high < singularity, and step > 0 (DomainError otherwise).
std::vector<SignChange> positivity_scan(Figure id, double low, double high,
                                        double step);

/// All roots found on both sides of the singularity, ascending.
std::vector<RootResult> find_roots(Figure id, double tol = kDefaultRootTol);

/// Right-most root over both search windows. Throws NoBracket if none.
RootResult find_threshold(Figure id, double tol = kDefaultRootTol);

/// Right-most root inside [low, high]. Throws NoBracket if g does not change
/// sign there.
RootResult find_threshold(Figure id, double tol, double low, double high);

}  // namespace bessel_geom
