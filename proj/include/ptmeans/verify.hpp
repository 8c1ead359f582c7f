#pragma once

#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "ptmeans/means.hpp"

namespace ptmeans {

struct ChainLink {
  PowerTypeSpec spec;
  std::string label;  // display form, e.g. "A:2/3", "A:log_pi(2)"
};

/// An ordered list of power-type means claimed strictly increasing.
struct ChainSpec {
  std::string name;
  std::vector<ChainLink> links;
};

/// Built-in chains: yang1, yang3, costin_toader, chu_yang, yang2
/// (yang2's constant c = ln 2 / ln ln(3 + 2 sqrt 2) is evaluated at run
/// time).
const std::vector<ChainSpec>& builtin_chains();
const ChainSpec* find_chain(std::string_view name);

struct ChainViolation {
  int link;  // index of the left member
  double x;
  double lhs;
  double rhs;
};

struct LinkGap {
  double min_gap = 0.0;  // min over the grid of (rhs - lhs)/rhs
  double argmin_x = 0.0;
};

struct ChainReport {
  std::string chain;
  std::vector<double> grid;
  std::vector<LinkGap> link_gaps;               // one per adjacent pair
  std::vector<ChainViolation> violations;       // sorted by x
  bool pass = false;                            // violations.empty()
};

/// Grid of n points spanning [1e-6, 1 - 1e-6], log-spaced toward both the
/// endpoint (x = 10^-e) and the diagonal (x = 1 - 10^-e), where the
/// interesting behavior concentrates.
std::vector<double> default_chain_grid(int n);

/// Checks every adjacent strict inequality of the chain at (x, 1) for
/// each grid x.  A violation is a relative gap below -kStrictSlack;
/// violations are data, not errors.
ChainReport verify_chain(const ChainSpec& spec, std::span<const double> grid);

struct MonotonicityViolation {
  double a, b;
  double p_lo, p_hi;
  double value_lo, value_hi;
};

struct MonotonicityReport {
  MeanKind kind;
  std::vector<MonotonicityViolation> violations;
  bool pass = false;
};

/// Asserts p -> M_p(a, b) is increasing along the sorted p grid at every
/// point, with relative slack kStrictSlack.  Applies to all nine
/// parametrized kinds (G is excluded: G_p = G identically).
MonotonicityReport verify_monotonicity_in_p(
    MeanKind kind, std::span<const double> p_grid,
    std::span<const std::pair<double, double>> points);

/// Closed form d/dp ln Z_p = a^p b^p (ln a - ln b)^2 / (a^p + b^p)^2,
/// evaluated overflow-free; zero iff a = b.
double z_log_derivative(double p, double a, double b);

/// Central-difference estimate of (ln M)_xy with step h = 1e-4 min(x, y)
/// and one Richardson level.  Inputs with |x - y| < 10h are rejected as
/// ill-conditioned (the closed forms have removable diagonal
/// singularities).  Negative for kind in {P, T, N}.
double mixed_log_partial(MeanKind kind, double x, double y);

/// The sufficiency witnesses f1, f2, f3 on (0, 1): positive, strictly
/// decreasing, with limit 0 at x -> 1-.
double witness_f(int which, double x);

/// N(x,y) - A(x,y)^2 / A_2(x,y); positive for x != y.
double n_lower_bound_check(double x, double y);

}  // namespace ptmeans
