#pragma once

#include <array>
#include <optional>
#include <utility>
#include <vector>

#include "ptmeans/means.hpp"

namespace ptmeans {

enum class Direction {
  family_below,  // claim: family_p < reference
  family_above,  // claim: reference < family_p
};

/// One parametrized comparison F_p vs a fixed reference mean.
struct ComparisonPair {
  MeanKind family;          // the side carrying the free order p
  PowerTypeSpec reference;  // the fixed side
  Direction direction;
};

/// The six supported comparisons: (L_p, P, below), (P_p, N, below),
/// (He_p, N, above), (Z_p, I, above), (Z_p, Y, below), (T_p, N, above).
const std::array<ComparisonPair, 6>& builtin_pairs();

/// Coefficient of (x-1)^2 in the diagonal expansion of the claimed-lower
/// side minus the claimed-upper side (the subtraction order of each
/// displayed limit).  The claim is necessary iff the result is <= 0; its
/// zero in p is the sharp order p*.  p = 0 is unsupported.
double c2_of_p(const ComparisonPair& pair, double p);

struct CriticalExponentReport {
  ComparisonPair pair;
  std::vector<std::pair<double, double>> c2_samples;  // (p, c2(p))
  double p_star = 0.0;
  double c2_slope = 0.0;  // least-squares slope over the samples
  // Endpoint gaps (family_p minus reference at x -> 0+) at p*, p* - 1e-3,
  // p* + 1e-3; absent when an endpoint limit is unavailable.
  std::optional<double> endpoint_gap_at_p_star;
  std::optional<double> endpoint_gap_below;
  std::optional<double> endpoint_gap_above;
};

/// Solves c2(p*) = 0 by bisection over a bracket auto-expanded from
/// [-8, 8] (doubling, up to [-64, 64]) to an interval of width <= 1e-12.
/// Returns nullopt when the bracket never changes sign.
std::optional<CriticalExponentReport> critical_exponent(
    const ComparisonPair& pair);

/// The equivalent comparison with the parameter moved to the other side;
/// a pair sharp at p* restates to one sharp at 1/p* with the direction
/// flipped (e.g. P_p < N iff p <= 2 becomes P < N_p iff p >= 1/2).
ComparisonPair restate_by_rescaling(const ComparisonPair& pair);

/// Maps the critical order of a pair to the critical order of its
/// restatement.  p* = 0 is unsupported.
double restated_critical_order(double p_star);

/// lim_{x->0+} [family_p(x,1) - reference(x,1)], from the closed-form
/// endpoint table.  nullopt when either limit is unavailable (p <= 0).
std::optional<double> endpoint_gap(const ComparisonPair& pair, double p);

/// Sample plan over x in (0, 1): uniform coverage plus quarter-decade
/// diagonal refinement x = 1 - 10^{-k/4} (k = 1..48), where sharpness
/// failures concentrate, plus endpoint decades x = 10^{-k} (k = 1..12).
struct ScanGrid {
  std::vector<double> xs;
  static ScanGrid default_grid(int uniform_samples);
};

struct ScanViolation {
  double x;
  double lower;  // claimed-lower side value
  double upper;  // claimed-upper side value
};

struct PairScanReport {
  ComparisonPair pair;
  double p = 0.0;
  double min_gap = 0.0;  // min over the grid of (upper - lower)/upper
  double argmin_x = 0.0;
  std::vector<ScanViolation> violations;  // gap < -kStrictSlack, by x
  bool pass = false;
};

/// Checks the claimed inequality at order p over the grid.
PairScanReport scan_pair(const ComparisonPair& pair, double p,
                         const ScanGrid& grid);

/// Sign scan of T_p(x,1) - N(x,1): the conjectured N < T_p with sharp
/// order 4/5.  Equivalent to scan_pair on the (T_p, N) pair.
PairScanReport conjecture_scan(double p, const ScanGrid& grid);

}  // namespace ptmeans
