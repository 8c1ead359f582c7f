#include "ptmeans/sharp.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>

#include "ptmeans/series.hpp"

namespace ptmeans {

namespace {

double eval_pair_side(const PowerTypeSpec& spec, double x) {
  return power_type_eval(spec, x, 1.0).value;
}

}  // namespace

const std::array<ComparisonPair, 6>& builtin_pairs() {
  static const std::array<ComparisonPair, 6> pairs = {{
      {MeanKind::Logarithmic, {MeanKind::SeiffertFirst, 1.0}, Direction::family_below},
      {MeanKind::SeiffertFirst, {MeanKind::NeumanSandor, 1.0}, Direction::family_below},
      {MeanKind::Heronian, {MeanKind::NeumanSandor, 1.0}, Direction::family_above},
      {MeanKind::PowerExponential, {MeanKind::Identric, 1.0}, Direction::family_above},
      {MeanKind::PowerExponential, {MeanKind::ExponentialGeometric, 1.0}, Direction::family_below},
      {MeanKind::SeiffertSecond, {MeanKind::NeumanSandor, 1.0}, Direction::family_above},
  }};
  return pairs;
}

double c2_of_p(const ComparisonPair& pair, double p) {
  if (p == 0.0) {
    throw std::invalid_argument(
        "c2 is undefined at p = 0 (the transform degenerates to G)");
  }
  const Jet fam = power_type_series({pair.family, p}, kDefaultSeriesOrder);
  const Jet ref = pair.reference.p == 1.0
                      ? mean_series(pair.reference.kind, kDefaultSeriesOrder)
                      : power_type_series(pair.reference, kDefaultSeriesOrder);
  const double diff = fam[2] - ref[2];
  return pair.direction == Direction::family_below ? diff : -diff;
}

std::optional<CriticalExponentReport> critical_exponent(
    const ComparisonPair& pair) {
  const auto f = [&pair](double p) { return c2_of_p(pair, p); };

  double lo = -8.0, hi = 8.0;
  double flo = f(lo), fhi = f(hi);
  while (flo * fhi > 0.0 && hi < 64.0) {
    lo *= 2.0;
    hi *= 2.0;
    flo = f(lo);
    fhi = f(hi);
  }
  if (flo * fhi > 0.0) return std::nullopt;
  if (flo == 0.0) hi = lo;          // degenerate bracket endpoints
  else if (fhi == 0.0) lo = hi;
  while (hi - lo > 1e-12) {
    double mid = 0.5 * (lo + hi);
    if (mid == 0.0) mid = lo + 0.499 * (hi - lo);  // c2 has no value at p = 0
    const double fm = f(mid);
    if (fm == 0.0) {
      lo = hi = mid;
      break;
    }
    (flo * fm < 0.0 ? hi : lo) = mid;
    (flo * fm < 0.0 ? fhi : flo) = fm;
  }

  CriticalExponentReport report;
  report.pair = pair;
  report.p_star = 0.5 * (lo + hi);

  static constexpr double kSample[9] = {-4, -3, -2, -1, 0.5, 1, 2, 3, 4};
  double sp = 0.0, sc = 0.0;
  for (double p : kSample) {
    const double c = f(p);
    report.c2_samples.emplace_back(p, c);
    sp += p;
    sc += c;
  }
  const double pbar = sp / 9.0, cbar = sc / 9.0;
  double num = 0.0, den = 0.0;
  for (const auto& [p, c] : report.c2_samples) {
    num += (p - pbar) * (c - cbar);
    den += (p - pbar) * (p - pbar);
  }
  report.c2_slope = num / den;

  const double delta = 1e-3;
  report.endpoint_gap_at_p_star = endpoint_gap(pair, report.p_star);
  report.endpoint_gap_below = endpoint_gap(pair, report.p_star - delta);
  report.endpoint_gap_above = endpoint_gap(pair, report.p_star + delta);
  return report;
}

ComparisonPair restate_by_rescaling(const ComparisonPair& pair) {
  const Direction flipped = pair.direction == Direction::family_below
                                ? Direction::family_above
                                : Direction::family_below;
  return {pair.reference.kind, {pair.family, 1.0}, flipped};
}

double restated_critical_order(double p_star) {
  if (p_star == 0.0) {
    throw std::domain_error("cannot restate a comparison with p* = 0");
  }
  return 1.0 / p_star;
}

std::optional<double> endpoint_gap(const ComparisonPair& pair, double p) {
  const auto fam = endpoint_limit({pair.family, p});
  const auto ref = endpoint_limit(pair.reference);
  if (!fam || !ref) return std::nullopt;
  return *fam - *ref;
}

ScanGrid ScanGrid::default_grid(int uniform_samples) {
  ScanGrid grid;
  grid.xs.reserve(static_cast<size_t>(std::max(uniform_samples, 0)) + 60);
  for (int i = 1; i <= uniform_samples; ++i) {
    grid.xs.push_back(static_cast<double>(i) / (uniform_samples + 1));
  }
  for (int k = 1; k <= 48; ++k) {
    grid.xs.push_back(1.0 - std::pow(10.0, -k / 4.0));
  }
  for (int k = 1; k <= 12; ++k) grid.xs.push_back(std::pow(10.0, -k));
  std::sort(grid.xs.begin(), grid.xs.end());
  grid.xs.erase(std::unique(grid.xs.begin(), grid.xs.end()), grid.xs.end());
  std::erase_if(grid.xs, [](double x) { return x <= 0.0 || x >= 1.0; });
  return grid;
}

PairScanReport scan_pair(const ComparisonPair& pair, double p,
                         const ScanGrid& grid) {
  PairScanReport report;
  report.pair = pair;
  report.p = p;
  report.min_gap = std::numeric_limits<double>::infinity();
  for (double x : grid.xs) {
    const double fam = eval_pair_side({pair.family, p}, x);
    const double ref = eval_pair_side(pair.reference, x);
    const double lower = pair.direction == Direction::family_below ? fam : ref;
    const double upper = pair.direction == Direction::family_below ? ref : fam;
    const double gap = (upper - lower) / upper;
    if (gap < report.min_gap) {
      report.min_gap = gap;
      report.argmin_x = x;
    }
    if (gap < -kStrictSlack) report.violations.push_back({x, lower, upper});
  }
  report.pass = report.violations.empty();
  return report;
}

PairScanReport conjecture_scan(double p, const ScanGrid& grid) {
  if (!(p > 0.0)) throw std::domain_error("conjecture scan needs p > 0");
  return scan_pair(builtin_pairs()[5], p, grid);
}

}  // namespace ptmeans
