#pragma once

#include <array>
#include <optional>
#include <string>
#include <string_view>

namespace ptmeans {

/// The ten base bivariate means.  Tags follow the standard literature
/// symbols: A, G, He, L, I, P, T, N, Z, Y.
enum class MeanKind {
  Arithmetic,            // A = (a+b)/2
  Geometric,             // G = sqrt(ab)
  Heronian,              // He = (a+b+sqrt(ab))/3
  Logarithmic,           // L = (a-b)/(ln a - ln b)
  Identric,              // I = e^{-1} (a^a/b^b)^{1/(a-b)}
  SeiffertFirst,         // P = (a-b)/(2 asin((a-b)/(a+b)))
  SeiffertSecond,        // T = (a-b)/(2 atan((a-b)/(a+b)))
  NeumanSandor,          // N = (a-b)/(2 asinh((a-b)/(a+b)))
  PowerExponential,      // Z = a^{a/(a+b)} b^{b/(a+b)}
  ExponentialGeometric,  // Y = I exp(1 - G^2/L^2)
};

inline constexpr std::array<MeanKind, 10> kAllMeanKinds = {
    MeanKind::Arithmetic,       MeanKind::Geometric,
    MeanKind::Heronian,         MeanKind::Logarithmic,
    MeanKind::Identric,         MeanKind::SeiffertFirst,
    MeanKind::SeiffertSecond,   MeanKind::NeumanSandor,
    MeanKind::PowerExponential, MeanKind::ExponentialGeometric,
};

std::string_view mean_tag(MeanKind kind);
std::optional<MeanKind> parse_mean_tag(std::string_view tag);

/// A mean together with a power-type order p, denoting
/// M_p(a,b) = M(a^p, b^p)^{1/p} for p != 0 and M_0 = sqrt(ab).
struct PowerTypeSpec {
  MeanKind kind;
  double p = 1.0;
};

/// "N:0.5" / "A:2/3" / "He" (p = 1 omitted).  Orders may be decimals or
/// rationals "num/den".
std::string format_spec(const PowerTypeSpec& spec);
std::optional<PowerTypeSpec> parse_spec(std::string_view text);

/// Parses an order value: a decimal or a rational "num/den".
std::optional<double> parse_order(std::string_view text);

struct MeanValue {
  double value = 0.0;
  double rel_error_bound = 0.0;  // claimed relative accuracy
};

/// First-order diagonal weights M_x(1,1), M_y(1,1); they sum to 1 and
/// equal 1/2 each for a symmetric mean.
struct DiagonalWeights {
  double wx = 0.0;
  double wy = 0.0;
};

/// Relative slack applied to every strict-inequality assertion, absorbing
/// double-precision rounding near the diagonal.
inline constexpr double kStrictSlack = 1e-13;

/// Evaluates the base mean.  Reflexive inputs return a bit-exactly; the
/// result is always clamped into [min(a,b), max(a,b)].  Requires a, b > 0
/// and finite (std::domain_error otherwise).  Relative error stays below
/// the returned bound across the near-diagonal and near-endpoint regimes.
MeanValue mean_eval(MeanKind kind, double a, double b);

/// Evaluates M_p(a,b) = M(a^p, b^p)^{1/p} in the log domain, so large |p|
/// and extreme ratios do not overflow.  p = 0 returns sqrt(ab) exactly.
/// Requires a, b > 0 and p finite.
MeanValue power_type_eval(const PowerTypeSpec& spec, double a, double b);

/// Closed-form lim_{x->0+} M_p(x, 1) for p > 0, via
/// lim M_p(x,1) = (lim M(x,1))^{1/p}.  Returns nullopt for p <= 0, where
/// the limit calls for a different analysis.
std::optional<double> endpoint_limit(const PowerTypeSpec& spec);

/// lim_{x->0+} M(x, 1) for the base mean (A 1/2, G 0, He 1/3, L 0, I 1/e,
/// P 1/pi, T 2/pi, N 1/(2 ln(1+sqrt 2)), Z 1, Y 1).
double endpoint_limit_base(MeanKind kind);

/// M_x(1,1), M_y(1,1) by central differences (h = 1e-6) with one
/// Richardson level.
DiagonalWeights diagonal_weights(MeanKind kind);

/// |M_{pt}(a,b)^t - M_p(a^t, b^t)| / M_p(a^t, b^t); the rescaling identity
/// makes this zero in exact arithmetic.
double rescaling_identity_residual(const PowerTypeSpec& spec, double t,
                                   double a, double b);

namespace detail {
/// ln(hi) - ln(lo) for hi >= lo > 0, accurate for ratios from 1 up to the
/// full double range.
double ln_ratio(double hi, double lo);
}  // namespace detail

}  // namespace ptmeans
