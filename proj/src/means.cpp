#include "ptmeans/means.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <numbers>
#include <stdexcept>
#include <utility>

namespace ptmeans {

namespace {

// Below this value of u = (hi-lo)/(hi+lo) the defining quotients are
// evaluated through truncated even series in u (degree 12; truncation
// error < 1e-24).  In naive form they are 0/0 at the diagonal and lose
// all precision.
constexpr double kSeriesCut = 1e-2;

constexpr double kMeanEvalRelBound = 1e-13;

// atanh(u)/u
double atanh_over_u(double u) {
  const double u2 = u * u;
  return 1.0 + u2 * (1.0 / 3 + u2 * (1.0 / 5 + u2 * (1.0 / 7 + u2 * (1.0 / 9 + u2 * (1.0 / 11 + u2 * (1.0 / 13))))));
}

// asin(u)/u
double asin_over_u(double u) {
  const double u2 = u * u;
  return 1.0 + u2 * (1.0 / 6 + u2 * (3.0 / 40 + u2 * (5.0 / 112 + u2 * (35.0 / 1152 + u2 * (63.0 / 2816 + u2 * (231.0 / 13312))))));
}

// atan(u)/u
double atan_over_u(double u) {
  const double u2 = u * u;
  return 1.0 + u2 * (-1.0 / 3 + u2 * (1.0 / 5 + u2 * (-1.0 / 7 + u2 * (1.0 / 9 + u2 * (-1.0 / 11 + u2 * (1.0 / 13))))));
}

// asinh(u)/u
double asinh_over_u(double u) {
  const double u2 = u * u;
  return 1.0 + u2 * (-1.0 / 6 + u2 * (3.0 / 40 + u2 * (-5.0 / 112 + u2 * (35.0 / 1152 + u2 * (-63.0 / 2816 + u2 * (231.0 / 13312))))));
}

// [(1+u)ln(1+u) - (1-u)ln(1-u)]/(2u) - 1  =  -sum u^{2m}/(2m(2m+1))
double identric_exponent_series(double u) {
  const double u2 = u * u;
  return -u2 * (1.0 / 6 + u2 * (1.0 / 20 + u2 * (1.0 / 42 + u2 * (1.0 / 72 + u2 * (1.0 / 110 + u2 * (1.0 / 156))))));
}

// asinh(u) = ln(u + sqrt(u^2 + 1)), in the log1p form that stays exact
// for small u.
double asinh_stable(double u) {
  return std::log1p(u + u * u / (1.0 + std::sqrt(1.0 + u * u)));
}

void require_positive(double a, double b) {
  if (!(a > 0.0) || !(b > 0.0) || !std::isfinite(a) || !std::isfinite(b)) {
    throw std::domain_error("means require positive finite arguments");
  }
}

// Core evaluation with hi >= lo > 0 and hi != lo.
double mean_ordered(MeanKind kind, double hi, double lo) {
  const double sum = hi + lo;
  const double s = 0.5 * sum;
  const double d = hi - lo;
  const double u = d / sum;  // in (0, 1]
  switch (kind) {
    case MeanKind::Arithmetic:
      return s;
    case MeanKind::Geometric:
      return std::sqrt(hi) * std::sqrt(lo);
    case MeanKind::Heronian:
      return (sum + std::sqrt(hi) * std::sqrt(lo)) / 3.0;
    case MeanKind::Logarithmic:
      if (u < kSeriesCut) return s / atanh_over_u(u);
      return d / detail::ln_ratio(hi, lo);
    case MeanKind::Identric: {
      if (u < kSeriesCut) return s * std::exp(identric_exponent_series(u));
      const double t1 = (1.0 + u) * std::log1p(u);
      const double t2 = u < 1.0 ? (1.0 - u) * std::log1p(-u) : 0.0;
      return s * std::exp((t1 - t2) / (2.0 * u) - 1.0);
    }
    case MeanKind::SeiffertFirst: {
      if (u < kSeriesCut) return s / asin_over_u(u);
      if (u <= 0.7) return d / (2.0 * std::asin(u));
      // asin is ill-conditioned as u -> 1; switch to the complementary
      // form with sqrt(1 - u^2) = G/A computed directly from hi, lo.
      const double g = std::sqrt(hi) * std::sqrt(lo) / s;
      return d / (std::numbers::pi - 2.0 * std::asin(g));
    }
    case MeanKind::SeiffertSecond:
      if (u < kSeriesCut) return s / atan_over_u(u);
      return d / (2.0 * std::atan(u));
    case MeanKind::NeumanSandor:
      if (u < kSeriesCut) return s / asinh_over_u(u);
      return d / (2.0 * asinh_stable(u));
    case MeanKind::PowerExponential: {
      const double whi = hi / sum, wlo = lo / sum;
      return std::exp(whi * std::log(hi) + wlo * std::log(lo));
    }
    case MeanKind::ExponentialGeometric: {
      double w;  // 1 - G^2/L^2; only its absolute accuracy matters
      if (u < kSeriesCut) {
        const double q = atanh_over_u(u);
        w = 1.0 - (1.0 - u * u) * q * q;
      } else {
        const double v = std::sqrt(hi) * std::sqrt(lo) * detail::ln_ratio(hi, lo) / d;
        w = 1.0 - v * v;
      }
      return mean_ordered(MeanKind::Identric, hi, lo) * std::exp(w);
    }
  }
  throw std::invalid_argument("unknown mean kind");
}

double power_rel_bound(double p) {
  const double ap = std::abs(p);
  if (ap == 0.0) return 1e-14;
  if (ap < 1e-3) return std::min(1.0, 1e-13 / ap);
  if (ap <= 1e3) return 1e-10;
  return 1e-13 * ap;
}

}  // namespace

std::string_view mean_tag(MeanKind kind) {
  switch (kind) {
    case MeanKind::Arithmetic: return "A";
    case MeanKind::Geometric: return "G";
    case MeanKind::Heronian: return "He";
    case MeanKind::Logarithmic: return "L";
    case MeanKind::Identric: return "I";
    case MeanKind::SeiffertFirst: return "P";
    case MeanKind::SeiffertSecond: return "T";
    case MeanKind::NeumanSandor: return "N";
    case MeanKind::PowerExponential: return "Z";
    case MeanKind::ExponentialGeometric: return "Y";
  }
  return "?";
}

std::optional<MeanKind> parse_mean_tag(std::string_view tag) {
  for (MeanKind k : kAllMeanKinds) {
    if (mean_tag(k) == tag) return k;
  }
  return std::nullopt;
}

std::string format_spec(const PowerTypeSpec& spec) {
  std::string out(mean_tag(spec.kind));
  if (spec.p != 1.0) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.17g", spec.p);
    out += ':';
    out += buf;
  }
  return out;
}

std::optional<double> parse_order(std::string_view text) {
  const auto slash = text.find('/');
  try {
    size_t used = 0;
    if (slash == std::string_view::npos) {
      const double v = std::stod(std::string(text), &used);
      if (used != text.size()) return std::nullopt;
      return v;
    }
    const std::string num(text.substr(0, slash)), den(text.substr(slash + 1));
    const double nv = std::stod(num, &used);
    if (used != num.size()) return std::nullopt;
    const double dv = std::stod(den, &used);
    if (used != den.size() || dv == 0.0) return std::nullopt;
    return nv / dv;
  } catch (const std::exception&) {
    return std::nullopt;
  }
}

std::optional<PowerTypeSpec> parse_spec(std::string_view text) {
  const auto colon = text.find(':');
  const auto kind = parse_mean_tag(text.substr(0, colon));
  if (!kind) return std::nullopt;
  PowerTypeSpec spec{*kind, 1.0};
  if (colon != std::string_view::npos) {
    const auto p = parse_order(text.substr(colon + 1));
    if (!p || !std::isfinite(*p)) return std::nullopt;
    spec.p = *p;
  }
  return spec;
}

namespace detail {

double ln_ratio(double hi, double lo) {
  const double y = (hi - lo) / lo;
  if (y < 1e15) return std::log1p(y);
  return std::log(hi) - std::log(lo);  // also covers y = inf
}

}  // namespace detail

MeanValue mean_eval(MeanKind kind, double a, double b) {
  require_positive(a, b);
  if (a == b) return {a, 0.0};
  const double hi = std::max(a, b), lo = std::min(a, b);
  const double v = std::clamp(mean_ordered(kind, hi, lo), lo, hi);
  return {v, kMeanEvalRelBound};
}

MeanValue power_type_eval(const PowerTypeSpec& spec, double a, double b) {
  require_positive(a, b);
  if (!std::isfinite(spec.p)) {
    throw std::domain_error("power-type order must be finite");
  }
  const double p = spec.p;
  if (a == b) return {a, 0.0};
  if (p == 0.0) return {std::sqrt(a) * std::sqrt(b), 1e-14};
  if (spec.kind == MeanKind::Geometric) {
    // G_p = G identically.
    return {std::sqrt(a) * std::sqrt(b), power_rel_bound(p)};
  }

  const double hi = std::max(a, b), lo = std::min(a, b);
  const double ell = detail::ln_ratio(hi, lo);
  const double q = std::abs(p) * ell;

  // M_p(a,b) = hi * M(y,1)^{1/p} for p > 0 and lo * M(y,1)^{1/p} for
  // p < 0, with y = exp(-q) in (0,1); everything stays representable.
  double ln_unit;  // ln M(y, 1)
  if (q > 640.0) {
    // y underflows; the x -> 0+ asymptotics are exact to O(y).
    ln_unit = spec.kind == MeanKind::Logarithmic
                  ? -std::log(q)
                  : std::log(endpoint_limit_base(spec.kind));
  } else {
    const double y = std::exp(-q);
    ln_unit = std::log(mean_ordered(spec.kind, 1.0, y));
  }
  const double base = p > 0.0 ? hi : lo;
  const double v = std::clamp(base * std::exp(ln_unit / p), lo, hi);
  return {v, power_rel_bound(p)};
}

double endpoint_limit_base(MeanKind kind) {
  switch (kind) {
    case MeanKind::Arithmetic: return 0.5;
    case MeanKind::Geometric: return 0.0;
    case MeanKind::Heronian: return 1.0 / 3.0;
    case MeanKind::Logarithmic: return 0.0;
    case MeanKind::Identric: return 1.0 / std::numbers::e;
    case MeanKind::SeiffertFirst: return std::numbers::inv_pi;
    case MeanKind::SeiffertSecond: return 2.0 * std::numbers::inv_pi;
    case MeanKind::NeumanSandor: return 0.5 / std::log1p(std::numbers::sqrt2);
    case MeanKind::PowerExponential: return 1.0;
    case MeanKind::ExponentialGeometric: return 1.0;
  }
  throw std::invalid_argument("unknown mean kind");
}

std::optional<double> endpoint_limit(const PowerTypeSpec& spec) {
  if (!(spec.p > 0.0) || !std::isfinite(spec.p)) return std::nullopt;
  const double c = endpoint_limit_base(spec.kind);
  if (c == 0.0) return 0.0;
  return std::exp(std::log(c) / spec.p);
}

DiagonalWeights diagonal_weights(MeanKind kind) {
  const double h = 1e-6;
  // The stored offsets define the true spacing, so the divided difference
  // uses xp - xm rather than 2h.
  const auto slope_x = [kind](double step) {
    const double xp = 1.0 + step, xm = 1.0 - step;
    return (mean_eval(kind, xp, 1.0).value - mean_eval(kind, xm, 1.0).value) /
           (xp - xm);
  };
  const auto slope_y = [kind](double step) {
    const double yp = 1.0 + step, ym = 1.0 - step;
    return (mean_eval(kind, 1.0, yp).value - mean_eval(kind, 1.0, ym).value) /
           (yp - ym);
  };
  return {(4.0 * slope_x(h / 2) - slope_x(h)) / 3.0,
          (4.0 * slope_y(h / 2) - slope_y(h)) / 3.0};
}

double rescaling_identity_residual(const PowerTypeSpec& spec, double t,
                                   double a, double b) {
  const PowerTypeSpec scaled{spec.kind, spec.p * t};
  const double lhs = std::pow(power_type_eval(scaled, a, b).value, t);
  const double rhs =
      power_type_eval(spec, std::pow(a, t), std::pow(b, t)).value;
  return std::abs(lhs - rhs) / rhs;
}

}  // namespace ptmeans
