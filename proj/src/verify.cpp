#include "ptmeans/verify.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <stdexcept>

namespace ptmeans {

namespace {

ChainSpec make_chain(std::string name,
                     std::vector<std::pair<PowerTypeSpec, std::string>> raw) {
  ChainSpec spec;
  spec.name = std::move(name);
  for (auto& [s, label] : raw) {
    spec.links.push_back({s, label.empty() ? format_spec(s) : std::move(label)});
  }
  return spec;
}

void require_positive(double a, double b) {
  if (!(a > 0.0) || !(b > 0.0) || !std::isfinite(a) || !std::isfinite(b)) {
    throw std::domain_error("means require positive finite arguments");
  }
}

}  // namespace

const std::vector<ChainSpec>& builtin_chains() {
  using K = MeanKind;
  static const std::vector<ChainSpec> chains = [] {
    const double log_pi_2 = std::log(2.0) / std::log(std::numbers::pi);
    const double log_pi2_2 = std::log(2.0) / std::log(std::numbers::pi / 2.0);
    const double ln2 = std::numbers::ln2;
    // Sharp lower power-mean exponent for N: ln 2 / ln ln(3 + 2 sqrt 2).
    const double c_n = ln2 / std::log(std::log(3.0 + 2.0 * std::numbers::sqrt2));

    std::vector<ChainSpec> v;
    v.push_back(make_chain("yang1", {
        {{K::Logarithmic, 2.0}, "L:2"},
        {{K::Heronian, 1.0}, "He"},
        {{K::Arithmetic, 2.0 / 3.0}, "A:2/3"},
        {{K::Identric, 1.0}, "I"},
        {{K::PowerExponential, 1.0 / 3.0}, "Z:1/3"},
        {{K::ExponentialGeometric, 0.5}, "Y:1/2"},
    }));
    v.push_back(make_chain("yang3", {
        {{K::Logarithmic, 2.0}, "L:2"},
        {{K::SeiffertFirst, 1.0}, "P"},
        {{K::NeumanSandor, 0.5}, "N:1/2"},
        {{K::Heronian, 1.0}, "He"},
        {{K::Arithmetic, 2.0 / 3.0}, "A:2/3"},
        {{K::Identric, 1.0}, "I"},
        {{K::PowerExponential, 1.0 / 3.0}, "Z:1/3"},
        {{K::ExponentialGeometric, 0.5}, "Y:1/2"},
    }));
    v.push_back(make_chain("costin_toader", {
        {{K::Geometric, 1.0}, "G"},
        {{K::Logarithmic, 1.0}, "L"},
        {{K::Arithmetic, 0.5}, "A:1/2"},
        {{K::SeiffertFirst, 1.0}, "P"},
        {{K::Arithmetic, 1.0}, "A"},
        {{K::NeumanSandor, 1.0}, "N"},
        {{K::SeiffertSecond, 1.0}, "T"},
        {{K::Arithmetic, 2.0}, "A:2"},
    }));
    v.push_back(make_chain("chu_yang", {
        {{K::SeiffertSecond, 0.4}, "T:2/5"},
        {{K::Heronian, 1.0}, "He"},
        {{K::Arithmetic, 2.0 / 3.0}, "A:2/3"},
        {{K::Identric, 1.0}, "I"},
        {{K::PowerExponential, 1.0 / 3.0}, "Z:1/3"},
        {{K::ExponentialGeometric, 0.5}, "Y:1/2"},
    }));
    v.push_back(make_chain("yang2", {
        {{K::Arithmetic, 0.0}, "A:0"},
        {{K::Logarithmic, 1.0}, "L"},
        {{K::Arithmetic, 1.0 / 3.0}, "A:1/3"},
        {{K::Arithmetic, log_pi_2}, "A:log_pi(2)"},
        {{K::SeiffertFirst, 1.0}, "P"},
        {{K::Arithmetic, 2.0 / 3.0}, "A:2/3"},
        {{K::Identric, 1.0}, "I"},
        {{K::Arithmetic, ln2}, "A:ln(2)"},
        {{K::Arithmetic, c_n}, "A:ln2/lnln(3+2sqrt2)"},
        {{K::NeumanSandor, 1.0}, "N"},
        {{K::Arithmetic, 4.0 / 3.0}, "A:4/3"},
        {{K::Arithmetic, log_pi2_2}, "A:log_pi/2(2)"},
        {{K::SeiffertSecond, 1.0}, "T"},
        {{K::Arithmetic, 5.0 / 3.0}, "A:5/3"},
    }));
    return v;
  }();
  return chains;
}

const ChainSpec* find_chain(std::string_view name) {
  for (const ChainSpec& c : builtin_chains()) {
    if (c.name == name) return &c;
  }
  return nullptr;
}

std::vector<double> default_chain_grid(int n) {
  if (n < 2) throw std::invalid_argument("chain grid needs at least 2 points");
  std::vector<double> xs;
  xs.reserve(static_cast<size_t>(n));
  const double emax = 6.0;
  const double emin = std::log10(2.0);
  const int half = n / 2;
  // Endpoint side: x = 10^-e from 1e-6 up to 1/2.
  for (int i = 0; i < half; ++i) {
    const double e = emax + (emin - emax) * i / std::max(half - 1, 1);
    xs.push_back(std::pow(10.0, -e));
  }
  // Diagonal side: x = 1 - 10^-e from just above 1/2 up to 1 - 1e-6.
  const int rest = n - half;
  for (int i = 1; i <= rest; ++i) {
    const double e = emin + (emax - emin) * i / rest;
    xs.push_back(1.0 - std::pow(10.0, -e));
  }
  std::sort(xs.begin(), xs.end());
  xs.erase(std::unique(xs.begin(), xs.end()), xs.end());
  return xs;
}

ChainReport verify_chain(const ChainSpec& spec, std::span<const double> grid) {
  ChainReport report;
  report.chain = spec.name;
  report.grid.assign(grid.begin(), grid.end());
  std::sort(report.grid.begin(), report.grid.end());
  const size_t nlinks = spec.links.size() < 2 ? 0 : spec.links.size() - 1;
  report.link_gaps.assign(nlinks,
                          {std::numeric_limits<double>::infinity(), 0.0});
  std::vector<double> values(spec.links.size());
  for (double x : report.grid) {
    for (size_t i = 0; i < spec.links.size(); ++i) {
      values[i] = power_type_eval(spec.links[i].spec, x, 1.0).value;
    }
    for (size_t i = 0; i < nlinks; ++i) {
      const double lhs = values[i], rhs = values[i + 1];
      const double gap = (rhs - lhs) / rhs;
      if (gap < report.link_gaps[i].min_gap) {
        report.link_gaps[i] = {gap, x};
      }
      if (gap < -kStrictSlack) {
        report.violations.push_back({static_cast<int>(i), x, lhs, rhs});
      }
    }
  }
  report.pass = report.violations.empty();
  return report;
}

MonotonicityReport verify_monotonicity_in_p(
    MeanKind kind, std::span<const double> p_grid,
    std::span<const std::pair<double, double>> points) {
  MonotonicityReport report;
  report.kind = kind;
  if (p_grid.empty()) {
    throw std::invalid_argument("monotonicity check needs a nonempty p grid");
  }
  std::vector<double> ps(p_grid.begin(), p_grid.end());
  std::sort(ps.begin(), ps.end());
  for (const auto& [a, b] : points) {
    double prev = power_type_eval({kind, ps.front()}, a, b).value;
    for (size_t i = 1; i < ps.size(); ++i) {
      const double cur = power_type_eval({kind, ps[i]}, a, b).value;
      if (cur - prev < -kStrictSlack * prev) {
        report.violations.push_back({a, b, ps[i - 1], ps[i], prev, cur});
      }
      prev = cur;
    }
  }
  report.pass = report.violations.empty();
  return report;
}

double z_log_derivative(double p, double a, double b) {
  require_positive(a, b);
  if (a == b) return 0.0;
  const double hi = std::max(a, b), lo = std::min(a, b);
  const double ell = detail::ln_ratio(hi, lo);
  // a^p b^p (ln a - ln b)^2 / (a^p + b^p)^2 = ell^2 w/(1+w)^2 with
  // w = exp(-|p| ell), which never overflows.
  const double w = std::exp(-std::abs(p) * ell);
  const double denom = 1.0 + w;
  return ell * ell * w / (denom * denom);
}

double mixed_log_partial(MeanKind kind, double x, double y) {
  require_positive(x, y);
  const double h = 1e-4 * std::min(x, y);
  if (std::abs(x - y) < 10.0 * h) {
    throw std::domain_error(
        "mixed_log_partial rejects near-diagonal points as ill-conditioned");
  }
  const auto lnm = [kind](double u, double v) {
    return std::log(mean_eval(kind, u, v).value);
  };
  const auto cross = [&](double s) {
    return (lnm(x + s, y + s) - lnm(x + s, y - s) - lnm(x - s, y + s) +
            lnm(x - s, y - s)) /
           (4.0 * s * s);
  };
  return (4.0 * cross(h / 2) - cross(h)) / 3.0;
}

double witness_f(int which, double x) {
  if (!(x > 0.0 && x < 1.0)) {
    throw std::domain_error("witness functions are defined on (0, 1)");
  }
  switch (which) {
    case 1: {
      const double s = std::asin((x - 1.0) / (x + 1.0));
      return 2.0 * (x + 1.0) / (x - 1.0) * s * s - std::log(x);
    }
    case 2: {
      const double g =
          std::log((x - 1.0 + std::sqrt(2.0 * (x * x + 1.0))) / (x + 1.0));
      return 2.0 * (x + 1.0) / (x - 1.0) * g * g -
             std::asin((x * x - 1.0) / (x * x + 1.0));
    }
    case 3: {
      const double g =
          std::log((x - 1.0 + std::sqrt(2.0 * (x * x + 1.0))) / (x + 1.0));
      return (x - 1.0) / std::sqrt((x * x + x + 1.0) / 3.0) - 2.0 * g;
    }
    default:
      throw std::invalid_argument("witness index must be 1, 2, or 3");
  }
}

double n_lower_bound_check(double x, double y) {
  const double n = mean_eval(MeanKind::NeumanSandor, x, y).value;
  const double a = mean_eval(MeanKind::Arithmetic, x, y).value;
  const double a2 = power_type_eval({MeanKind::Arithmetic, 2.0}, x, y).value;
  return n - a * a / a2;
}

}  // namespace ptmeans
