#include "ptmeans/series.hpp"

#include <stdexcept>

namespace ptmeans {

namespace {

// t as a jet of the given order.
Jet t_jet(int order) { return Jet::variable(0.0, order); }

}  // namespace

Jet mean_series(MeanKind kind, int order) {
  if (order < 2) throw std::invalid_argument("mean_series needs order >= 2");
  const int n = order;
  // Quotient means divide out one power of t (a removable singularity),
  // so they are built one order higher.
  const int m = n + 1;
  const Jet x_n = Jet::variable(1.0, n);  // 1 + t
  const Jet x_m = Jet::variable(1.0, m);
  switch (kind) {
    case MeanKind::Arithmetic:
      return Jet::variable(1.0, n) * 0.5 + 0.5;
    case MeanKind::Geometric:
      return sqrt(x_n);
    case MeanKind::Heronian:
      return (Jet::variable(2.0, n) + sqrt(x_n)) / 3.0;
    case MeanKind::Logarithmic:
      // t / ln(1+t)
      return div(t_jet(m), log(x_m));
    case MeanKind::Identric:
      // exp((1+t)ln(1+t)/t - 1)
      return exp(div(x_m * log(x_m), t_jet(m)) - 1.0);
    case MeanKind::SeiffertFirst:
      return div(t_jet(m), 2.0 * asin(div(t_jet(m), Jet::variable(2.0, m))));
    case MeanKind::SeiffertSecond:
      return div(t_jet(m), 2.0 * atan(div(t_jet(m), Jet::variable(2.0, m))));
    case MeanKind::NeumanSandor:
      return div(t_jet(m), 2.0 * asinh(div(t_jet(m), Jet::variable(2.0, m))));
    case MeanKind::PowerExponential:
      // exp((1+t)ln(1+t)/(2+t))
      return exp(div(x_n * log(x_n), Jet::variable(2.0, n)));
    case MeanKind::ExponentialGeometric: {
      // I * exp(1 - x/L^2), with G(x,1)^2 = x.
      const Jet l = div(t_jet(m), log(x_m));  // order n
      const Jet w = 1.0 - div(x_n, l * l);
      return mean_series(MeanKind::Identric, n) * exp(w);
    }
  }
  throw std::invalid_argument("unknown mean kind");
}

Jet power_type_series(const PowerTypeSpec& spec, int order) {
  if (spec.p == 0.0) {
    throw std::invalid_argument(
        "power_type_series is unsupported at p = 0; M_0 is sqrt(1+t)");
  }
  const Jet inner = pow(Jet::variable(1.0, order), spec.p) - 1.0;
  const Jet composed = compose(mean_series(spec.kind, order), inner);
  return pow(composed, 1.0 / spec.p);
}

}  // namespace ptmeans
