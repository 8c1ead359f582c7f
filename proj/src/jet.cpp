#include "ptmeans/jet.hpp"

#include <cmath>
#include <cstddef>
#include <stdexcept>
#include <string>

namespace ptmeans {

namespace {

void check_same_order(const Jet& a, const Jet& b) {
  if (a.order() != b.order()) {
    throw std::invalid_argument(
        "jet order mismatch: " + std::to_string(a.order()) + " vs " +
        std::to_string(b.order()));
  }
}

// Regular series division: den must have a nonzero constant term and the
// operands the same order.
Jet div_regular(const Jet& num, const Jet& den) {
  const int n = num.order();
  std::vector<double> q(static_cast<size_t>(n) + 1, 0.0);
  for (int k = 0; k <= n; ++k) {
    double acc = num[k];
    for (int j = 1; j <= k; ++j) acc -= den[j] * q[static_cast<size_t>(k - j)];
    q[static_cast<size_t>(k)] = acc / den[0];
  }
  return Jet(std::move(q));
}

Jet derivative(const Jet& a) {
  const int n = a.order();
  std::vector<double> d(static_cast<size_t>(std::max(n, 1)), 0.0);
  for (int k = 1; k <= n; ++k) d[static_cast<size_t>(k - 1)] = k * a[k];
  return Jet(std::move(d));
}

// result' = g'/w with result[0] = a0; w must have a nonzero constant term.
Jet integrate_quotient(const Jet& g, const Jet& w, double a0) {
  const int n = g.order();
  const Jet h = div_regular(derivative(g), truncate(w, std::max(n - 1, 0)));
  std::vector<double> a(static_cast<size_t>(n) + 1, 0.0);
  a[0] = a0;
  for (int k = 1; k <= n; ++k) a[static_cast<size_t>(k)] = h[k - 1] / k;
  return Jet(std::move(a));
}

}  // namespace

Jet::Jet(std::vector<double> coeffs) : coeffs_(std::move(coeffs)) {
  if (coeffs_.empty()) throw std::invalid_argument("jet needs a constant term");
}

Jet Jet::constant(double c, int order) {
  if (order < 0) throw std::invalid_argument("negative jet order");
  std::vector<double> v(static_cast<size_t>(order) + 1, 0.0);
  v[0] = c;
  return Jet(std::move(v));
}

Jet Jet::variable(double c0, int order) {
  if (order < 1) throw std::invalid_argument("variable jet needs order >= 1");
  std::vector<double> v(static_cast<size_t>(order) + 1, 0.0);
  v[0] = c0;
  v[1] = 1.0;
  return Jet(std::move(v));
}

int Jet::first_nonzero() const {
  for (size_t k = 0; k < coeffs_.size(); ++k) {
    if (std::abs(coeffs_[k]) >= kJetZeroTol) return static_cast<int>(k);
  }
  return -1;
}

Jet operator+(const Jet& a, const Jet& b) {
  check_same_order(a, b);
  std::vector<double> c = a.coeffs();
  for (size_t k = 0; k < c.size(); ++k) c[k] += b[static_cast<int>(k)];
  return Jet(std::move(c));
}

Jet operator-(const Jet& a, const Jet& b) {
  check_same_order(a, b);
  std::vector<double> c = a.coeffs();
  for (size_t k = 0; k < c.size(); ++k) c[k] -= b[static_cast<int>(k)];
  return Jet(std::move(c));
}

Jet operator*(const Jet& a, const Jet& b) {
  check_same_order(a, b);
  const int n = a.order();
  std::vector<double> c(static_cast<size_t>(n) + 1, 0.0);
  for (int i = 0; i <= n; ++i) {
    if (a[i] == 0.0) continue;
    for (int j = 0; i + j <= n; ++j) c[static_cast<size_t>(i + j)] += a[i] * b[j];
  }
  return Jet(std::move(c));
}

Jet operator-(const Jet& a) { return a * -1.0; }

Jet operator+(const Jet& a, double c) {
  std::vector<double> v = a.coeffs();
  v[0] += c;
  return Jet(std::move(v));
}
Jet operator+(double c, const Jet& a) { return a + c; }
Jet operator-(const Jet& a, double c) { return a + (-c); }
Jet operator-(double c, const Jet& a) { return (-a) + c; }

Jet operator*(const Jet& a, double s) {
  std::vector<double> v = a.coeffs();
  for (double& x : v) x *= s;
  return Jet(std::move(v));
}
Jet operator*(double s, const Jet& a) { return a * s; }
Jet operator/(const Jet& a, double s) { return a * (1.0 / s); }

Jet truncate(const Jet& a, int order) {
  if (order < 0) throw std::invalid_argument("negative jet order");
  std::vector<double> v(static_cast<size_t>(order) + 1, 0.0);
  for (int k = 0; k <= std::min(order, a.order()); ++k)
    v[static_cast<size_t>(k)] = a[k];
  return Jet(std::move(v));
}

Jet div(const Jet& num, const Jet& den) {
  check_same_order(num, den);
  const int zd = den.first_nonzero();
  if (zd < 0) throw std::domain_error("jet division by the zero series");
  const int zn = num.first_nonzero();
  if (zn >= 0 && zn < zd) {
    throw std::domain_error(
        "pole: numerator vanishes to order " + std::to_string(zn) +
        " but denominator to order " + std::to_string(zd));
  }
  const int n = num.order() - zd;
  std::vector<double> ns(static_cast<size_t>(n) + 1), ds(static_cast<size_t>(n) + 1);
  for (int k = 0; k <= n; ++k) {
    ns[static_cast<size_t>(k)] = num[k + zd];
    ds[static_cast<size_t>(k)] = den[k + zd];
  }
  return div_regular(Jet(std::move(ns)), Jet(std::move(ds)));
}

Jet compose(const Jet& outer, const Jet& inner) {
  check_same_order(outer, inner);
  if (std::abs(inner[0]) >= kJetZeroTol) {
    throw std::invalid_argument("compose requires a zero inner constant term");
  }
  const int n = outer.order();
  Jet r = Jet::constant(outer[n], n);
  for (int k = n - 1; k >= 0; --k) r = r * inner + outer[k];
  return r;
}

Jet exp(const Jet& g) {
  const int n = g.order();
  std::vector<double> e(static_cast<size_t>(n) + 1, 0.0);
  e[0] = std::exp(g[0]);
  for (int k = 1; k <= n; ++k) {
    double acc = 0.0;
    for (int j = 1; j <= k; ++j) acc += j * g[j] * e[static_cast<size_t>(k - j)];
    e[static_cast<size_t>(k)] = acc / k;
  }
  return Jet(std::move(e));
}

Jet log(const Jet& g) {
  if (!(g[0] > 0.0)) throw std::domain_error("jet log needs a positive constant term");
  const int n = g.order();
  std::vector<double> l(static_cast<size_t>(n) + 1, 0.0);
  l[0] = std::log(g[0]);
  for (int k = 1; k <= n; ++k) {
    double acc = k * g[k];
    for (int j = 1; j < k; ++j) acc -= j * l[static_cast<size_t>(j)] * g[k - j];
    l[static_cast<size_t>(k)] = acc / (k * g[0]);
  }
  return Jet(std::move(l));
}

Jet sqrt(const Jet& g) {
  if (!(g[0] > 0.0)) throw std::domain_error("jet sqrt needs a positive constant term");
  const int n = g.order();
  std::vector<double> s(static_cast<size_t>(n) + 1, 0.0);
  s[0] = std::sqrt(g[0]);
  for (int k = 1; k <= n; ++k) {
    double acc = g[k];
    for (int j = 1; j < k; ++j) acc -= s[static_cast<size_t>(j)] * s[static_cast<size_t>(k - j)];
    s[static_cast<size_t>(k)] = acc / (2.0 * s[0]);
  }
  return Jet(std::move(s));
}

Jet asin(const Jet& g) {
  if (!(std::abs(g[0]) < 1.0)) {
    throw std::domain_error("jet asin needs |constant term| < 1");
  }
  return integrate_quotient(g, sqrt(1.0 - g * g), std::asin(g[0]));
}

Jet atan(const Jet& g) {
  return integrate_quotient(g, 1.0 + g * g, std::atan(g[0]));
}

Jet asinh(const Jet& g) {
  return integrate_quotient(g, sqrt(1.0 + g * g), std::asinh(g[0]));
}

Jet pow(const Jet& g, double q) { return exp(q * log(g)); }

}  // namespace ptmeans
