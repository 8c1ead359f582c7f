#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cmath>
#include <random>

#include "ptmeans/jet.hpp"

using ptmeans::Jet;

namespace {

Jet random_jet(std::mt19937_64& rng, int order, bool unit_constant = false) {
  std::uniform_real_distribution<double> dist(-2.0, 2.0);
  std::vector<double> c(static_cast<size_t>(order) + 1);
  for (double& v : c) v = dist(rng);
  if (unit_constant) c[0] = 1.0 + std::abs(c[0]);
  return Jet(std::move(c));
}

void check_close(const Jet& a, const Jet& b, double tol) {
  REQUIRE(a.order() == b.order());
  for (int k = 0; k <= a.order(); ++k) {
    CAPTURE(k);
    CHECK(a[k] == doctest::Approx(b[k]).scale(1.0).epsilon(tol));
  }
}

}  // namespace

TEST_CASE("jet add/mul/scale basics") {
  // (1 + t)(1 - t) = 1 - t^2
  const Jet p = Jet::variable(1.0, 2);
  const Jet m = 1.0 - Jet::variable(0.0, 2);
  const Jet prod = p * m;
  CHECK(prod[0] == 1.0);
  CHECK(prod[1] == 0.0);
  CHECK(prod[2] == -1.0);

  // additive identity
  const Jet half = Jet::variable(1.0, 2) * 0.5 + 0.5;  // 1 + t/2
  const Jet same = half + Jet::constant(0.0, 2);
  CHECK(same[0] == 1.0);
  CHECK(same[1] == 0.5);
  CHECK(same[2] == 0.0);

  // t * t at order 4 = t^2
  const Jet t = Jet::variable(0.0, 4);
  const Jet t2 = t * t;
  for (int k = 0; k <= 4; ++k) CHECK(t2[k] == (k == 2 ? 1.0 : 0.0));
}

TEST_CASE("jet order mismatch is a usage error") {
  const Jet a = Jet::constant(1.0, 3);
  const Jet b = Jet::constant(1.0, 4);
  CHECK_THROWS_AS(a + b, std::invalid_argument);
  CHECK_THROWS_AS(a * b, std::invalid_argument);
}

TEST_CASE("jet division shifts out removable singularities") {
  const Jet t = Jet::variable(0.0, 4);

  SUBCASE("t / t = 1") {
    const Jet q = div(t, t);
    CHECK(q.order() == 3);
    CHECK(q[0] == 1.0);
    for (int k = 1; k <= 3; ++k) CHECK(q[k] == 0.0);
  }

  SUBCASE("t / ln(1+t) = 1 + t/2 - t^2/12 + ...") {
    const Jet l = ptmeans::log(Jet::variable(1.0, 4));  // t - t^2/2 + t^3/3 - ...
    const Jet q = div(t, l);
    CHECK(q.order() == 3);
    CHECK(q[0] == doctest::Approx(1.0).epsilon(1e-15));
    CHECK(q[1] == doctest::Approx(0.5).epsilon(1e-15));
    CHECK(q[2] == doctest::Approx(-1.0 / 12).epsilon(1e-15));
    CHECK(q[3] == doctest::Approx(1.0 / 24).epsilon(1e-15));
  }

  SUBCASE("1 / t is a pole") {
    CHECK_THROWS_AS(div(Jet::constant(1.0, 4), t), std::domain_error);
  }

  SUBCASE("0 / t is fine") {
    const Jet q = div(Jet::constant(0.0, 4), t);
    for (int k = 0; k <= q.order(); ++k) CHECK(q[k] == 0.0);
  }
}

TEST_CASE("elementary series") {
  SUBCASE("exp(t) = 1 + t + t^2/2 + t^3/6") {
    const Jet e = exp(Jet::variable(0.0, 3));
    CHECK(e[0] == 1.0);
    CHECK(e[1] == doctest::Approx(1.0).epsilon(1e-15));
    CHECK(e[2] == doctest::Approx(0.5).epsilon(1e-15));
    CHECK(e[3] == doctest::Approx(1.0 / 6).epsilon(1e-15));
  }

  SUBCASE("arcsin(t) to order 3 = t + t^3/6") {
    const Jet a = asin(Jet::variable(0.0, 3));
    CHECK(a[0] == 0.0);
    CHECK(a[1] == doctest::Approx(1.0).epsilon(1e-15));
    CHECK(a[2] == 0.0);
    CHECK(a[3] == doctest::Approx(1.0 / 6).epsilon(1e-15));
  }

  SUBCASE("sqrt(1+t) to order 2 = 1 + t/2 - t^2/8") {
    const Jet s = sqrt(Jet::variable(1.0, 2));
    CHECK(s[0] == 1.0);
    CHECK(s[1] == doctest::Approx(0.5).epsilon(1e-15));
    CHECK(s[2] == doctest::Approx(-1.0 / 8).epsilon(1e-15));
  }

  SUBCASE("arcsin about a nonzero center") {
    // asin(0.3 + t): a0 = asin(0.3), a1 = 1/sqrt(1 - 0.09),
    // a2 = asin''(0.3)/2 = 0.3 (1 - 0.09)^{-3/2} / 2
    const Jet a = asin(Jet::variable(0.3, 2));
    CHECK(a[0] == doctest::Approx(std::asin(0.3)).epsilon(1e-15));
    CHECK(a[1] == doctest::Approx(1.0 / std::sqrt(0.91)).epsilon(1e-14));
    CHECK(a[2] == doctest::Approx(0.15 * std::pow(0.91, -1.5)).epsilon(1e-14));
  }

  SUBCASE("domain checks") {
    CHECK_THROWS_AS(ptmeans::log(Jet::constant(-1.0, 2)), std::domain_error);
    CHECK_THROWS_AS(sqrt(Jet::constant(-1.0, 2)), std::domain_error);
    CHECK_THROWS_AS(asin(Jet::constant(1.5, 2)), std::domain_error);
  }
}

TEST_CASE("algebra laws on random jets") {
  std::mt19937_64 rng(20240817);
  for (int trial = 0; trial < 200; ++trial) {
    const Jet a = random_jet(rng, 6);
    const Jet b = random_jet(rng, 6);
    const Jet c = random_jet(rng, 6);

    check_close(a * b, b * a, 1e-14);
    check_close((a * b) * c, a * (b * c), 1e-13);

    // div(a*b, b) = a where b has a nonzero constant term
    const Jet bu = random_jet(rng, 6, /*unit_constant=*/true);
    check_close(div(a * bu, bu), a, 1e-12);
  }
}

TEST_CASE("exp/log and pow round-trips") {
  std::mt19937_64 rng(7);
  for (int trial = 0; trial < 100; ++trial) {
    const Jet g = random_jet(rng, 8, /*unit_constant=*/true);
    check_close(exp(ptmeans::log(g)), g, 1e-13);
    check_close(ptmeans::pow(g, 2.0), g * g, 1e-12);
    check_close(sqrt(g) * sqrt(g), g, 1e-13);
  }
}

TEST_CASE("odd series of a pure-odd jet stay odd") {
  std::mt19937_64 rng(99);
  std::uniform_real_distribution<double> dist(-0.4, 0.4);
  for (int trial = 0; trial < 50; ++trial) {
    std::vector<double> c(9, 0.0);
    for (size_t k = 1; k < c.size(); k += 2) c[k] = dist(rng);
    const Jet g(c);
    for (const Jet& f : {asin(g), atan(g), asinh(g)}) {
      for (int k = 0; k <= f.order(); k += 2) {
        CAPTURE(k);
        CHECK(std::abs(f[k]) < 1e-14);
      }
    }
  }
}

TEST_CASE("compose requires a zero inner constant") {
  const Jet outer = Jet::variable(1.0, 4);
  CHECK_THROWS_AS(compose(outer, Jet::constant(0.5, 4)), std::invalid_argument);
  // (1 + s) with s = t + t^2: composition is exact
  const Jet inner = Jet::variable(0.0, 4) + Jet(std::vector<double>{0, 0, 1, 0, 0});
  const Jet r = compose(outer, inner);
  CHECK(r[0] == 1.0);
  CHECK(r[1] == 1.0);
  CHECK(r[2] == 1.0);
  CHECK(r[3] == 0.0);
}
