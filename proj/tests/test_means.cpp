#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <array>
#include <cmath>
#include <iterator>
#include <limits>
#include <random>

#include "oracle/oracle_values.hpp"
#include "ptmeans/means.hpp"

using namespace ptmeans;

namespace {

double rel_err(double got, double want) {
  return std::abs(got - want) / std::abs(want);
}

// Log-uniform sample in [lo, hi].
double sample_log(std::mt19937_64& rng, double lo, double hi) {
  std::uniform_real_distribution<double> dist(std::log(lo), std::log(hi));
  return std::exp(dist(rng));
}

}  // namespace

TEST_CASE("mean_eval spec examples") {
  CHECK(mean_eval(MeanKind::Arithmetic, 1.0, 3.0).value == 2.0);
  CHECK(mean_eval(MeanKind::SeiffertFirst, 5.0, 5.0).value == 5.0);  // exact
  CHECK(rel_err(mean_eval(MeanKind::Logarithmic, 1.0, 2.0).value,
                1.4426950408889634074) < 1e-15);  // 1/ln 2
  CHECK(mean_eval(MeanKind::Geometric, 4.0, 9.0).value == 6.0);
}

TEST_CASE("mean_eval rejects nonpositive and non-finite input") {
  CHECK_THROWS_AS(mean_eval(MeanKind::Arithmetic, -1.0, 2.0), std::domain_error);
  CHECK_THROWS_AS(mean_eval(MeanKind::Logarithmic, 0.0, 2.0), std::domain_error);
  CHECK_THROWS_AS(mean_eval(MeanKind::Geometric, 1.0,
                            std::numeric_limits<double>::infinity()),
                  std::domain_error);
  CHECK_THROWS_AS(mean_eval(MeanKind::Geometric, 1.0,
                            std::numeric_limits<double>::quiet_NaN()),
                  std::domain_error);
}

TEST_CASE("mean_eval matches the 60-digit oracle across regimes") {
  struct Regime {
    double a, b;
    const std::array<double, 10>& want;
    double tol;
  };
  const Regime regimes[] = {
      {1.0, 2.0, oracle::kMeansAt_1_2, 1e-14},
      {1.0 + 1e-9, 1.0, oracle::kMeansAt_NearDiag, 1e-13},  // near-diagonal
      {1.0 + 1e-13, 1.0, oracle::kMeansAt_Tiny, 1e-13},
      {1e-12, 1.0, oracle::kMeansAt_NearEnd, 1e-13},        // near-endpoint
      {1e-3, 1.0, oracle::kMeansAt_1e3, 1e-13},
      {0.37, 1.0, oracle::kMeansAt_037, 1e-14},
      {0.981, 1.0, oracle::kMeansAt_981, 1e-13},  // just inside the series cut
      {0.979, 1.0, oracle::kMeansAt_979, 1e-13},  // just outside it
  };
  for (const Regime& r : regimes) {
    for (size_t i = 0; i < kAllMeanKinds.size(); ++i) {
      CAPTURE(r.a);
      CAPTURE(mean_tag(kAllMeanKinds[i]));
      const double got = mean_eval(kAllMeanKinds[i], r.a, r.b).value;
      CHECK(rel_err(got, r.want[i]) < r.tol);
    }
  }
}

TEST_CASE("mean property, symmetry, homogeneity, reflexivity") {
  std::mt19937_64 rng(424242);
  for (int trial = 0; trial < 400; ++trial) {
    const double a = sample_log(rng, 1e-6, 1e6);
    const double b = sample_log(rng, 1e-6, 1e6);
    const double t = sample_log(rng, 1e-3, 1e3);
    for (MeanKind kind : kAllMeanKinds) {
      CAPTURE(mean_tag(kind));
      CAPTURE(a);
      CAPTURE(b);
      const double m = mean_eval(kind, a, b).value;
      CHECK(m >= std::min(a, b));
      CHECK(m <= std::max(a, b));
      CHECK(rel_err(mean_eval(kind, b, a).value, m) < 1e-14);
      CHECK(rel_err(mean_eval(kind, t * a, t * b).value, t * m) < 1e-12);
      // reflexivity is bit-exact
      CHECK(mean_eval(kind, a, a).value == a);
    }
  }
}

TEST_CASE("known chain ordering at (1,2): G < L < P < A < N < T < A_2") {
  const double g = mean_eval(MeanKind::Geometric, 1, 2).value;
  const double l = mean_eval(MeanKind::Logarithmic, 1, 2).value;
  const double p = mean_eval(MeanKind::SeiffertFirst, 1, 2).value;
  const double a = mean_eval(MeanKind::Arithmetic, 1, 2).value;
  const double n = mean_eval(MeanKind::NeumanSandor, 1, 2).value;
  const double t = mean_eval(MeanKind::SeiffertSecond, 1, 2).value;
  const double a2 = power_type_eval({MeanKind::Arithmetic, 2.0}, 1, 2).value;
  CHECK(g < l);
  CHECK(l < p);
  CHECK(p < a);
  CHECK(a < n);
  CHECK(n < t);
  CHECK(t < a2);
}

TEST_CASE("power_type_eval spec examples") {
  CHECK(rel_err(power_type_eval({MeanKind::Arithmetic, 2.0}, 1, 7).value, 5.0) <
        1e-13);
  CHECK(power_type_eval({MeanKind::PowerExponential, 0.0}, 4, 9).value == 6.0);
  const double n12 = power_type_eval({MeanKind::NeumanSandor, 1.0}, 1, 2).value;
  CHECK(n12 > 1.0);
  CHECK(n12 < 2.0);
  CHECK(rel_err(n12, mean_eval(MeanKind::NeumanSandor, 1, 2).value) < 1e-14);
}

TEST_CASE("power_type_eval matches oracle anchors at (1,2)") {
  const PowerTypeSpec specs[] = {
      {MeanKind::NeumanSandor, 0.5},   {MeanKind::PowerExponential, 1.0 / 3},
      {MeanKind::Arithmetic, 2.0 / 3}, {MeanKind::SeiffertSecond, 0.4},
      {MeanKind::Heronian, 2.0},       {MeanKind::Logarithmic, 2.0},
      {MeanKind::ExponentialGeometric, 0.5},
  };
  for (size_t i = 0; i < std::size(specs); ++i) {
    CAPTURE(format_spec(specs[i]));
    CHECK(rel_err(power_type_eval(specs[i], 1, 2).value,
                  oracle::kPowerAnchorsAt_1_2[i]) < 1e-13);
  }
}

TEST_CASE("power_type_eval error cases") {
  CHECK_THROWS_AS(power_type_eval({MeanKind::Arithmetic, 1.0}, -1, 2),
                  std::domain_error);
  CHECK_THROWS_AS(
      power_type_eval(
          {MeanKind::Arithmetic, std::numeric_limits<double>::infinity()}, 1, 2),
      std::domain_error);
  CHECK_THROWS_AS(
      power_type_eval(
          {MeanKind::Arithmetic, std::numeric_limits<double>::quiet_NaN()}, 1, 2),
      std::domain_error);
}

TEST_CASE("power-type consistency: p = 1 equals the base mean") {
  std::mt19937_64 rng(11);
  for (int trial = 0; trial < 100; ++trial) {
    const double a = sample_log(rng, 0.01, 100.0);
    const double b = sample_log(rng, 0.01, 100.0);
    for (MeanKind kind : kAllMeanKinds) {
      CAPTURE(mean_tag(kind));
      CHECK(rel_err(power_type_eval({kind, 1.0}, a, b).value,
                    mean_eval(kind, a, b).value) < 1e-14);
    }
  }
}

TEST_CASE("power-type continuity at p -> 0") {
  // The transform is smooth in p with derivative O((ln a/b)^2) at 0, so
  // ratios near 1 keep the p = +-1e-3 values within 1e-5 of G.
  std::mt19937_64 rng(12);
  for (int trial = 0; trial < 50; ++trial) {
    const double a = sample_log(rng, 0.5, 2.0);
    const double b = a * sample_log(rng, 1.02, 1.10);
    const double g = std::sqrt(a) * std::sqrt(b);
    for (MeanKind kind : kAllMeanKinds) {
      CAPTURE(mean_tag(kind));
      CHECK(rel_err(power_type_eval({kind, 1e-3}, a, b).value, g) < 1e-5);
      CHECK(rel_err(power_type_eval({kind, -1e-3}, a, b).value, g) < 1e-5);
    }
  }
}

TEST_CASE("power_type_eval stays finite for large |p| and wide ratios") {
  for (MeanKind kind : kAllMeanKinds) {
    CAPTURE(mean_tag(kind));
    for (double p : {1e3, -1e3, 250.0, -250.0}) {
      const double v = power_type_eval({kind, p}, 1e-8, 1e8).value;
      CHECK(std::isfinite(v));
      CHECK(v >= 1e-8);
      CHECK(v <= 1e8);
    }
  }
  // G_p is G for every p
  CHECK(rel_err(power_type_eval({MeanKind::Geometric, 700.0}, 1e-6, 1e6).value,
                1.0) < 1e-12);

  // oracle anchors at large |p|, including the regime where the
  // transformed ratio underflows the double range
  struct Extreme {
    PowerTypeSpec spec;
    double a, b;
  };
  const Extreme extremes[] = {
      {{MeanKind::SeiffertSecond, 250.0}, 2.0, 3.0},
      {{MeanKind::PowerExponential, -400.0}, 1.5, 0.7},
      {{MeanKind::Logarithmic, 1000.0}, 1.0, 1.02},
      {{MeanKind::NeumanSandor, -1000.0}, 5.0, 4.99},
      {{MeanKind::Heronian, 900.0}, 1.0, 8.0},
      {{MeanKind::Logarithmic, -800.0}, 1.0, 9.0},
  };
  for (size_t i = 0; i < std::size(extremes); ++i) {
    CAPTURE(format_spec(extremes[i].spec));
    CHECK(rel_err(
              power_type_eval(extremes[i].spec, extremes[i].a, extremes[i].b).value,
              oracle::kPowerExtremes[i]) < 1e-12);
  }
}

TEST_CASE("endpoint limits") {
  CHECK(rel_err(*endpoint_limit({MeanKind::NeumanSandor, 1.0}),
                oracle::kEndpointN) < 1e-15);
  CHECK(rel_err(*endpoint_limit({MeanKind::SeiffertSecond, 0.8}),
                oracle::kEndpointT45) < 1e-15);
  CHECK(*endpoint_limit({MeanKind::Heronian, 1.0}) == doctest::Approx(1.0 / 3).epsilon(1e-15));
  CHECK(*endpoint_limit({MeanKind::Geometric, 2.0}) == 0.0);
  CHECK(*endpoint_limit({MeanKind::Logarithmic, 0.5}) == 0.0);
  CHECK(rel_err(*endpoint_limit({MeanKind::Heronian, 2.0}), oracle::kEndpointHe2) < 1e-15);

  // p <= 0 is flagged not-available rather than guessed
  CHECK_FALSE(endpoint_limit({MeanKind::Arithmetic, 0.0}).has_value());
  CHECK_FALSE(endpoint_limit({MeanKind::NeumanSandor, -1.0}).has_value());

  // Cross-check the closed-form table against direct evaluation at
  // x = 1e-12; the slowest approach to the limit is O(sqrt x).
  for (MeanKind kind : kAllMeanKinds) {
    CAPTURE(mean_tag(kind));
    const double direct = mean_eval(kind, 1e-12, 1.0).value;
    const double limit = endpoint_limit_base(kind);
    if (limit == 0.0) {
      CHECK(direct < 1e-1);
    } else {
      CHECK(std::abs(direct - limit) < 1e-6);
    }
  }
}

TEST_CASE("diagonal weights are (1/2, 1/2) for every kind") {
  for (MeanKind kind : kAllMeanKinds) {
    CAPTURE(mean_tag(kind));
    const DiagonalWeights w = diagonal_weights(kind);
    CHECK(std::abs(w.wx - 0.5) < 1e-9);
    CHECK(std::abs(w.wy - 0.5) < 1e-9);
    CHECK(std::abs(w.wx + w.wy - 1.0) < 1e-9);
    CHECK(w.wx > 0.0);
    CHECK(w.wx < 1.0);
    CHECK(w.wy > 0.0);
    CHECK(w.wy < 1.0);
  }
}

TEST_CASE("rescaling identity residual") {
  CHECK(rescaling_identity_residual({MeanKind::Arithmetic, 1.0}, 2.0, 1, 3) <=
        1e-10);
  CHECK(rescaling_identity_residual({MeanKind::NeumanSandor, 0.5}, 2.0, 1, 2) <=
        1e-10);
  CHECK(rescaling_identity_residual({MeanKind::PowerExponential, 1.0 / 3}, 3.0,
                                    2, 5) <= 1e-10);

  std::mt19937_64 rng(31337);
  std::uniform_int_distribution<size_t> pick(0, kAllMeanKinds.size() - 1);
  std::uniform_real_distribution<double> sign(-1.0, 1.0);
  for (int trial = 0; trial < 200; ++trial) {
    const MeanKind kind = kAllMeanKinds[pick(rng)];
    const double p = std::copysign(sample_log(rng, 0.2, 4.0), sign(rng));
    const double t = std::copysign(sample_log(rng, 0.25, 3.0), sign(rng));
    const double a = sample_log(rng, 0.05, 20.0);
    const double b = sample_log(rng, 0.05, 20.0);
    CAPTURE(mean_tag(kind));
    CAPTURE(p);
    CAPTURE(t);
    CAPTURE(a);
    CAPTURE(b);
    CHECK(rescaling_identity_residual({kind, p}, t, a, b) <= 1e-10);
  }
}

TEST_CASE("spec parsing and formatting") {
  auto spec = parse_spec("N:0.5");
  REQUIRE(spec.has_value());
  CHECK(spec->kind == MeanKind::NeumanSandor);
  CHECK(spec->p == 0.5);

  spec = parse_spec("A:2/3");
  REQUIRE(spec.has_value());
  CHECK(spec->kind == MeanKind::Arithmetic);
  CHECK(spec->p == doctest::Approx(2.0 / 3).epsilon(1e-16));

  spec = parse_spec("He");
  REQUIRE(spec.has_value());
  CHECK(spec->kind == MeanKind::Heronian);
  CHECK(spec->p == 1.0);

  CHECK_FALSE(parse_spec("Q").has_value());
  CHECK_FALSE(parse_spec("A:").has_value());
  CHECK_FALSE(parse_spec("A:1/0").has_value());
  CHECK_FALSE(parse_spec("A:x").has_value());

  CHECK(format_spec({MeanKind::NeumanSandor, 0.5}) == "N:0.5");
  CHECK(format_spec({MeanKind::Heronian, 1.0}) == "He");
}
