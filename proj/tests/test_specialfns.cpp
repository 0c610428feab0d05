#include <doctest.h>

#include <cmath>
#include <random>
#include <stdexcept>

#include "irsnoma/specialfns.hpp"
#include "oracles.hpp"

using namespace irsnoma;

TEST_CASE("reg_lower_gamma pinned values") {
  CHECK(reg_lower_gamma(1.0, std::log(2.0)) == doctest::Approx(0.5).epsilon(1e-14));
  CHECK(reg_lower_gamma(4.0, 0.0) == 0.0);
  // frozen from the 34-digit series oracle
  CHECK(reg_lower_gamma(4.0, 3.5) == doctest::Approx(0.46336733209921497644).epsilon(1e-14));
  CHECK(reg_lower_gamma(2.0, 1.0) == doctest::Approx(0.26424111765711535681).epsilon(1e-14));
  CHECK(reg_lower_gamma(8.0, 10.0) == doctest::Approx(0.77977935339830105976).epsilon(1e-14));
  CHECK(reg_lower_gamma(16.0, 12.0) == doctest::Approx(0.15558434754981681604).epsilon(1e-14));
}

TEST_CASE("reg_lower_gamma domain errors") {
  CHECK_THROWS_AS(reg_lower_gamma(0.0, 1.0), std::domain_error);
  CHECK_THROWS_AS(reg_lower_gamma(-2.0, 1.0), std::domain_error);
  CHECK_THROWS_AS(reg_lower_gamma(1.0, -1e-9), std::domain_error);
  CHECK_THROWS_AS(reg_lower_gamma(1.0, std::nan("")), std::domain_error);
  CHECK_THROWS_AS(reg_lower_gamma(std::numeric_limits<double>::infinity(), 1.0), std::domain_error);
}

TEST_CASE("reg_lower_gamma matches the shape-1 exponential form") {
  for (double x = 0.0; x <= 50.0; x += 0.37) {
    CHECK(reg_lower_gamma(1.0, x) == doctest::Approx(-std::expm1(-x)).epsilon(1e-13));
  }
}

TEST_CASE("reg_lower_gamma vs high-precision oracle") {
  for (const double shape : {1.0, 2.0, 4.0, 8.0, 16.0}) {
    for (int i = 0; i < 40; ++i) {
      const double x = 0.01 * std::pow(50.0 / 0.01, i / 39.0);
      const double ref = irsnoma::testing::reg_lower_gamma_oracle(shape, x);
      const double got = reg_lower_gamma(shape, x);
      CHECK(std::fabs(got - ref) <= 1e-12 * std::max(ref, 1e-300));
    }
  }
}

TEST_CASE("reg_lower_gamma monotone in x, antitone in shape") {
  const double shapes[] = {0.5, 1.0, 2.0, 4.0, 8.0, 16.0};
  for (const double a : shapes) {
    double prev = 0.0;
    for (double x = 0.05; x < 30.0; x *= 1.35) {
      const double p = reg_lower_gamma(a, x);
      CHECK(p >= prev);
      CHECK(p >= 0.0);
      CHECK(p <= 1.0);
      prev = p;
    }
  }
  for (double x = 0.05; x < 30.0; x *= 1.6) {
    double prev = 2.0;
    for (const double a : shapes) {
      const double p = reg_lower_gamma(a, x);
      CHECK(p <= prev + 1e-15);
      prev = p;
    }
  }
}

TEST_CASE("std_normal_cdf symmetry and pinned values") {
  CHECK(std_normal_cdf(0.0) == 0.5);
  CHECK(std_normal_cdf(1.959964) == doctest::Approx(0.9750000009035575957).epsilon(1e-13));
  CHECK(std_normal_cdf(-3.0) == doctest::Approx(0.0013498980316300945267).epsilon(1e-13));
  for (double x = -8.0; x <= 8.0; x += 0.173) {
    CHECK(std::fabs(std_normal_cdf(x) + std_normal_cdf(-x) - 1.0) <= 1e-15);
  }
  CHECK_THROWS_AS(std_normal_cdf(std::nan("")), std::domain_error);
}

TEST_CASE("std_normal_cdf vs quadrature") {
  for (double x = -8.0; x <= 8.0; x += 0.5) {
    CHECK(std::fabs(std_normal_cdf(x) - irsnoma::testing::std_normal_cdf_oracle(x)) <= 1e-10);
  }
}

TEST_CASE("lognormal_from_moments pinned parameterizations") {
  const auto unit = lognormal_from_moments(1.0, 1.0);
  CHECK(unit.mu == doctest::Approx(-0.34657359027997265471).epsilon(1e-15));
  CHECK(unit.sigma2 == doctest::Approx(0.69314718055994530942).epsilon(1e-15));

  // Gamma(N,1) moments for N = 4
  const auto g4 = lognormal_from_moments(4.0, 4.0);
  CHECK(g4.mu == doctest::Approx(1.274722585462785741).epsilon(1e-15));       // ln(16/sqrt(20))
  CHECK(g4.sigma2 == doctest::Approx(0.22314355131420975577).epsilon(1e-15));  // ln(1.25)

  CHECK_THROWS_AS(lognormal_from_moments(0.0, 1.0), std::domain_error);
  CHECK_THROWS_AS(lognormal_from_moments(1.0, -1.0), std::domain_error);
}

TEST_CASE("lognormal moment round trip") {
  std::mt19937_64 rng(7);
  std::uniform_real_distribution<double> um(0.01, 50.0);
  for (int i = 0; i < 200; ++i) {
    const double m = um(rng);
    const double v = um(rng);
    const auto p = lognormal_from_moments(m, v);
    CHECK(lognormal_mean(p) == doctest::Approx(m).epsilon(1e-12));
    CHECK(lognormal_variance(p) == doctest::Approx(v).epsilon(1e-12));
  }
}

TEST_CASE("lognormal_product composition") {
  const LogNormalParams a{0.3, 0.7};
  CHECK(lognormal_product({a}).mu == a.mu);
  CHECK(lognormal_product({a}).sigma2 == a.sigma2);

  const auto twice = lognormal_product({a, a});
  CHECK(twice.mu == 2.0 * a.mu);
  CHECK(twice.sigma2 == 2.0 * a.sigma2);

  // Gamma(4,1) factor and two unit-exponential factors compose to the printed
  // three-factor parameterization ln(N^2/sqrt(4N^2+4N)), ln(4+4/N)
  const auto w = lognormal_product(
      {lognormal_from_moments(4.0, 4.0), lognormal_from_moments(1.0, 1.0), lognormal_from_moments(1.0, 1.0)});
  CHECK(w.mu == doctest::Approx(0.58157540490284043153).epsilon(1e-14));
  CHECK(w.sigma2 == doctest::Approx(1.6094379124341003746).epsilon(1e-14));

  CHECK_THROWS_AS(lognormal_product({}), std::invalid_argument);
}

TEST_CASE("lognormal_product is order independent") {
  const LogNormalParams f1{0.11, 0.3};
  const LogNormalParams f2{-2.5, 1.2};
  const LogNormalParams f3{1.75, 0.04};
  const auto a = lognormal_product({f1, f2, f3});
  const auto b = lognormal_product({f3, f1, f2});
  CHECK(a.mu == doctest::Approx(b.mu).epsilon(1e-15));
  CHECK(a.sigma2 == doctest::Approx(b.sigma2).epsilon(1e-15));
}

TEST_CASE("lognormal_cdf basics") {
  const LogNormalParams p{0.4, 0.9};
  CHECK(lognormal_cdf(0.0, p) == 0.0);
  CHECK(lognormal_cdf(-3.0, p) == 0.0);
  CHECK(lognormal_cdf(std::exp(p.mu), p) == doctest::Approx(0.5).epsilon(1e-14));
  CHECK(lognormal_cdf(1e300, p) == doctest::Approx(1.0));
}
