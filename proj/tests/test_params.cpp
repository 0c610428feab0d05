#include <doctest.h>

#include <stdexcept>

#include <cmath>
#include <limits>

#include "irsnoma/params.hpp"

using namespace irsnoma;

namespace {

bool mentions(const std::vector<std::string>& violations, const std::string& needle) {
  for (const auto& v : violations)
    if (v.find(needle) != std::string::npos) return true;
  return false;
}

}  // namespace

TEST_CASE("table1 defaults validate clean") {
  const SystemParams p = table1_defaults();
  CHECK(p.n_elems == 4);
  CHECK(p.m_elems == 4);
  CHECK(p.eta == 0.7);
  CHECK(p.theta == 0.5);
  CHECK(p.beta == 0.7);
  CHECK(p.zeta == 0.3);
  CHECK(p.rate_main == 2.0);
  CHECK(p.rate_bs == 0.5);
  CHECK(validate(p).empty());
}

TEST_CASE("allocation constraint violations are reported by name") {
  SystemParams p = table1_defaults();
  p.a1 = 0.8;
  p.a2 = 0.3;
  const auto v = validate(p);
  REQUIRE(!v.empty());
  CHECK(mentions(v, "a1+a2"));
}

TEST_CASE("boundary violations") {
  SystemParams p = table1_defaults();
  p.theta = 0.0;
  CHECK(mentions(validate(p), "theta"));
  p = table1_defaults();
  p.theta = 1.0;
  CHECK(mentions(validate(p), "theta"));
  p = table1_defaults();
  p.beta = 1.0;
  CHECK(mentions(validate(p), "beta"));
  p = table1_defaults();
  p.eta = 0.0;
  CHECK(mentions(validate(p), "eta"));
  p = table1_defaults();
  p.zeta = -0.1;
  CHECK(mentions(validate(p), "zeta"));
  p = table1_defaults();
  p.n_elems = 0;
  CHECK(mentions(validate(p), "n_elems"));
}

TEST_CASE("validate is total on non-finite input") {
  SystemParams p = table1_defaults();
  p.p_s = std::numeric_limits<double>::quiet_NaN();
  p.lambda_rc = std::numeric_limits<double>::infinity();
  p.a1 = std::numeric_limits<double>::quiet_NaN();
  const auto v = validate(p);
  CHECK(v.size() >= 3);
}

TEST_CASE("multiple violations accumulate") {
  SystemParams p = table1_defaults();
  p.theta = 0.0;
  p.b1 = 0.9;  // b1+b2 != 1
  p.lambda_sr = -1.0;
  CHECK(validate(p).size() >= 3);
}

TEST_CASE("resolve_thresholds from rates") {
  SystemParams p = table1_defaults();
  const Thresholds th = resolve_thresholds(p);
  CHECK(th.gamma_th_d == doctest::Approx(3.0).epsilon(1e-15));
  CHECK(th.gamma_th_c == doctest::Approx(0.4142135623730950488).epsilon(1e-15));
}

TEST_CASE("resolve_thresholds explicit pass-through") {
  SystemParams p = table1_defaults();
  p.threshold_mode = ThresholdMode::explicit_thresholds;
  p.gamma_th_d = 3.0;
  p.gamma_th_c = 0.75;
  const Thresholds th = resolve_thresholds(p);
  CHECK(th.gamma_th_d == 3.0);
  CHECK(th.gamma_th_c == 0.75);
}

TEST_CASE("explicit mode with missing thresholds") {
  SystemParams p = table1_defaults();
  p.threshold_mode = ThresholdMode::explicit_thresholds;
  p.gamma_th_d = 3.0;
  CHECK_THROWS_AS(resolve_thresholds(p), std::invalid_argument);
  CHECK(!validate(p).empty());
}

TEST_CASE("threshold map strictly increasing in rate") {
  SystemParams p = table1_defaults();
  double prev_d = -1.0;
  double prev_c = -1.0;
  for (double r = 0.1; r <= 8.0; r += 0.1) {
    p.rate_main = r;
    p.rate_bs = r / 2.0;
    const Thresholds th = resolve_thresholds(p);
    CHECK(th.gamma_th_d > prev_d);
    CHECK(th.gamma_th_c > prev_c);
    prev_d = th.gamma_th_d;
    prev_c = th.gamma_th_c;
  }
}

TEST_CASE("legacy configuration") {
  const SystemParams legacy = legacy_config(table1_defaults());
  CHECK(legacy.beta == 0.0);
  CHECK(legacy.zeta == 0.0);
  CHECK(legacy.eta == 0.7);
  CHECK(validate(legacy).empty());
}
