#include "irsnoma/params.hpp"

#include <cmath>
#include <stdexcept>

namespace irsnoma {

namespace {

void check_finite(std::vector<std::string>& out, const char* name, double v) {
  if (!std::isfinite(v)) out.push_back(std::string(name) + " is not finite");
}

void check_positive(std::vector<std::string>& out, const char* name, double v) {
  if (!std::isfinite(v) || v <= 0.0) out.push_back(std::string(name) + " must be > 0");
}

}  // namespace

std::vector<std::string> validate(const SystemParams& p) {
  std::vector<std::string> v;
  check_positive(v, "p_s", p.p_s);
  check_positive(v, "n0", p.n0);
  if (p.n_elems < 1) v.push_back("n_elems must be >= 1");
  if (p.m_elems < 1) v.push_back("m_elems must be >= 1");

  check_finite(v, "a1", p.a1);
  check_finite(v, "a2", p.a2);
  if (p.a1 < 0.0 || p.a2 < 0.0) v.push_back("a1, a2 must be >= 0");
  if (std::isfinite(p.a1) && std::isfinite(p.a2) && std::fabs(p.a1 + p.a2 - 1.0) > 1e-12)
    v.push_back("a1+a2 != 1");
  check_finite(v, "b1", p.b1);
  check_finite(v, "b2", p.b2);
  if (p.b1 < 0.0 || p.b2 < 0.0) v.push_back("b1, b2 must be >= 0");
  if (std::isfinite(p.b1) && std::isfinite(p.b2) && std::fabs(p.b1 + p.b2 - 1.0) > 1e-12)
    v.push_back("b1+b2 != 1");

  if (!std::isfinite(p.eta) || p.eta <= 0.0 || p.eta > 1.0) v.push_back("eta out of (0,1]");
  if (!std::isfinite(p.theta) || p.theta <= 0.0 || p.theta >= 1.0) v.push_back("theta out of (0,1)");
  if (!std::isfinite(p.beta) || p.beta < 0.0 || p.beta >= 1.0) v.push_back("beta out of [0,1)");
  if (!std::isfinite(p.zeta) || p.zeta < 0.0 || p.zeta > 1.0) v.push_back("zeta out of [0,1]");

  check_positive(v, "lambda_sr", p.lambda_sr);
  check_positive(v, "lambda_rd1", p.lambda_rd1);
  check_positive(v, "lambda_rd2", p.lambda_rd2);
  check_positive(v, "lambda_rc", p.lambda_rc);
  check_positive(v, "lambda_cr", p.lambda_cr);
  check_positive(v, "lambda_cd1", p.lambda_cd1);
  check_positive(v, "lambda_cd2", p.lambda_cd2);

  if (!std::isfinite(p.rate_main) || p.rate_main < 0.0) v.push_back("rate_main must be >= 0");
  if (!std::isfinite(p.rate_bs) || p.rate_bs < 0.0) v.push_back("rate_bs must be >= 0");

  if (p.threshold_mode == ThresholdMode::explicit_thresholds) {
    if (!p.gamma_th_d) v.push_back("gamma_th_d missing in explicit threshold mode");
    if (!p.gamma_th_c) v.push_back("gamma_th_c missing in explicit threshold mode");
    if (p.gamma_th_d && (!std::isfinite(*p.gamma_th_d) || *p.gamma_th_d < 0.0))
      v.push_back("gamma_th_d must be finite and >= 0");
    if (p.gamma_th_c && (!std::isfinite(*p.gamma_th_c) || *p.gamma_th_c < 0.0))
      v.push_back("gamma_th_c must be finite and >= 0");
  }
  return v;
}

Thresholds resolve_thresholds(const SystemParams& p) {
  if (p.threshold_mode == ThresholdMode::explicit_thresholds) {
    if (!p.gamma_th_d || !p.gamma_th_c)
      throw std::invalid_argument("resolve_thresholds: explicit mode with missing thresholds");
    return {*p.gamma_th_d, *p.gamma_th_c};
  }
  return {std::exp2(p.rate_main) - 1.0, std::exp2(p.rate_bs) - 1.0};
}

SystemParams table1_defaults() { return SystemParams{}; }

SystemParams legacy_config(SystemParams params) {
  params.beta = 0.0;
  params.zeta = 0.0;
  return params;
}

}  // namespace irsnoma
