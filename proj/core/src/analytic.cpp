#include "irsnoma/analytic.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "irsnoma/sinr.hpp"

namespace irsnoma {

namespace {

void require_threshold(double gamma_th, const char* where) {
  if (!std::isfinite(gamma_th) || gamma_th < 0.0)
    throw std::domain_error(std::string(where) + ": threshold must be finite and >= 0");
}

LogNormalParams gamma_factor(int shape, double scale) {
  const double k = static_cast<double>(shape);
  return lognormal_from_moments(k * scale, k * scale * scale);
}

LogNormalParams exp_factor(double mean) { return lognormal_from_moments(mean, mean * mean); }

// noise floor entering the hop-2 threshold: N0, plus the expected backscatter
// interference when the closed form carries it; 1 under the literal printed
// formulas (which have no N0 at all).
double hop2_noise_floor(const SystemParams& p, int user) {
  if (p.noise_normalization == NoiseNormalization::as_printed) return 1.0;
  double floor = p.n0;
  if (p.hop2_interference == Hop2Interference::on && p.zeta > 0.0)
    floor += expected_cd_interference(p, user);
  return floor;
}

OutageBreakdown two_hop_outage(const SystemParams& p, double gamma_th, double alloc_hop1_den,
                               double alloc_hop2, int user) {
  OutageBreakdown out;
  if (gamma_th == 0.0) return out;

  // hop 1: P(gamma_SR < gamma_th) through the Gamma CDF of g_sr
  if (alloc_hop1_den <= 0.0) {
    out.hop1_term = 1.0;  // SIC-feasibility ceiling: outage certain
  } else {
    const double x = gamma_th * p.n0 / (alloc_hop1_den * p.p_s);
    const double arg = (p.lognormal_variant == LognormalVariant::as_printed)
                           ? x * p.lambda_sr   // scale multiplying, as printed
                           : x / p.lambda_sr;  // conventional Gamma-scale placement
    out.hop1_term = reg_lower_gamma(static_cast<double>(p.n_elems), arg);
  }

  // hop 2: P(g_sr * g_rd < tau) under the log-normal product approximation,
  // with the random interference replaced by its mean inside the threshold
  const double tau_core =
      (1.0 - p.theta) * gamma_th / (alloc_hop2 * p.p_s * (1.0 - p.beta) * p.theta * p.eta);
  out.hop2_term = lognormal_cdf(tau_core * hop2_noise_floor(p, user), hop2_product_params(p, user));

  // 1 - (1-h1)(1-h2), written so deep-tail hop terms survive double rounding
  // and the hop1 = 1 ceiling stays exact
  out.total = std::min(out.hop1_term + (1.0 - out.hop1_term) * out.hop2_term, 1.0);
  return out;
}

}  // namespace

LogNormalParams hop2_product_params(const SystemParams& p, int user) {
  if (user != 1 && user != 2) throw std::invalid_argument("hop2_product_params: user must be 1 or 2");
  if (p.lognormal_variant == LognormalVariant::as_printed) {
    const double n = static_cast<double>(p.n_elems);
    const double mu_z = std::log(n * n / std::sqrt(n * n + n));
    const double sigma2_z = std::log(1.0 + 1.0 / n);
    return {2.0 * mu_z, 2.0 * sigma2_z};
  }
  const int hop2_shape = (p.hop2_shape == Hop2Shape::use_n) ? p.n_elems : p.m_elems;
  const double lambda_rd = (user == 1) ? p.lambda_rd1 : p.lambda_rd2;
  return lognormal_product({gamma_factor(p.n_elems, p.lambda_sr), gamma_factor(hop2_shape, lambda_rd)});
}

LogNormalParams rc_product_params(const SystemParams& p) {
  if (p.lognormal_variant == LognormalVariant::as_printed) {
    const double n = static_cast<double>(p.n_elems);
    const double mu_z = std::log(n * n / std::sqrt(n * n + 2.0 * n));
    const double sigma2_z = std::log(1.0 + 2.0 / n);
    return {2.0 * mu_z, 2.0 * sigma2_z};
  }
  return lognormal_product({gamma_factor(p.n_elems, p.lambda_sr), exp_factor(p.lambda_rc)});
}

LogNormalParams cr_product_params(const SystemParams& p) {
  if (p.lognormal_variant == LognormalVariant::as_printed) {
    const double n = static_cast<double>(p.n_elems);
    const double mu_w = std::log(n * n / std::sqrt(4.0 * n * n + 4.0 * n));
    const double sigma2_w = std::log(4.0 + 4.0 / n);
    return {2.0 * mu_w, 2.0 * sigma2_w};
  }
  return lognormal_product(
      {gamma_factor(p.n_elems, p.lambda_sr), exp_factor(p.lambda_rc), exp_factor(p.lambda_cr)});
}

OutageBreakdown op_d1(const SystemParams& p, const Thresholds& th) {
  require_threshold(th.gamma_th_d, "op_d1");
  return two_hop_outage(p, th.gamma_th_d, p.a1 - p.a2 * th.gamma_th_d, p.b1, 1);
}

OutageBreakdown op_d2(const SystemParams& p, const Thresholds& th) {
  require_threshold(th.gamma_th_d, "op_d2");
  return two_hop_outage(p, th.gamma_th_d, p.a2, p.b2, 2);
}

MainOutage op_main(const SystemParams& p, const Thresholds& th) {
  const double sum = op_d1(p, th).total + op_d2(p, th).total;
  return {sum, std::min(sum, 1.0)};
}

OutageValue op_rc(const SystemParams& p, const Thresholds& th) {
  require_threshold(th.gamma_th_c, "op_rc");
  if (th.gamma_th_c == 0.0) return {0.0, false};
  if (p.zeta <= 0.0 || p.beta >= 1.0) return {1.0, true};
  const double tau5 = th.gamma_th_c * p.n0 / (p.zeta * (1.0 - p.beta) * p.p_s);
  return {lognormal_cdf(tau5, rc_product_params(p)), false};
}

OutageValue op_cr(const SystemParams& p, const Thresholds& th) {
  require_threshold(th.gamma_th_c, "op_cr");
  if (th.gamma_th_c == 0.0) return {0.0, false};
  if (p.zeta <= 0.0 || p.beta >= 1.0 || p.theta >= 1.0) return {1.0, true};
  const double tau6 =
      th.gamma_th_c * p.n0 / (p.zeta * (1.0 - p.theta) * (1.0 - p.beta) * p.p_s);
  return {lognormal_cdf(tau6, cr_product_params(p)), false};
}

double throughput_main(const SystemParams& p, const Thresholds& th) {
  return (1.0 - op_d1(p, th).total) * p.rate_main + (1.0 - op_d2(p, th).total) * p.rate_main;
}

double throughput_bs(const SystemParams& p, const Thresholds& th) {
  return (1.0 - op_rc(p, th).value) * p.rate_bs + (1.0 - op_cr(p, th).value) * p.rate_bs;
}

}  // namespace irsnoma
