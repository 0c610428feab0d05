#include "irsnoma/sinr.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace irsnoma {

double harvested_energy(const SystemParams& p, double g_sr) {
  return p.eta * (1.0 - p.beta) * p.p_s * g_sr * p.theta;
}

double relay_power(const SystemParams& p, double g_sr) {
  return harvested_energy(p, g_sr) / (1.0 - p.theta);
}

double expected_relay_power(const SystemParams& p) {
  return (1.0 - p.beta) * p.eta * p.p_s * (p.theta / (1.0 - p.theta)) *
         static_cast<double>(p.n_elems) * p.lambda_sr;
}

double expected_cd_interference(const SystemParams& p, int user) {
  if (user != 1 && user != 2) throw std::invalid_argument("expected_cd_interference: user must be 1 or 2");
  const double lambda_cd = (user == 1) ? p.lambda_cd1 : p.lambda_cd2;
  return p.zeta * std::sqrt(expected_relay_power(p)) * p.lambda_rc * lambda_cd;
}

LinkSinrs compute_sinrs(const SystemParams& p, const ChannelRealization& ch) {
  LinkSinrs s;
  s.e_r = harvested_energy(p, ch.g_sr);
  s.p_r = relay_power(p, ch.g_sr);

  s.snr_sr_x1 = p.a1 * p.p_s * ch.g_sr / (p.a2 * p.p_s * ch.g_sr + p.n0);
  s.snr_sr_x2 = p.a2 * p.p_s * ch.g_sr / p.n0;

  // amplitude-domain backscatter interference, kept exactly as printed
  const double sqrt_pr = std::sqrt(s.p_r);
  const double i_cd1 = p.zeta * sqrt_pr * ch.g_rc * ch.g_cd1;
  const double i_cd2 = p.zeta * sqrt_pr * ch.g_rc * ch.g_cd2;
  const bool interf = p.hop2_interference == Hop2Interference::on;

  if (p.eq15_variant == Eq15Variant::as_printed) {
    const double num = p.b2 * s.p_r * ch.g_rd1;
    s.snr_rd1_x2 = num / (num + p.n0);
  } else {
    s.snr_rd1_x2 = p.b2 * s.p_r * ch.g_rd1 /
                   (p.b1 * s.p_r * ch.g_rd1 + (interf ? i_cd1 : 0.0) + p.n0);
  }
  s.snr_rd1_x1 = p.b1 * s.p_r * ch.g_rd1 / (p.n0 + (interf ? i_cd1 : 0.0));
  s.snr_rd2_x2 = p.b2 * s.p_r * ch.g_rd2 / (p.n0 + i_cd2);

  switch (p.rc_prefactor) {
    case RcPrefactor::eq10:
      s.snr_rc_bs = p.beta * p.zeta * p.p_s * ch.g_sr * ch.g_rc / p.n0;
      break;
    case RcPrefactor::appendix_b:
      s.snr_rc_bs = p.zeta * (1.0 - p.beta) * p.p_s * ch.g_sr * ch.g_rc / p.n0;
      break;
  }

  const double triple = p.p_s * ch.g_sr * ch.g_rc * ch.g_cr / p.n0;
  switch (p.cr_prefactor) {
    case CrPrefactor::eq21:
      s.snr_cr_bs = p.eta * p.zeta * triple;
      break;
    case CrPrefactor::appendix_b:
      s.snr_cr_bs = (1.0 - p.beta) * p.zeta * (1.0 - p.theta) * p.a1 * triple;
      break;
    case CrPrefactor::eq35:
      s.snr_cr_bs = (1.0 - p.beta) * p.zeta * (1.0 - p.theta) * triple;
      break;
  }

  s.e2e_d1 = std::min(s.snr_sr_x1, s.snr_rd1_x1);
  s.e2e_d2 = std::min(s.snr_sr_x2, s.snr_rd2_x2);
  return s;
}

}  // namespace irsnoma
