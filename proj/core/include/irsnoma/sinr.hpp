#pragma once

#include "irsnoma/channel.hpp"
#include "irsnoma/params.hpp"

namespace irsnoma {

/// Every instantaneous SINR and power quantity of one realization.
/// e2e_d1 = min(snr_sr_x1, snr_rd1_x1), e2e_d2 = min(snr_sr_x2, snr_rd2_x2).
struct LinkSinrs {
  double snr_sr_x1 = 0.0;   // R decoding x1, x2 as interference
  double snr_sr_x2 = 0.0;   // R decoding x2 after cancelling x1
  double snr_rd1_x2 = 0.0;  // D1 SIC stage: decode x2 first
  double snr_rd1_x1 = 0.0;  // D1 decoding its own x1
  double snr_rd2_x2 = 0.0;  // D2 decoding x2, backscatter interference in band
  double snr_rc_bs = 0.0;   // R -> C backscatter link
  double snr_cr_bs = 0.0;   // C -> R backscatter link
  double e2e_d1 = 0.0;
  double e2e_d2 = 0.0;
  double p_r = 0.0;  // relay transmit power (W)
  double e_r = 0.0;  // harvested energy (J, block duration normalized to 1)
};

/// E_R = eta (1-beta) P_S g_sr theta (T = 1).
double harvested_energy(const SystemParams& params, double g_sr);

/// P_R = E_R / (1-theta) = (1-beta) eta P_S g_sr theta / (1-theta).
double relay_power(const SystemParams& params, double g_sr);

/// Mean relay power over the g_sr distribution: (1-beta) eta P_S
/// (theta/(1-theta)) N lambda_sr.
double expected_relay_power(const SystemParams& params);

/// Expected backscatter interference at D_user (1 or 2):
/// E[I_CDk] = zeta sqrt(E[P_R]) lambda_rc lambda_cdk.
/// Used by the closed forms when hop2_interference is on.
double expected_cd_interference(const SystemParams& params, int user);

/// Deterministic mapping from one realization to all SINRs. Formula switches
/// (eq15_variant, hop2_interference, rc_prefactor, cr_prefactor) select among
/// the mutually inconsistent printed expressions; defaults follow the versions
/// the closed-form outage expressions are derived from.
LinkSinrs compute_sinrs(const SystemParams& params, const ChannelRealization& ch);

}  // namespace irsnoma
