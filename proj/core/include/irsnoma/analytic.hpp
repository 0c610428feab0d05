#pragma once

#include "irsnoma/params.hpp"
#include "irsnoma/specialfns.hpp"

namespace irsnoma {

/// Two-hop outage decomposition: total = 1 - (1 - hop1_term)(1 - hop2_term).
struct OutageBreakdown {
  double hop1_term = 0.0;  // exact incomplete-gamma hop
  double hop2_term = 0.0;  // log-normal-approximated hop
  double total = 0.0;
  bool degenerate = false;
};

/// Single-link outage value with a degenerate-corner flag (zeta = 0, beta = 1,
/// theta = 1 report OP = 1 flagged instead of faulting, so full-range sweeps
/// never abort).
struct OutageValue {
  double value = 0.0;
  bool degenerate = false;
};

/// Main-link additive outage: the raw sum can exceed 1 as printed; the clamped
/// value is min(raw_sum, 1). Both are reported.
struct MainOutage {
  double raw_sum = 0.0;
  double clamped = 0.0;
};

/// Log-normal parameters of the hop-2 gain product g_sr * g_rd{user}.
/// moment_matched composes the per-factor moment matches (shapes per
/// hop2_shape, scales per lambda); as_printed replicates the derivation's
/// per-factor values mu = ln(N^2/sqrt(N^2+N)), sigma2 = ln(1+1/N) with the x2
/// composition (both factors shape N, unit scale).
LogNormalParams hop2_product_params(const SystemParams& params, int user);

/// Log-normal parameters of g_sr * g_rc (R->C link product).
/// as_printed doubles the printed mu_z = ln(N^2/sqrt(N^2+2N)),
/// sigma_z^2 = ln(1+2/N); moment_matched composes Gamma(N) x Exp factors.
LogNormalParams rc_product_params(const SystemParams& params);

/// Log-normal parameters of g_sr * g_rc * g_cr (C->R link product).
/// as_printed doubles the printed mu_w = ln(N^2/sqrt(4N^2+4N)),
/// sigma_w^2 = ln(4+4/N) (which themselves equal the three-factor moment
/// match); moment_matched composes Gamma(N) x Exp x Exp factors.
LogNormalParams cr_product_params(const SystemParams& params);

/// D1 outage. hop1: reg_lower_gamma(N, tau1) with the SIC-feasibility ceiling
/// (a1 <= a2*gamma_th -> hop1 = 1); hop2: log-normal CDF at
/// tau2 = (1-theta) gamma_th / (b1 P_S (1-beta) theta eta), scaled by the
/// noise floor N0 + E[I_CD1] under noise_normalization=include (E[I] only
/// when hop2_interference is on). Throws std::domain_error for negative or
/// non-finite thresholds; gamma_th = 0 yields 0.
OutageBreakdown op_d1(const SystemParams& params, const Thresholds& th);

/// D2 outage: hop1 tau3 = gamma_th N0 lambda_sr / (a2 P_S); hop2 tau4 as tau2
/// with b2. Same switches as op_d1.
OutageBreakdown op_d2(const SystemParams& params, const Thresholds& th);

/// Additive main-link outage (raw and clamped).
MainOutage op_main(const SystemParams& params, const Thresholds& th);

/// R->C outage: log-normal CDF at tau5 = gamma_th^C N0 / (zeta (1-beta) P_S).
OutageValue op_rc(const SystemParams& params, const Thresholds& th);

/// C->R outage: log-normal CDF at tau6 = gamma_th^C N0 / (zeta (1-theta)(1-beta) P_S).
OutageValue op_cr(const SystemParams& params, const Thresholds& th);

/// (1 - P_out^D1) U + (1 - P_out^D2) U.
double throughput_main(const SystemParams& params, const Thresholds& th);

/// (1 - P_out^RC) Ubar + (1 - P_out^CR) Ubar.
double throughput_bs(const SystemParams& params, const Thresholds& th);

}  // namespace irsnoma
