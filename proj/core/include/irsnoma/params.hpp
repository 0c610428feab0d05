#pragma once

#include <optional>
#include <string>
#include <vector>

namespace irsnoma {

enum class ThresholdMode { explicit_thresholds, from_rate };

// Eq.-level formula switches. Defaults pick the variants the closed forms are
// derived from, so the Monte Carlo engine and the analytic module agree by
// construction wherever the printed expressions are mutually inconsistent.
enum class Eq15Variant { as_printed, sic_corrected };
enum class Hop2Interference { off, on };
enum class CrPrefactor { eq21, appendix_b, eq35 };
enum class RcPrefactor { eq10, appendix_b };
enum class LognormalVariant { as_printed, moment_matched };
enum class Hop2Shape { use_n, use_m };
enum class NoiseNormalization { as_printed, include_noise };

/// Every scalar the model needs. Immutable value type; freely shareable.
///
/// beta is the backscatter power-splitting reflection coefficient (the rho of
/// the prose description): a beta fraction of the received power feeds the
/// backscatter interface, (1-beta) feeds energy harvesting / decoding.
struct SystemParams {
  double p_s = 1.0;  // source transmit power (W)
  double n0 = 1.0;   // noise power (W)

  int n_elems = 4;  // IRS-1 element count N
  int m_elems = 4;  // IRS-2 element count M

  // power allocation: a-pair at the source (hop 1), b-pair at the relay (hop 2)
  double a1 = 0.8;
  double a2 = 0.2;
  double b1 = 0.8;
  double b2 = 0.2;

  double eta = 0.7;    // energy conversion efficiency, (0,1]
  double theta = 0.5;  // time-splitting fraction, (0,1)
  double beta = 0.7;   // backscatter power split, [0,1)
  double zeta = 0.3;   // backscatter reflection efficiency, [0,1]

  // channel scale parameters (unit-mean defaults; path loss out of scope)
  double lambda_sr = 1.0;
  double lambda_rd1 = 1.0;
  double lambda_rd2 = 1.0;
  double lambda_rc = 1.0;
  double lambda_cr = 1.0;
  double lambda_cd1 = 1.0;
  double lambda_cd2 = 1.0;

  double rate_main = 2.0;  // U (bit/s/Hz)
  double rate_bs = 0.5;    // Ubar (bit/s/Hz)

  std::optional<double> gamma_th_d;  // explicit linear SNR threshold, main links
  std::optional<double> gamma_th_c;  // explicit linear SNR threshold, BS links
  ThresholdMode threshold_mode = ThresholdMode::from_rate;

  Eq15Variant eq15_variant = Eq15Variant::sic_corrected;
  Hop2Interference hop2_interference = Hop2Interference::on;
  CrPrefactor cr_prefactor = CrPrefactor::eq35;
  RcPrefactor rc_prefactor = RcPrefactor::appendix_b;
  LognormalVariant lognormal_variant = LognormalVariant::moment_matched;
  Hop2Shape hop2_shape = Hop2Shape::use_n;
  NoiseNormalization noise_normalization = NoiseNormalization::include_noise;
};

/// Linear SNR thresholds. Zero is allowed (and yields outage probability 0);
/// negative or non-finite values are rejected by the outage calculators.
struct Thresholds {
  double gamma_th_d = 0.0;
  double gamma_th_c = 0.0;
};

/// Total validation: returns one message per violated invariant (field name
/// included), empty when the parameter set is usable. Never throws.
std::vector<std::string> validate(const SystemParams& params);

/// Threshold resolution. from_rate maps gamma = 2^rate - 1 (no time-split
/// prelog); explicit mode passes the configured thresholds through.
/// Throws std::invalid_argument in explicit mode with missing thresholds.
Thresholds resolve_thresholds(const SystemParams& params);

/// The baseline simulation parameter set (N=M=4, eta=0.7, theta=0.5, beta=0.7,
/// zeta=0.3, U=2, Ubar=0.5, unit scales, unit powers).
SystemParams table1_defaults();

/// The legacy (no-backscatter) reconstruction: beta=0, zeta=0, all harvested
/// power to EH, no backscatter interference. Everything else unchanged.
SystemParams legacy_config(SystemParams params);

}  // namespace irsnoma
