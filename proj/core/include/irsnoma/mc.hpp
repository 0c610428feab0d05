#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "irsnoma/analytic.hpp"
#include "irsnoma/channel.hpp"
#include "irsnoma/params.hpp"

namespace irsnoma {

enum class ChannelMode { assumption, physical };
enum class Link { d1, d2, main, rc, cr };
enum class McSystem { main, bs, legacy };

struct McConfig {
  std::uint64_t trials = 1'000'000;
  std::uint64_t seed = 0;
  ChannelMode channel_mode = ChannelMode::assumption;
  double confidence_z = 1.96;
  // Trials are split over this many fixed sub-streams regardless of worker
  // count, so results are bit-identical for any thread count.
  std::uint32_t partitions = 64;
};

/// Raw outage counts of one Monte Carlo pass (all links share the same draws).
struct TrialCounts {
  std::uint64_t trials = 0;
  std::uint64_t d1 = 0;
  std::uint64_t d2 = 0;
  std::uint64_t both = 0;  // joint d1-and-d2 outage
  std::uint64_t rc = 0;
  std::uint64_t cr = 0;
};

struct OutageResult {
  Link link = Link::d1;
  double estimate = 0.0;  // clamped to [0,1]
  double ci_halfwidth = 0.0;
  std::uint64_t trials = 0;
  std::optional<double> analytic;
  // main link only: the additive convention can exceed 1; the joint-event
  // frequency quantifies the double counting.
  std::optional<double> raw_sum;
  std::optional<double> joint_freq;
};

struct ThroughputEstimate {
  double value = 0.0;
  double ci_halfwidth = 0.0;
};

/// One full Monte Carlo pass: `mc.trials` realizations from `base_stream`,
/// outage indicators counted for every link at once. Deterministic for fixed
/// (params, thresholds, mc, base_stream) independent of `threads`.
/// Throws std::invalid_argument for trials == 0 or invalid params.
TrialCounts run_trials(const SystemParams& params, const Thresholds& th, const McConfig& mc,
                       const RngStream& base_stream, unsigned threads = 1);

OutageResult outage_from_counts(const TrialCounts& counts, Link link, double confidence_z);

/// Counts-to-throughput mapping: main -> (1-p_d1) U + (1-p_d2) U, bs analog
/// with Ubar; CI by linear propagation of the per-user CIs.
ThroughputEstimate throughput_from_counts(const TrialCounts& counts, McSystem system,
                                          const SystemParams& params, double confidence_z);

/// Frequency estimate of one link's outage with a normal-approximation CI.
/// Stream: derive_stream(mc.seed, 0).
OutageResult estimate_outage(const SystemParams& params, const Thresholds& th, Link link,
                             const McConfig& mc, unsigned threads = 1);

/// Monte Carlo throughput. `legacy` evaluates the main-link formula under the
/// legacy configuration (beta=0, zeta=0) on the same stream, so the
/// legacy-vs-main comparison is coupled realization by realization.
ThroughputEstimate estimate_throughput(const SystemParams& params, const Thresholds& th,
                                       McSystem system, const McConfig& mc, unsigned threads = 1);

/// One row of the analytic-vs-MC validation comparison.
struct ValidationRow {
  double snr_db = 0.0;
  Link link = Link::d1;
  double analytic = 0.0;
  double mc = 0.0;
  double ci = 0.0;
  double gap = 0.0;
  bool gamma_hop_dominates = false;  // larger analytic hop term is the exact-Gamma one
  double tolerance = 0.0;
  bool pass = false;
};

/// Analytic-vs-MC sweep over an SNR grid (P_S = N0 * 10^(dB/10)) for links
/// d1, d2, rc, cr. Per point the tolerance is max(base_gamma, 3 ci) where the
/// exact-Gamma hop dominates and base_lognormal where the log-normal hop does
/// (rc/cr are always log-normal-governed). Stream per grid point:
/// derive_stream(mc.seed, point_index).
std::vector<ValidationRow> compare_analytic_mc(const SystemParams& params,
                                               const std::vector<double>& snr_grid_db,
                                               const McConfig& mc, double base_gamma = 0.02,
                                               double base_lognormal = 0.05, unsigned threads = 1);

}  // namespace irsnoma
