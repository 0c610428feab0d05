#include "irsnoma/mc.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <stdexcept>
#include <thread>

#include "irsnoma/sinr.hpp"

namespace irsnoma {

namespace {

TrialCounts run_partition(const SystemParams& params, const Thresholds& th, ChannelMode mode,
                          std::uint64_t trials, const RngStream& stream) {
  TrialCounts c;
  c.trials = trials;
  Xoshiro256pp gen(stream);
  for (std::uint64_t t = 0; t < trials; ++t) {
    const ChannelRealization ch = (mode == ChannelMode::assumption)
                                      ? sample_assumption(params, gen)
                                      : sample_physical(params, gen);
    const LinkSinrs s = compute_sinrs(params, ch);
    const bool out_d1 = s.e2e_d1 < th.gamma_th_d;
    const bool out_d2 = s.e2e_d2 < th.gamma_th_d;
    c.d1 += out_d1;
    c.d2 += out_d2;
    c.both += out_d1 && out_d2;
    c.rc += s.snr_rc_bs < th.gamma_th_c;
    c.cr += s.snr_cr_bs < th.gamma_th_c;
  }
  return c;
}

double binomial_ci(double p, std::uint64_t n, double z) {
  return z * std::sqrt(p * (1.0 - p) / static_cast<double>(n));
}

}  // namespace

TrialCounts run_trials(const SystemParams& params, const Thresholds& th, const McConfig& mc,
                       const RngStream& base_stream, unsigned threads) {
  if (mc.trials == 0) throw std::invalid_argument("run_trials: trials must be > 0");
  if (mc.partitions == 0) throw std::invalid_argument("run_trials: partitions must be > 0");
  if (const auto violations = validate(params); !violations.empty())
    throw std::invalid_argument("run_trials: invalid params: " + violations.front());

  const std::uint32_t parts = mc.partitions;
  const std::uint64_t base = mc.trials / parts;
  const std::uint64_t rem = mc.trials % parts;
  std::vector<TrialCounts> counts(parts);

  auto work = [&](std::uint32_t p) {
    const std::uint64_t n = base + (p < rem ? 1 : 0);
    if (n > 0) counts[p] = run_partition(params, th, mc.channel_mode, n, child_stream(base_stream, p));
  };

  if (threads <= 1) {
    for (std::uint32_t p = 0; p < parts; ++p) work(p);
  } else {
    std::atomic<std::uint32_t> next{0};
    const unsigned pool = std::min<unsigned>(threads, parts);
    std::vector<std::thread> workers;
    workers.reserve(pool);
    for (unsigned w = 0; w < pool; ++w) {
      workers.emplace_back([&] {
        for (std::uint32_t p = next.fetch_add(1); p < parts; p = next.fetch_add(1)) work(p);
      });
    }
    for (auto& w : workers) w.join();
  }

  TrialCounts total;
  for (const auto& c : counts) {
    total.trials += c.trials;
    total.d1 += c.d1;
    total.d2 += c.d2;
    total.both += c.both;
    total.rc += c.rc;
    total.cr += c.cr;
  }
  return total;
}

OutageResult outage_from_counts(const TrialCounts& c, Link link, double z) {
  if (c.trials == 0) throw std::invalid_argument("outage_from_counts: empty counts");
  const double n = static_cast<double>(c.trials);
  OutageResult r;
  r.link = link;
  r.trials = c.trials;
  switch (link) {
    case Link::d1:
      r.estimate = static_cast<double>(c.d1) / n;
      r.ci_halfwidth = binomial_ci(r.estimate, c.trials, z);
      break;
    case Link::d2:
      r.estimate = static_cast<double>(c.d2) / n;
      r.ci_halfwidth = binomial_ci(r.estimate, c.trials, z);
      break;
    case Link::rc:
      r.estimate = static_cast<double>(c.rc) / n;
      r.ci_halfwidth = binomial_ci(r.estimate, c.trials, z);
      break;
    case Link::cr:
      r.estimate = static_cast<double>(c.cr) / n;
      r.ci_halfwidth = binomial_ci(r.estimate, c.trials, z);
      break;
    case Link::main: {
      const double p1 = static_cast<double>(c.d1) / n;
      const double p2 = static_cast<double>(c.d2) / n;
      const double pj = static_cast<double>(c.both) / n;
      r.raw_sum = p1 + p2;
      r.joint_freq = pj;
      r.estimate = std::min(p1 + p2, 1.0);
      // variance of the per-trial indicator sum I_d1 + I_d2 (correlated)
      const double var = p1 * (1.0 - p1) + p2 * (1.0 - p2) + 2.0 * (pj - p1 * p2);
      r.ci_halfwidth = z * std::sqrt(std::max(var, 0.0) / n);
      break;
    }
  }
  return r;
}

ThroughputEstimate throughput_from_counts(const TrialCounts& c, McSystem system,
                                          const SystemParams& params, double z) {
  if (c.trials == 0) throw std::invalid_argument("throughput_from_counts: empty counts");
  const double n = static_cast<double>(c.trials);
  const bool bs = system == McSystem::bs;
  const double rate = bs ? params.rate_bs : params.rate_main;
  const double pa = static_cast<double>(bs ? c.rc : c.d1) / n;
  const double pb = static_cast<double>(bs ? c.cr : c.d2) / n;
  ThroughputEstimate t;
  t.value = (1.0 - pa) * rate + (1.0 - pb) * rate;
  const double cia = binomial_ci(pa, c.trials, z);
  const double cib = binomial_ci(pb, c.trials, z);
  t.ci_halfwidth = rate * std::sqrt(cia * cia + cib * cib);
  return t;
}

OutageResult estimate_outage(const SystemParams& params, const Thresholds& th, Link link,
                             const McConfig& mc, unsigned threads) {
  const TrialCounts c = run_trials(params, th, mc, derive_stream(mc.seed, 0), threads);
  return outage_from_counts(c, link, mc.confidence_z);
}

ThroughputEstimate estimate_throughput(const SystemParams& params, const Thresholds& th,
                                       McSystem system, const McConfig& mc, unsigned threads) {
  const RngStream stream = derive_stream(mc.seed, 0);
  if (system == McSystem::legacy) {
    const SystemParams legacy = legacy_config(params);
    const TrialCounts c = run_trials(legacy, th, mc, stream, threads);
    return throughput_from_counts(c, McSystem::main, legacy, mc.confidence_z);
  }
  const TrialCounts c = run_trials(params, th, mc, stream, threads);
  return throughput_from_counts(c, system, params, mc.confidence_z);
}

std::vector<ValidationRow> compare_analytic_mc(const SystemParams& base,
                                               const std::vector<double>& snr_grid_db,
                                               const McConfig& mc, double base_gamma,
                                               double base_lognormal, unsigned threads) {
  std::vector<ValidationRow> rows;
  rows.reserve(snr_grid_db.size() * 4);
  for (std::size_t i = 0; i < snr_grid_db.size(); ++i) {
    SystemParams p = base;
    p.p_s = p.n0 * std::pow(10.0, snr_grid_db[i] / 10.0);
    const Thresholds th = resolve_thresholds(p);
    const TrialCounts counts = run_trials(p, th, mc, derive_stream(mc.seed, i), threads);

    const OutageBreakdown d1 = op_d1(p, th);
    const OutageBreakdown d2 = op_d2(p, th);
    const OutageValue rc = op_rc(p, th);
    const OutageValue cr = op_cr(p, th);

    const struct {
      Link link;
      double analytic;
      bool gamma_dominates;
    } entries[] = {
        {Link::d1, d1.total, d1.hop1_term >= d1.hop2_term},
        {Link::d2, d2.total, d2.hop1_term >= d2.hop2_term},
        {Link::rc, rc.value, false},
        {Link::cr, cr.value, false},
    };
    for (const auto& e : entries) {
      const OutageResult est = outage_from_counts(counts, e.link, mc.confidence_z);
      ValidationRow row;
      row.snr_db = snr_grid_db[i];
      row.link = e.link;
      row.analytic = e.analytic;
      row.mc = est.estimate;
      row.ci = est.ci_halfwidth;
      row.gap = std::fabs(e.analytic - est.estimate);
      row.gamma_hop_dominates = e.gamma_dominates;
      row.tolerance = e.gamma_dominates ? std::max(base_gamma, 3.0 * est.ci_halfwidth)
                                        : base_lognormal;
      row.pass = row.gap <= row.tolerance;
      rows.push_back(row);
    }
  }
  return rows;
}

}  // namespace irsnoma
