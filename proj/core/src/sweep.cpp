#include "irsnoma/sweep.hpp"

#include <cmath>
#include <functional>
#include <limits>
#include <map>
#include <stdexcept>

#include "irsnoma/run_config.hpp"

namespace irsnoma {

namespace {

constexpr double kNaN = std::numeric_limits<double>::quiet_NaN();

const std::map<std::string, OutputKind>& output_kind_map() {
  static const std::map<std::string, OutputKind> m = {
      {"op_d1", OutputKind::op_d1},   {"op_d2", OutputKind::op_d2},
      {"op_main", OutputKind::op_main}, {"op_rc", OutputKind::op_rc},
      {"op_cr", OutputKind::op_cr},   {"tp_main", OutputKind::tp_main},
      {"tp_bs", OutputKind::tp_bs},   {"tp_legacy", OutputKind::tp_legacy},
  };
  return m;
}

}  // namespace

std::string output_kind_name(OutputKind kind) {
  for (const auto& [name, k] : output_kind_map())
    if (k == kind) return name;
  throw std::invalid_argument("output_kind_name: unknown kind");
}

OutputKind output_kind_from_name(const std::string& name) {
  const auto it = output_kind_map().find(name);
  if (it == output_kind_map().end())
    throw std::invalid_argument("unknown output kind: " + name);
  return it->second;
}

void apply_axis_value(SystemParams& p, const std::string& name, double value) {
  static const std::map<std::string, std::function<void(SystemParams&, double)>> setters = {
      {"p_s", [](SystemParams& q, double v) { q.p_s = v; }},
      {"n0", [](SystemParams& q, double v) { q.n0 = v; }},
      {"snr_db", [](SystemParams& q, double v) { q.p_s = q.n0 * std::pow(10.0, v / 10.0); }},
      {"eta", [](SystemParams& q, double v) { q.eta = v; }},
      {"theta", [](SystemParams& q, double v) { q.theta = v; }},
      {"beta", [](SystemParams& q, double v) { q.beta = v; }},
      {"zeta", [](SystemParams& q, double v) { q.zeta = v; }},
      {"a1", [](SystemParams& q, double v) { q.a1 = v; }},
      {"a2", [](SystemParams& q, double v) { q.a2 = v; }},
      {"b1", [](SystemParams& q, double v) { q.b1 = v; }},
      {"b2", [](SystemParams& q, double v) { q.b2 = v; }},
      {"n_elems", [](SystemParams& q, double v) { q.n_elems = static_cast<int>(std::llround(v)); }},
      {"m_elems", [](SystemParams& q, double v) { q.m_elems = static_cast<int>(std::llround(v)); }},
      {"lambda_sr", [](SystemParams& q, double v) { q.lambda_sr = v; }},
      {"lambda_rd1", [](SystemParams& q, double v) { q.lambda_rd1 = v; }},
      {"lambda_rd2", [](SystemParams& q, double v) { q.lambda_rd2 = v; }},
      {"lambda_rc", [](SystemParams& q, double v) { q.lambda_rc = v; }},
      {"lambda_cr", [](SystemParams& q, double v) { q.lambda_cr = v; }},
      {"lambda_cd1", [](SystemParams& q, double v) { q.lambda_cd1 = v; }},
      {"lambda_cd2", [](SystemParams& q, double v) { q.lambda_cd2 = v; }},
      {"rate_main", [](SystemParams& q, double v) { q.rate_main = v; }},
      {"rate_bs", [](SystemParams& q, double v) { q.rate_bs = v; }},
      {"rate",
       [](SystemParams& q, double v) {
         q.rate_main = v;
         q.rate_bs = v;
       }},
      {"gamma_th_d",
       [](SystemParams& q, double v) {
         q.gamma_th_d = v;
         q.threshold_mode = ThresholdMode::explicit_thresholds;
       }},
      {"gamma_th_c",
       [](SystemParams& q, double v) {
         q.gamma_th_c = v;
         q.threshold_mode = ThresholdMode::explicit_thresholds;
       }},
  };
  const auto it = setters.find(name);
  if (it == setters.end()) throw std::invalid_argument("unknown axis parameter: " + name);
  it->second(p, value);
}

std::vector<double> arithmetic_grid(double start, double stop, double step) {
  if (!(step > 0.0) || !std::isfinite(start) || !std::isfinite(stop) || stop < start)
    throw std::invalid_argument("arithmetic_grid: need finite start <= stop and step > 0");
  std::vector<double> out;
  const double eps = step * 1e-9;
  for (int i = 0;; ++i) {
    const double v = start + step * i;
    if (v > stop + eps) break;
    out.push_back(v);
  }
  return out;
}

PresetName preset_from_name(const std::string& name) {
  if (name == "fig3") return PresetName::fig3;
  if (name == "fig4") return PresetName::fig4;
  if (name == "fig5") return PresetName::fig5;
  if (name == "fig6") return PresetName::fig6;
  if (name == "fig7") return PresetName::fig7;
  throw std::invalid_argument("unknown preset: " + name);
}

namespace {

Axis single_axis(const std::string& name, const std::vector<double>& values) {
  Axis a;
  a.names = {name};
  a.values.reserve(values.size());
  for (double v : values) a.values.push_back({v});
  return a;
}

}  // namespace

SweepSpec preset(PresetName name, const SystemParams& base) {
  SweepSpec spec;
  spec.base = base;
  spec.include_analytic = true;
  spec.include_mc = true;
  switch (name) {
    case PresetName::fig3:
      spec.base.p_s = std::pow(10.0, 1.5);  // 15 dB
      spec.axis = single_axis("rate", arithmetic_grid(0.25, 6.0, 0.25));
      spec.outputs = {OutputKind::tp_main, OutputKind::tp_bs, OutputKind::tp_legacy};
      break;
    case PresetName::fig4:
      spec.base.p_s = std::pow(10.0, 1.5);  // 15 dB
      spec.axis = single_axis("theta", arithmetic_grid(0.05, 0.95, 0.05));
      spec.outputs = {OutputKind::tp_main, OutputKind::tp_bs, OutputKind::tp_legacy};
      break;
    case PresetName::fig5:
      // operating point calibrated so tp_main and tp_bs cross near beta ~ 0.53
      spec.base.p_s = std::pow(10.0, 0.506);  // 5.06 dB
      spec.axis = single_axis("beta", arithmetic_grid(0.05, 0.95, 0.05));
      spec.outputs = {OutputKind::tp_main, OutputKind::tp_bs};
      break;
    case PresetName::fig6: {
      spec.axis = single_axis("snr_db", arithmetic_grid(0.0, 40.0, 5.0));
      Axis sec;
      sec.names = {"n_elems", "m_elems"};
      sec.values = {{4.0, 4.0}, {8.0, 8.0}};
      spec.secondary = sec;
      spec.outputs = {OutputKind::op_d1, OutputKind::op_d2, OutputKind::op_main,
                      OutputKind::op_rc, OutputKind::op_cr};
      break;
    }
    case PresetName::fig7: {
      spec.base.p_s = 100.0;  // 20 dB
      Axis ax;
      ax.names = {"n_elems", "m_elems"};
      for (int n = 2; n <= 16; ++n) ax.values.push_back({static_cast<double>(n), static_cast<double>(n)});
      spec.axis = ax;
      Axis sec;
      sec.names = {"zeta"};
      sec.values = {{0.3}, {0.5}};
      spec.secondary = sec;
      spec.outputs = {OutputKind::op_d1, OutputKind::op_d2, OutputKind::op_main,
                      OutputKind::op_rc, OutputKind::op_cr};
      break;
    }
  }
  return spec;
}

namespace {

void check_axis(const Axis& axis, bool require_monotone) {
  if (axis.names.empty() || axis.values.empty())
    throw std::invalid_argument("sweep axis needs at least one name and one value row");
  for (const auto& row : axis.values)
    if (row.size() != axis.names.size())
      throw std::invalid_argument("sweep axis value row width does not match bound names");
  // setter existence check
  SystemParams scratch;
  for (const auto& n : axis.names) apply_axis_value(scratch, n, axis.values.front()[0]);
  if (require_monotone) {
    for (std::size_t i = 1; i < axis.values.size(); ++i)
      if (!(axis.values[i][0] > axis.values[i - 1][0]))
        throw std::invalid_argument("sweep axis values must be strictly increasing");
  }
}

bool wants_mc_counts(const SweepSpec& spec) {
  if (!spec.include_mc) return false;
  for (OutputKind k : spec.outputs)
    if (k != OutputKind::tp_legacy) return true;
  return false;
}

bool wants_legacy(const SweepSpec& spec) {
  for (OutputKind k : spec.outputs)
    if (k == OutputKind::tp_legacy) return true;
  return false;
}

}  // namespace

SweepTable run_sweep(const SweepSpec& spec, unsigned threads) {
  if (spec.outputs.empty()) throw std::invalid_argument("run_sweep: no outputs requested");
  if (!spec.include_analytic && !spec.include_mc)
    throw std::invalid_argument("run_sweep: neither analytic nor MC outputs requested");
  if (const auto v = validate(spec.base); !v.empty())
    throw std::invalid_argument("run_sweep: invalid base params: " + v.front());
  check_axis(spec.axis, true);
  if (spec.secondary) check_axis(*spec.secondary, false);

  SweepTable table;
  for (const auto& n : spec.axis.names) table.columns.push_back(n);
  if (spec.secondary)
    for (const auto& n : spec.secondary->names) table.columns.push_back(n);
  for (OutputKind k : spec.outputs) {
    const std::string name = output_kind_name(k);
    if (spec.include_analytic) {
      table.columns.push_back(name + "_analytic");
      if (k == OutputKind::op_main) table.columns.push_back(name + "_raw_analytic");
    }
    if (spec.include_mc) {
      table.columns.push_back(name + "_mc");
      if (k == OutputKind::op_main) {
        table.columns.push_back(name + "_raw_mc");
        table.columns.push_back(name + "_joint_mc");
      }
      table.columns.push_back(name + "_ci");
    }
  }
  table.columns.push_back("flag");

  const std::size_t n_secondary = spec.secondary ? spec.secondary->values.size() : 1;
  const std::size_t n_primary = spec.axis.values.size();

  for (std::size_t si = 0; si < n_secondary; ++si) {
    for (std::size_t pi = 0; pi < n_primary; ++pi) {
      const std::uint64_t point_index = si * n_primary + pi;
      SystemParams p = spec.base;
      if (spec.secondary)
        for (std::size_t j = 0; j < spec.secondary->names.size(); ++j)
          apply_axis_value(p, spec.secondary->names[j], spec.secondary->values[si][j]);
      for (std::size_t j = 0; j < spec.axis.names.size(); ++j)
        apply_axis_value(p, spec.axis.names[j], spec.axis.values[pi][j]);

      std::vector<double> row;
      for (std::size_t j = 0; j < spec.axis.names.size(); ++j) row.push_back(spec.axis.values[pi][j]);
      if (spec.secondary)
        for (std::size_t j = 0; j < spec.secondary->names.size(); ++j)
          row.push_back(spec.secondary->values[si][j]);

      bool flagged = false;
      bool usable = validate(p).empty();
      Thresholds th{};
      if (usable) {
        try {
          th = resolve_thresholds(p);
        } catch (const std::invalid_argument&) {
          usable = false;
        }
      }
      if (!usable) flagged = true;

      TrialCounts counts{};
      TrialCounts counts_legacy{};
      bool have_counts = false;
      bool have_legacy = false;
      if (usable && wants_mc_counts(spec)) {
        counts = run_trials(p, th, spec.mc, derive_stream(spec.mc.seed, point_index), threads);
        have_counts = true;
      }
      if (usable && spec.include_mc && wants_legacy(spec)) {
        counts_legacy =
            run_trials(legacy_config(p), th, spec.mc, derive_stream(spec.mc.seed, point_index), threads);
        have_legacy = true;
      }

      for (OutputKind k : spec.outputs) {
        double analytic = kNaN;
        double mc_value = kNaN;
        double mc_raw = kNaN;
        double mc_joint = kNaN;
        double ci = kNaN;
        double analytic_raw = kNaN;
        if (usable) {
          switch (k) {
            case OutputKind::op_d1: {
              const auto r = op_d1(p, th);
              analytic = r.total;
              flagged |= r.degenerate;
              if (have_counts) {
                const auto e = outage_from_counts(counts, Link::d1, spec.mc.confidence_z);
                mc_value = e.estimate;
                ci = e.ci_halfwidth;
              }
              break;
            }
            case OutputKind::op_d2: {
              const auto r = op_d2(p, th);
              analytic = r.total;
              flagged |= r.degenerate;
              if (have_counts) {
                const auto e = outage_from_counts(counts, Link::d2, spec.mc.confidence_z);
                mc_value = e.estimate;
                ci = e.ci_halfwidth;
              }
              break;
            }
            case OutputKind::op_main: {
              const auto r = op_main(p, th);
              analytic = r.clamped;
              analytic_raw = r.raw_sum;
              if (have_counts) {
                const auto e = outage_from_counts(counts, Link::main, spec.mc.confidence_z);
                mc_value = e.estimate;
                mc_raw = e.raw_sum.value_or(kNaN);
                mc_joint = e.joint_freq.value_or(kNaN);
                ci = e.ci_halfwidth;
              }
              break;
            }
            case OutputKind::op_rc: {
              const auto r = op_rc(p, th);
              analytic = r.value;
              flagged |= r.degenerate;
              if (have_counts) {
                const auto e = outage_from_counts(counts, Link::rc, spec.mc.confidence_z);
                mc_value = e.estimate;
                ci = e.ci_halfwidth;
              }
              break;
            }
            case OutputKind::op_cr: {
              const auto r = op_cr(p, th);
              analytic = r.value;
              flagged |= r.degenerate;
              if (have_counts) {
                const auto e = outage_from_counts(counts, Link::cr, spec.mc.confidence_z);
                mc_value = e.estimate;
                ci = e.ci_halfwidth;
              }
              break;
            }
            case OutputKind::tp_main: {
              analytic = throughput_main(p, th);
              if (have_counts) {
                const auto e = throughput_from_counts(counts, McSystem::main, p, spec.mc.confidence_z);
                mc_value = e.value;
                ci = e.ci_halfwidth;
              }
              break;
            }
            case OutputKind::tp_bs: {
              analytic = throughput_bs(p, th);
              flagged |= op_rc(p, th).degenerate || op_cr(p, th).degenerate;
              if (have_counts) {
                const auto e = throughput_from_counts(counts, McSystem::bs, p, spec.mc.confidence_z);
                mc_value = e.value;
                ci = e.ci_halfwidth;
              }
              break;
            }
            case OutputKind::tp_legacy: {
              analytic = throughput_main(legacy_config(p), th);
              if (have_legacy) {
                const auto e = throughput_from_counts(counts_legacy, McSystem::main, p,
                                                      spec.mc.confidence_z);
                mc_value = e.value;
                ci = e.ci_halfwidth;
              }
              break;
            }
          }
        }
        if (spec.include_analytic) {
          row.push_back(analytic);
          if (k == OutputKind::op_main) row.push_back(analytic_raw);
        }
        if (spec.include_mc) {
          row.push_back(mc_value);
          if (k == OutputKind::op_main) {
            row.push_back(mc_raw);
            row.push_back(mc_joint);
          }
          row.push_back(ci);
        }
      }
      row.push_back(flagged ? 1.0 : 0.0);
      table.rows.push_back(std::move(row));
    }
  }

  table.metadata = sweep_metadata_json(spec);
  return table;
}

}  // namespace irsnoma
