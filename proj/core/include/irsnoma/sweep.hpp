#pragma once

#include <optional>
#include <string>
#include <vector>

#include "irsnoma/mc.hpp"
#include "irsnoma/params.hpp"

namespace irsnoma {

enum class OutputKind { op_d1, op_d2, op_main, op_rc, op_cr, tp_main, tp_bs, tp_legacy };

std::string output_kind_name(OutputKind kind);
OutputKind output_kind_from_name(const std::string& name);

/// One sweep axis: a set of parameter names bound together and one row of
/// values per grid point (e.g. {"n_elems","m_elems"} with rows {4,4},{8,8}).
struct Axis {
  std::vector<std::string> names;
  std::vector<std::vector<double>> values;
};

/// Declarative parameter sweep. Rows are ordered secondary-major: the
/// secondary axis is the outer loop, the primary axis the inner one, and the
/// linear row index is the stream point_index.
struct SweepSpec {
  SystemParams base;
  Axis axis;
  std::optional<Axis> secondary;
  std::vector<OutputKind> outputs;
  McConfig mc;
  bool include_analytic = true;
  bool include_mc = true;
};

struct SweepTable {
  std::vector<std::string> columns;
  std::vector<std::vector<double>> rows;
  std::string metadata;  // canonical JSON: {"version":..., "spec": <SweepSpec>}
};

enum class PresetName { fig3, fig4, fig5, fig6, fig7 };

PresetName preset_from_name(const std::string& name);  // throws on unknown preset

/// Baseline-parameter sweeps reproducing the reference parameter studies:
///   fig3: throughput vs transmission rate (axis drives U and Ubar), 15 dB
///   fig4: throughput vs theta, 15 dB
///   fig5: throughput vs beta, 5.06 dB (operating point calibrated so the
///         analytic tp_main/tp_bs crossover lands near beta ~ 0.53)
///   fig6: outage vs SNR 0..40 dB for (N,M) in {(4,4),(8,8)}
///   fig7: outage vs element count 2..16 for zeta in {0.3, 0.5}, 20 dB
/// The optional base replaces the defaults before the preset applies its own
/// operating point, axis, and outputs.
SweepSpec preset(PresetName name, const SystemParams& base = table1_defaults());

/// Sets one named parameter on a SystemParams (axis binding). Supports every
/// numeric SystemParams field plus the virtual axes "snr_db" (p_s =
/// n0*10^(dB/10)), "rate" (rate_main and rate_bs together) and explicit
/// "gamma_th_d"/"gamma_th_c" (switches threshold_mode to explicit).
/// Throws std::invalid_argument for unknown names.
void apply_axis_value(SystemParams& params, const std::string& name, double value);

/// Inclusive arithmetic grid start, start+step, ..., stop.
std::vector<double> arithmetic_grid(double start, double stop, double step);

/// Evaluates the sweep. Per grid point, analytic outputs are closed-form
/// evaluations and MC outputs share a single trial pass on
/// derive_stream(mc.seed, point_index); tp_legacy re-runs the same stream
/// under the legacy configuration so the comparison is coupled per draw.
/// Rows at invalid or degenerate parameter points are emitted with the flag
/// column set (and NaN outputs when not computable), never dropped.
SweepTable run_sweep(const SweepSpec& spec, unsigned threads = 1);

}  // namespace irsnoma
