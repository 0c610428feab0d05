#pragma once

#include <stdexcept>
#include <string>

#include "irsnoma/mc.hpp"
#include "irsnoma/params.hpp"
#include "irsnoma/sweep.hpp"

namespace irsnoma {

/// Raised for malformed or unknown configuration input (CLI exit code 2).
struct ConfigError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// Run configuration: the config-file schema is a JSON document with a
/// "params" object mirroring SystemParams field names and an optional "mc"
/// object mirroring McConfig. Unknown keys are rejected.
struct RunConfig {
  SystemParams params;
  McConfig mc;
};

RunConfig parse_run_config(const std::string& json_text);
RunConfig load_run_config_file(const std::string& path);
std::string run_config_to_json(const RunConfig& config);

/// SweepSpec serialization; the metadata form carries the artifact version so
/// a table is reproducible from its own header block.
std::string sweep_spec_to_json(const SweepSpec& spec);
SweepSpec sweep_spec_from_json(const std::string& json_text);
std::string sweep_metadata_json(const SweepSpec& spec);
SweepSpec sweep_spec_from_metadata(const std::string& metadata_json);

}  // namespace irsnoma
