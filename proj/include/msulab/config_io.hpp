#pragma once

#include <filesystem>
#include <string>

#include "msulab/experiment.hpp"

namespace msulab {

/// Parses an experiment config. Keys mirror ExperimentConfig; an optional
/// "preset" key seeds the config from the catalog before the other keys are
/// applied. Unknown keys are rejected.
///
///   {"name": "f1-small", "preset": "fig-f1", "replicates": 200,
///    "sweep": {"axis": "cardinality", "values": [2, 10, 20, 40]}}
///
/// The sweep is either {"axis", "values"} or {"axis", "from", "to", "step"}.
/// "sample_size_policy" is {"kind": "fixed", "m": N} or
/// {"kind": "computed", "factor": F}.
ExperimentConfig config_from_json(const std::string& text);
ExperimentConfig load_config(const std::filesystem::path& path);

std::string config_to_json(const ExperimentConfig& config);

}  // namespace msulab
