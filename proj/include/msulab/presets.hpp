#pragma once

#include <string>
#include <vector>

#include "msulab/experiment.hpp"

namespace msulab {

/// Experiment catalog, in display order.
const std::vector<std::string>& preset_names();

/// Throws InvalidInput listing the catalog for an unknown name.
ExperimentConfig preset(const std::string& name);

/// Cardinalities used throughout the synthetic catalog.
const std::vector<long long>& catalog_cardinalities();

}  // namespace msulab
