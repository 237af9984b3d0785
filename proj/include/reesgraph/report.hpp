#pragma once

#include <string>

#include "reesgraph/properties.hpp"

namespace rees {

// Stable JSON rendering of an analysis report: sorted keys, 1-based labels,
// components ordered single / pair / star, "inf" for infinite values.
std::string report_to_json(const AnalysisReport& report);

}  // namespace rees
