#pragma once

#include <string>
#include <vector>

#include "qwb/cli/report.hpp"

namespace qwb::cli {

const std::vector<std::string>& suite_names();

/// Runs one suite, or every suite for "all"; throws std::invalid_argument for unknown names.
RunReport run_suite(const std::string& name, const RunConfig& config);
SuiteReport run_single_suite(const std::string& name, const RunConfig& config);

}  // namespace qwb::cli
