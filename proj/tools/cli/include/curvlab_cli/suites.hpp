#pragma once

#include <string>
#include <vector>

#include "curvlab_cli/config.hpp"
#include "curvlab_cli/report.hpp"

namespace curvlab::cli {

/// Names accepted by `verify --suite`.
const std::vector<std::string>& suite_names();

Report run_verify(const RunConfig& config);
Report run_spectrum(const RunConfig& config);
Report run_decompose(const RunConfig& config);
Report run_sample(const RunConfig& config);
/// Writes the requested model tensor as JSON to config.out (or stdout).
std::string run_export(const RunConfig& config);

Report suite_hp(const RunConfig& config);
Report suite_wolf(const RunConfig& config);
Report suite_grassmann(const RunConfig& config);
Report suite_weyl_norm(const RunConfig& config);
Report suite_bochner_norm(const RunConfig& config);
Report suite_qk_ratio(const RunConfig& config);
Report suite_tripod(const RunConfig& config);
Report suite_decomp(const RunConfig& config);
Report suite_presets(const RunConfig& config);

}  // namespace curvlab::cli
