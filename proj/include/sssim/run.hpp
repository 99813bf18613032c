#ifndef SSSIM_RUN_HPP
#define SSSIM_RUN_HPP

#include <string>
#include <vector>

#include "sssim/config.hpp"

namespace sssim {

struct RunOptions {
    std::string out_dir_override; ///< wins over config [output] dir when nonempty
    int jobs = 1;                 ///< worker threads for sweep fan-out
    bool verbose = false;
};

struct RunResult {
    std::vector<std::string> files_written;
    std::string summary; ///< also written to <prefix>_summary.txt
};

/// Dispatches the configured analysis, writes the CSV curve(s) and the
/// human-readable summary, and returns both. Throws a typed sssim::Error
/// on failure; the CLI maps error classes onto exit codes.
RunResult run(const RunConfig& cfg, const RunOptions& options = {});

/// Registry listing with parameter values and provenance notes.
std::string list_materials(const MaterialRegistry& registry);

} // namespace sssim

#endif
