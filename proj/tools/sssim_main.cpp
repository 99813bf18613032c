// sssim — gated SC-Sm-SC junction simulator command line.
//
//   sssim run <config-file> [--out DIR] [--jobs N] [--verbose]
//   sssim check <config-file>
//   sssim materials [--config FILE]
//
// Exit codes: 0 success, 2 config, 3 physics precondition,
// 4 numerical non-convergence, 5 I/O.

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include <CLI11.hpp>

#include "sssim/config.hpp"
#include "sssim/errors.hpp"
#include "sssim/run.hpp"
#include "sssim/version.hpp"

namespace {

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw sssim::IoError("cannot read config file '" + path + "'");
    std::ostringstream oss;
    oss << in.rdbuf();
    return oss.str();
}

std::string default_out_dir(const std::string& flag_value) {
    if (!flag_value.empty()) return flag_value; // the flag wins
    if (const char* env = std::getenv("SSSIM_OUT"); env != nullptr && *env != '\0') {
        return env;
    }
    return "";
}

int dispatch(int argc, char** argv) {
    CLI::App app{"gated SC-Sm-SC junction simulator"};
    app.set_version_flag("--version", std::string(sssim::kVersion));
    app.require_subcommand(1);

    std::string config_path;
    std::string out_dir;
    int jobs = 1;
    bool verbose = false;

    auto* run_cmd = app.add_subcommand("run", "run the analysis described by a config file");
    run_cmd->add_option("config", config_path, "config file")->required();
    run_cmd->add_option("--out", out_dir, "output directory (overrides config and SSSIM_OUT)");
    run_cmd->add_option("--jobs", jobs, "worker threads for sweeps")->check(CLI::Range(1, 256));
    run_cmd->add_flag("--verbose", verbose, "print the full summary to stdout");

    std::string check_path;
    auto* check_cmd = app.add_subcommand("check", "parse and validate a config file");
    check_cmd->add_option("config", check_path, "config file")->required();

    std::string materials_config;
    auto* materials_cmd = app.add_subcommand("materials", "list the material registry");
    materials_cmd->add_option("--config", materials_config,
                              "also register the material defined in this config");

    CLI11_PARSE(app, argc, argv);

    if (run_cmd->parsed()) {
        const sssim::RunConfig cfg = sssim::parse_config(read_file(config_path));
        sssim::RunOptions options;
        options.out_dir_override = default_out_dir(out_dir);
        options.jobs = jobs;
        options.verbose = verbose;
        const sssim::RunResult result = sssim::run(cfg, options);
        for (const auto& warning : cfg.warnings) {
            std::cerr << "warning: " << warning << "\n";
        }
        if (verbose) {
            std::cout << result.summary;
        }
        for (const auto& file : result.files_written) {
            std::cout << "wrote " << file << "\n";
        }
        return 0;
    }

    if (check_cmd->parsed()) {
        const sssim::RunConfig cfg = sssim::parse_config(read_file(check_path));
        std::cout << "config OK: analysis = " << sssim::analysis_name(cfg.analysis) << "\n";
        for (const auto& warning : cfg.warnings) {
            std::cout << "warning: " << warning << "\n";
        }
        return 0;
    }

    auto registry = sssim::MaterialRegistry::with_builtins();
    if (!materials_config.empty()) {
        const sssim::RunConfig cfg = sssim::parse_config(read_file(materials_config));
        if (!registry.contains(cfg.material.name)) {
            registry.add(cfg.material, "registered from " + materials_config);
        }
    }
    std::cout << sssim::list_materials(registry);
    return 0;
}

} // namespace

int main(int argc, char** argv) {
    try {
        return dispatch(argc, argv);
    } catch (const sssim::Error& err) {
        std::cerr << "error: " << err.what() << "\n";
        return static_cast<int>(err.error_class());
    } catch (const std::exception& err) {
        std::cerr << "error: " << err.what() << "\n";
        return 1;
    }
}
