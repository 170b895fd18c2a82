// Scenario runner CLI. Talks to the library exclusively through the C API.
//
// Exit codes: 0 success, 2 config error, 3 integration failure, 4 I/O error.

#include <CLI11.hpp>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include "spinosc.h"

namespace {

constexpr int kExitConfig = 2;
constexpr int kExitIntegration = 3;
constexpr int kExitIo = 4;

int exit_code_for(spinosc_status status) {
    switch (status) {
        case SPINOSC_OK:
            return 0;
        case SPINOSC_ERR_CONFIG:
        case SPINOSC_ERR_INVALID_ARGUMENT:
        case SPINOSC_ERR_NON_UNIT_QUATERNION:
        case SPINOSC_ERR_NOT_NORMALIZED:
            return kExitConfig;
        case SPINOSC_ERR_IO:
            return kExitIo;
        default:
            return kExitIntegration;
    }
}

// A scenario argument is either a bundled name or a path to a JSON file.
bool load_config(const std::string& arg, std::string& out) {
    if (char* bundled = spinosc_bundled_scenario_config(arg.c_str())) {
        out = bundled;
        spinosc_string_free(bundled);
        return true;
    }
    std::ifstream in(arg, std::ios::binary);
    if (!in) return false;
    std::ostringstream ss;
    ss << in.rdbuf();
    out = ss.str();
    return true;
}

int run_command(const std::string& scenario, const std::string& out_dir, bool compare) {
    std::string config;
    if (!load_config(scenario, config)) {
        std::cerr << "error: '" << scenario << "' is neither a bundled scenario nor a readable file\n";
        return kExitIo;
    }
    char* summary = nullptr;
    const spinosc_status status =
        compare ? spinosc_compare_formulations(config.c_str(), out_dir.c_str(), &summary)
                : spinosc_run_scenario(config.c_str(), out_dir.c_str(), &summary);
    if (status != SPINOSC_OK) {
        std::cerr << "error (" << spinosc_status_name(status) << "): " << spinosc_last_error()
                  << "\n";
        return exit_code_for(status);
    }
    std::cout << summary << "\n";
    spinosc_string_free(summary);
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"spinosc - coupled-oscillator analog of spin-1/2 dynamics"};
    app.require_subcommand(1);

    std::string scenario, out_dir = "out";

    auto* run = app.add_subcommand("run", "run a scenario and write CSV/JSON artifacts");
    run->add_option("config", scenario, "config path or bundled scenario name")->required();
    run->add_option("--out", out_dir, "output directory (default: out)");

    auto* cmp = app.add_subcommand(
        "compare", "integrate the quantum and classical formulations side by side");
    cmp->add_option("config", scenario, "config path or bundled scenario name")->required();
    cmp->add_option("--out", out_dir, "output directory (default: out)");

    auto* scenarios = app.add_subcommand("scenarios", "inspect bundled scenarios");
    scenarios->require_subcommand(1);
    scenarios->add_subcommand("list", "list bundled scenario names");
    auto* show = scenarios->add_subcommand("show", "print a bundled scenario config");
    std::string show_name;
    show->add_option("name", show_name, "bundled scenario name")->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int rc = app.exit(e);
        return rc == 0 ? 0 : kExitConfig;
    }

    if (run->parsed()) return run_command(scenario, out_dir, false);
    if (cmp->parsed()) return run_command(scenario, out_dir, true);
    if (scenarios->parsed()) {
        if (show->parsed()) {
            char* cfg = spinosc_bundled_scenario_config(show_name.c_str());
            if (!cfg) {
                std::cerr << "error: unknown scenario '" << show_name << "'\n";
                return kExitConfig;
            }
            std::cout << cfg << "\n";
            spinosc_string_free(cfg);
        } else {
            char* names = spinosc_bundled_scenario_names();
            std::cout << names << "\n";
            spinosc_string_free(names);
        }
        return 0;
    }
    return kExitConfig;
}
