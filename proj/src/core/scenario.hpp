#ifndef SPINOSC_CORE_SCENARIO_HPP
#define SPINOSC_CORE_SCENARIO_HPP

#include <filesystem>
#include <nlohmann/json_fwd.hpp>
#include <optional>
#include <string>
#include <vector>

#include "dynamics.hpp"
#include "foucault.hpp"
#include "mapping.hpp"

namespace spinosc {

struct RunWindow {
    double t0 = 0.0, t1 = 0.0, dt = 0.0;
};

// A validated scenario. Exactly one initial-condition form is set.
struct ScenarioConfig {
    double omega0 = 0.0;
    int dimension = 4;
    std::optional<FieldProfile> profile;        // dimension 4
    std::optional<ScalarProfile> scalar_profile;  // dimension 2

    std::optional<Spinor> init_spinor;
    Quat u = Quat::identity();
    std::optional<Quat> u2;
    std::optional<OscState> init_osc;
    std::optional<ModeCoefficients> init_modes;
    std::optional<Osc2State> init_osc2;

    RunWindow run;
    std::vector<std::string> observables;
    int spectrum_component = 0;
};

// Throws Error(ConfigInvalid) naming the offending field path.
ScenarioConfig parse_config(const nlohmann::json& j);
ScenarioConfig parse_config_text(const std::string& text);

// Integrates the scenario and writes trajectory.csv, observables.csv and
// summary.json under out_dir; returns the summary. Deterministic: identical
// configs produce byte-identical outputs.
nlohmann::json run_scenario(const ScenarioConfig& config, const std::filesystem::path& out_dir);

// Runs the SPE and the mapped oscillator system side by side and reports the
// pointwise deviation of the extracted spinor trajectory.
nlohmann::json compare_formulations(const ScenarioConfig& config,
                                    const std::filesystem::path& out_dir);

std::vector<std::string> bundled_scenario_names();
// nullptr when the name is not bundled.
const std::string* bundled_scenario_config(const std::string& name);

}  // namespace spinosc

#endif
