#include "scenario.hpp"

#include <cmath>
#include <cstdio>
#include <fstream>
#include <map>
#include <nlohmann/json.hpp>

#include "observables.hpp"

namespace spinosc {

using nlohmann::json;

namespace {

[[noreturn]] void bad_config(const std::string& path, const std::string& why) {
    fail(Errc::ConfigInvalid, path + ": " + why);
}

double get_number(const json& j, const std::string& path, const char* key) {
    if (!j.contains(key)) bad_config(path + key, "missing");
    if (!j.at(key).is_number()) bad_config(path + key, "must be a number");
    return j.at(key).get<double>();
}

double get_number_or(const json& j, const char* key, double fallback) {
    if (!j.contains(key)) return fallback;
    return j.at(key).get<double>();
}

Eigen::Vector3d get_vec3(const json& j, const std::string& path, const char* key) {
    if (!j.contains(key)) bad_config(path + key, "missing");
    const auto& a = j.at(key);
    if (!a.is_array() || a.size() != 3) bad_config(path + key, "must be a 3-element array");
    return {a[0].get<double>(), a[1].get<double>(), a[2].get<double>()};
}

Complex get_complex(const json& j, const std::string& path, const char* key) {
    if (!j.contains(key)) bad_config(path + key, "missing");
    const auto& a = j.at(key);
    if (!a.is_array() || a.size() != 2) bad_config(path + key, "must be [re, im]");
    return {a[0].get<double>(), a[1].get<double>()};
}

FieldProfile parse_field(const json& f, const json& root) {
    const std::string path = "field.";
    if (!f.contains("kind")) bad_config("field.kind", "missing");
    const std::string kind = f.at("kind").get<std::string>();
    std::optional<FieldProfile> p;
    if (kind == "constant") {
        if (f.contains("magnetic_field")) {
            const Eigen::Vector3d B = get_vec3(f, path, "magnetic_field");
            const double ctm = get_number(root, "", "charge_to_mass");
            p = FieldProfile::constant(from_magnetic_field(B, ctm));
        } else {
            p = FieldProfile::constant(get_vec3(f, path, "beta"));
        }
    } else if (kind == "rotating") {
        p = FieldProfile::rotating_about_axis(get_vec3(f, path, "axis"),
                                              get_number(f, path, "amplitude"),
                                              get_number(f, path, "rate"),
                                              get_number_or(f, "axial", 0.0),
                                              get_number_or(f, "phase", 0.0));
    } else if (kind == "linear_ramp") {
        p = FieldProfile::linear_ramp(get_vec3(f, path, "beta0"), get_vec3(f, path, "slope"));
    } else if (kind == "sinusoidal") {
        p = FieldProfile::sinusoidal(get_vec3(f, path, "beta0"), get_vec3(f, path, "amplitude"),
                                     get_number(f, path, "rate"), get_number_or(f, "phase", 0.0));
    } else if (kind == "piecewise_constant") {
        if (!f.contains("times") || !f.contains("values"))
            bad_config("field", "piecewise_constant needs times and values");
        std::vector<double> times = f.at("times").get<std::vector<double>>();
        std::vector<Eigen::Vector3d> values;
        for (const auto& v : f.at("values"))
            values.emplace_back(v[0].get<double>(), v[1].get<double>(), v[2].get<double>());
        p = FieldProfile::piecewise_constant(std::move(times), std::move(values));
    } else {
        bad_config("field.kind", "unknown kind '" + kind + "'");
    }
    if (f.contains("domain")) {
        const auto& d = f.at("domain");
        if (!d.is_array() || d.size() != 2) bad_config("field.domain", "must be [t_min, t_max]");
        p = p->with_domain(d[0].get<double>(), d[1].get<double>());
    }
    return *p;
}

ScalarProfile parse_scalar_field(const json& f) {
    if (!f.contains("kind")) bad_config("field.kind", "missing");
    const std::string kind = f.at("kind").get<std::string>();
    if (kind == "constant") return ScalarProfile::constant(get_number(f, "field.", "beta"));
    if (kind == "sinusoidal")
        return ScalarProfile::sinusoidal(get_number(f, "field.", "beta0"),
                                         get_number(f, "field.", "amplitude"),
                                         get_number(f, "field.", "rate"),
                                         get_number_or(f, "phase", 0.0));
    if (kind == "foucault")
        return ScalarProfile::foucault_latitude(get_number(f, "field.", "rotation_rate"),
                                                get_number(f, "field.", "latitude"));
    bad_config("field.kind", "unknown scalar kind '" + kind + "'");
}

Quat parse_quat(const json& a, const std::string& path) {
    if (!a.is_array() || a.size() != 4) bad_config(path, "must be a 4-element array [w,x,y,z]");
    Quat u{a[0].get<double>(), a[1].get<double>(), a[2].get<double>(), a[3].get<double>()};
    if (!is_unit(u)) bad_config(path, "must be a unit quaternion");
    return u;
}

}  // namespace

ScenarioConfig parse_config(const json& j) {
    ScenarioConfig c;
    c.omega0 = get_number(j, "", "omega0");
    if (!(c.omega0 > 0.0)) bad_config("omega0", "must be positive");
    c.dimension = j.contains("dimension") ? j.at("dimension").get<int>() : 4;
    if (c.dimension != 2 && c.dimension != 4) bad_config("dimension", "must be 2 or 4");

    if (!j.contains("field")) bad_config("field", "missing");
    if (c.dimension == 4)
        c.profile = parse_field(j.at("field"), j);
    else
        c.scalar_profile = parse_scalar_field(j.at("field"));

    if (!j.contains("initial")) bad_config("initial", "missing");
    const json& init = j.at("initial");
    int forms = 0;
    if (init.contains("spinor")) {
        ++forms;
        const json& s = init.at("spinor");
        c.init_spinor = Spinor{get_complex(s, "initial.spinor.", "chi_plus"),
                               get_complex(s, "initial.spinor.", "chi_minus")};
        if (std::abs(norm(*c.init_spinor) - 1.0) > 1e-9)
            bad_config("initial.spinor", "must be normalized");
        if (s.contains("u")) c.u = parse_quat(s.at("u"), "initial.spinor.u");
        if (s.contains("u2")) c.u2 = parse_quat(s.at("u2"), "initial.spinor.u2");
    }
    if (init.contains("oscillator")) {
        ++forms;
        const json& o = init.at("oscillator");
        const size_t want = static_cast<size_t>(c.dimension);
        if (!o.contains("x") || !o.contains("v") || o.at("x").size() != want ||
            o.at("v").size() != want)
            bad_config("initial.oscillator", "needs x and v arrays of length " +
                                                 std::to_string(want));
        if (c.dimension == 4) {
            OscState st;
            for (int k = 0; k < 4; ++k) {
                st.x[k] = o.at("x")[static_cast<size_t>(k)].get<double>();
                st.v[k] = o.at("v")[static_cast<size_t>(k)].get<double>();
            }
            c.init_osc = st;
        } else {
            c.init_osc2 = Osc2State{o.at("x")[0].get<double>(), o.at("x")[1].get<double>(),
                                    o.at("v")[0].get<double>(), o.at("v")[1].get<double>()};
        }
    }
    if (init.contains("modes")) {
        ++forms;
        const json& m = init.at("modes");
        c.init_modes = ModeCoefficients{get_complex(m, "initial.modes.", "a"),
                                        get_complex(m, "initial.modes.", "b"),
                                        get_complex(m, "initial.modes.", "c"),
                                        get_complex(m, "initial.modes.", "d")};
        if (!c.profile || !c.profile->is_constant())
            bad_config("initial.modes", "requires a constant field");
    }
    if (forms != 1) bad_config("initial", "exactly one of spinor/oscillator/modes required");
    if (c.dimension == 2 && !c.init_osc2)
        bad_config("initial", "dimension 2 requires the oscillator form");

    if (!j.contains("run")) bad_config("run", "missing");
    const json& r = j.at("run");
    c.run = {get_number(r, "run.", "t0"), get_number(r, "run.", "t1"), get_number(r, "run.", "dt")};
    if (!(c.run.t1 > c.run.t0)) bad_config("run.t1", "must exceed run.t0");
    if (!(c.run.dt > 0.0)) bad_config("run.dt", "must be positive");

    if (j.contains("outputs")) {
        const json& o = j.at("outputs");
        if (o.contains("observables"))
            c.observables = o.at("observables").get<std::vector<std::string>>();
        c.spectrum_component = o.contains("spectrum_component")
                                   ? o.at("spectrum_component").get<int>()
                                   : 0;
        for (const auto& name : c.observables)
            if (name != "spectrum" && name != "geometric_phase" && name != "precession" &&
                name != "compare" && name != "hidden_variable")
                bad_config("outputs.observables", "unknown observable '" + name + "'");
    }
    return c;
}

ScenarioConfig parse_config_text(const std::string& text) {
    json j = json::parse(text, nullptr, false);
    if (j.is_discarded()) bad_config("<config>", "not valid JSON");
    return parse_config(j);
}

namespace {

bool wants(const ScenarioConfig& c, const char* name) {
    for (const auto& o : c.observables)
        if (o == name) return true;
    return false;
}

class CsvWriter {
public:
    explicit CsvWriter(const std::filesystem::path& path) : out_(path, std::ios::binary) {
        if (!out_) fail(Errc::IoError, "cannot open " + path.string() + " for writing");
    }
    void header(const std::string& h) { out_ << h << "\n"; }
    void row(const std::vector<double>& values) {
        char buf[32];
        for (size_t k = 0; k < values.size(); ++k) {
            std::snprintf(buf, sizeof(buf), "%.17g", values[k]);
            if (k) out_ << ',';
            out_ << buf;
        }
        out_ << "\n";
        if (!out_) fail(Errc::IoError, "write failure");
    }

private:
    std::ofstream out_;
};

void write_json(const json& j, const std::filesystem::path& path) {
    std::ofstream out(path, std::ios::binary);
    if (!out) fail(Errc::IoError, "cannot open " + path.string() + " for writing");
    out << j.dump(2) << "\n";
    if (!out) fail(Errc::IoError, "write failure");
}

OscState initial_state_4d(const ScenarioConfig& c) {
    if (c.init_spinor)
        return spinor_to_oscillator_init(*c.init_spinor, c.u,
                                         c.profile->sample(c.run.t0).beta, c.omega0);
    if (c.init_osc) return *c.init_osc;
    return analytic_oscillator(*c.init_modes, c.profile->constant_beta(), c.omega0, c.run.t0);
}

void write_osc_trajectory_csv(const OscTrajectory& traj, const FieldProfile& profile,
                              const Quat& u, double omega0, const std::filesystem::path& path) {
    CsvWriter csv(path);
    csv.header(
        "t,x1,x2,x3,x4,v1,v2,v3,v4,p1,p2,p3,p4,L2,chi_plus_re,chi_plus_im,chi_minus_re,"
        "chi_minus_im,norm,Sx,Sy,Sz");
    for (size_t k = 0; k < traj.size(); ++k) {
        const double t = traj.time_at(k);
        const OscState& s = traj.samples[k];
        const Eigen::Vector3d beta = profile.sample(t).beta;
        const Eigen::Vector4d p = canonical_momentum(s, beta);
        const double l2 = lagrangian_L2(s, beta, omega0);
        const Spinor chi = extract_spinor(s, u);
        std::vector<double> row{t};
        for (int i = 0; i < 4; ++i) row.push_back(s.x[i]);
        for (int i = 0; i < 4; ++i) row.push_back(s.v[i]);
        for (int i = 0; i < 4; ++i) row.push_back(p[i]);
        row.push_back(l2);
        row.insert(row.end(), {chi.plus.real(), chi.plus.imag(), chi.minus.real(),
                               chi.minus.imag(), norm(chi)});
        row.push_back(spin_expectation(s, beta, Eigen::Vector3d::UnitX(), omega0));
        row.push_back(spin_expectation(s, beta, Eigen::Vector3d::UnitY(), omega0));
        row.push_back(spin_expectation(s, beta, Eigen::Vector3d::UnitZ(), omega0));
        csv.row(row);
    }
}

// max-norm deviation of the extracted spinor trajectory from the SPE one
double compare_deviation(const OscTrajectory& osc, const Quat& u, const SpinorTrajectory& spe,
                         std::vector<double>* series) {
    double max_dev = 0.0;
    for (size_t k = 0; k < osc.size(); ++k) {
        const Spinor a = extract_spinor(osc.samples[k], u);
        const Spinor& b = spe.samples[k];
        const double dev = std::max(std::abs(a.plus - b.plus), std::abs(a.minus - b.minus));
        if (series) series->push_back(dev);
        max_dev = std::max(max_dev, dev);
    }
    return max_dev;
}

json run_scenario_2d(const ScenarioConfig& c, const std::filesystem::path& out_dir) {
    const auto traj =
        integrate_foucault(*c.scalar_profile, c.omega0, *c.init_osc2, c.run.t0, c.run.t1, c.run.dt);
    CsvWriter csv(out_dir / "trajectory.csv");
    csv.header("t,x1,x2,v1,v2,p1,p2,L1");
    for (size_t k = 0; k < traj.size(); ++k) {
        const double t = traj.time_at(k);
        const Osc2State& s = traj.samples[k];
        const double b = c.scalar_profile->sample(t).beta;
        csv.row({t, s.x1, s.x2, s.v1, s.v2, s.v1 - b * s.x2, s.v2 + b * s.x1,
                 foucault_L1(s, b, c.omega0)});
    }
    json summary;
    summary["dimension"] = 2;
    summary["omega0"] = c.omega0;
    if (wants(c, "spectrum")) {
        std::vector<double> series;
        series.reserve(traj.size());
        for (const auto& s : traj.samples)
            series.push_back(c.spectrum_component == 0 ? s.x1 : s.x2);
        const SpectrumEstimate est = estimate_spectrum(series, traj.dt);
        json peaks = json::array(), amps = json::array();
        for (const auto& p : est.peaks) {
            peaks.push_back(p.frequency);
            amps.push_back(p.amplitude);
        }
        summary["spectral_peaks"] = peaks;
        summary["spectral_peak_amplitudes"] = amps;
        summary["spectral_resolution"] = est.resolution;
    }
    write_json(summary, out_dir / "summary.json");
    return summary;
}

}  // namespace

json run_scenario(const ScenarioConfig& c, const std::filesystem::path& out_dir) {
    std::error_code ec;
    std::filesystem::create_directories(out_dir, ec);
    if (ec) fail(Errc::IoError, "cannot create output directory " + out_dir.string());

    if (c.dimension == 2) return run_scenario_2d(c, out_dir);

    const FieldProfile& profile = *c.profile;
    const OscState init = initial_state_4d(c);
    const OscTrajectory traj =
        integrate_oscillator(profile, c.omega0, init, c.run.t0, c.run.t1, c.run.dt);

    write_osc_trajectory_csv(traj, profile, c.u, c.omega0, out_dir / "trajectory.csv");

    json summary;
    summary["dimension"] = 4;
    summary["omega0"] = c.omega0;
    summary["profile"] = profile.describe();

    double max_l2 = 0.0;
    {
        CsvWriter obs(out_dir / "observables.csv");
        obs.header("t,L2_residual,norm,Sx,Sy,Sz,bx,by,bz");
        for (size_t k = 0; k < traj.size(); ++k) {
            const double t = traj.time_at(k);
            const OscState& s = traj.samples[k];
            const Eigen::Vector3d beta = profile.sample(t).beta;
            const double resid = check_quantum_constraint(s, beta, c.omega0);
            max_l2 = std::max(max_l2, resid);
            const Spinor chi = extract_spinor(s, c.u);
            const SpinVector bv = bloch_vector(chi);
            obs.row({t, resid, norm(chi),
                     spin_expectation(s, beta, Eigen::Vector3d::UnitX(), c.omega0),
                     spin_expectation(s, beta, Eigen::Vector3d::UnitY(), c.omega0),
                     spin_expectation(s, beta, Eigen::Vector3d::UnitZ(), c.omega0), bv.sx, bv.sy,
                     bv.sz});
        }
    }
    summary["max_L2_residual"] = max_l2;

    if (wants(c, "spectrum")) {
        const SpectrumEstimate est = frequency_split(traj, c.spectrum_component);
        json peaks = json::array(), amps = json::array();
        for (const auto& p : est.peaks) {
            peaks.push_back(p.frequency);
            amps.push_back(p.amplitude);
        }
        summary["spectral_peaks"] = peaks;
        summary["spectral_peak_amplitudes"] = amps;
        summary["spectral_resolution"] = est.resolution;
    }

    if (wants(c, "geometric_phase")) {
        if (!c.init_spinor)
            fail(Errc::ConfigInvalid, "outputs.observables: geometric_phase needs a spinor start");
        summary["phase_residual"] =
            geometric_phase_check(profile, *c.init_spinor, c.omega0, std::min(c.run.dt, 1e-4));
    }

    const bool need_spe = c.init_spinor && (wants(c, "precession") || wants(c, "compare") ||
                                            wants(c, "hidden_variable"));
    std::optional<SpinorTrajectory> spe;
    if (need_spe)
        spe = integrate_spe(profile, c.omega0, *c.init_spinor, c.run.t0, c.run.t1, c.run.dt);

    if (wants(c, "precession")) {
        if (!spe || !profile.is_constant())
            fail(Errc::ConfigInvalid,
                 "outputs.observables: precession needs a spinor start and constant field");
        summary["precession_rate"] = precession_rate(*spe, profile.constant_beta());
    }

    if (wants(c, "compare")) {
        if (!spe) fail(Errc::ConfigInvalid, "outputs.observables: compare needs a spinor start");
        std::vector<double> series;
        series.reserve(traj.size());
        const double max_dev = compare_deviation(traj, c.u, *spe, &series);
        CsvWriter dev(out_dir / "deviation.csv");
        dev.header("t,deviation");
        for (size_t k = 0; k < series.size(); ++k) dev.row({traj.time_at(k), series[k]});
        summary["max_formulation_deviation"] = max_dev;
    }

    if (wants(c, "hidden_variable")) {
        if (!spe || !c.u2)
            fail(Errc::ConfigInvalid,
                 "outputs.observables: hidden_variable needs a spinor start and initial.spinor.u2");
        const OscState init2 = spinor_to_oscillator_init(*c.init_spinor, *c.u2,
                                                         profile.sample(c.run.t0).beta, c.omega0);
        const OscTrajectory traj2 =
            integrate_oscillator(profile, c.omega0, init2, c.run.t0, c.run.t1, c.run.dt);
        write_osc_trajectory_csv(traj2, profile, *c.u2, c.omega0, out_dir / "trajectory_u2.csv");
        double osc_diff = 0.0;
        for (size_t k = 0; k < traj.size(); ++k) {
            osc_diff = std::max(osc_diff, (traj.samples[k].x - traj2.samples[k].x)
                                              .cwiseAbs()
                                              .maxCoeff());
        }
        summary["hidden_osc_difference"] = osc_diff;
        summary["hidden_spinor_deviation"] = compare_deviation(traj2, *c.u2, *spe, nullptr);
    }

    write_json(summary, out_dir / "summary.json");
    return summary;
}

json compare_formulations(const ScenarioConfig& c, const std::filesystem::path& out_dir) {
    if (c.dimension != 4 || !c.init_spinor)
        fail(Errc::ConfigInvalid, "initial: compare requires dimension 4 and a spinor start");
    ScenarioConfig cc = c;
    cc.observables = {"compare"};
    if (c.u2) cc.observables.push_back("hidden_variable");
    return run_scenario(cc, out_dir);
}

namespace {

const std::map<std::string, std::string>& bundled() {
    static const std::map<std::string, std::string> scenarios = {
        {"zeeman_constant_z", R"({
  "omega0": 10.0,
  "field": {"kind": "constant", "beta": [0.0, 0.0, 0.5]},
  "initial": {"spinor": {
    "chi_plus": [0.70710678118654746, 0.0],
    "chi_minus": [0.70710678118654746, 0.0],
    "u": [0.80582296402538023, 0.40291148201269011, 0.40291148201269011, 0.16116459280507606]}},
  "run": {"t0": 0.0, "t1": 50.0, "dt": 0.001},
  "outputs": {"observables": ["spectrum", "compare"]}
})"},
        {"geometric_phase", R"({
  "omega0": 10.0,
  "field": {"kind": "constant", "beta": [0.0, 0.0, 0.5]},
  "initial": {"spinor": {"chi_plus": [0.6, 0.0], "chi_minus": [0.48, 0.64]}},
  "run": {"t0": 0.0, "t1": 7.0, "dt": 0.0001},
  "outputs": {"observables": ["geometric_phase"]}
})"},
        {"gyromagnetic_doubling", R"({
  "omega0": 10.0,
  "field": {"kind": "constant", "beta": [0.0, 0.0, 0.5]},
  "initial": {"spinor": {
    "chi_plus": [0.70710678118654746, 0.0],
    "chi_minus": [0.70710678118654746, 0.0],
    "u": [0.80582296402538023, 0.40291148201269011, 0.40291148201269011, 0.16116459280507606]}},
  "run": {"t0": 0.0, "t1": 50.0, "dt": 0.001},
  "outputs": {"observables": ["precession", "spectrum"]}
})"},
        {"rabi_rotating_field", R"({
  "omega0": 10.0,
  "field": {"kind": "rotating", "axis": [0.0, 0.0, 1.0], "amplitude": 0.1, "rate": 1.0, "axial": 0.5},
  "initial": {"spinor": {
    "chi_plus": [1.0, 0.0],
    "chi_minus": [0.0, 0.0],
    "u": [0.80582296402538023, 0.40291148201269011, 0.40291148201269011, 0.16116459280507606]}},
  "run": {"t0": 0.0, "t1": 50.0, "dt": 0.001},
  "outputs": {"observables": ["compare"]}
})"},
        {"foucault_precession", R"({
  "omega0": 10.0,
  "dimension": 2,
  "field": {"kind": "constant", "beta": 0.3},
  "initial": {"oscillator": {"x": [1.0, 0.0], "v": [0.0, 0.0]}},
  "run": {"t0": 0.0, "t1": 50.0, "dt": 0.001},
  "outputs": {"observables": ["spectrum"]}
})"},
        {"hidden_variable_demo", R"({
  "omega0": 10.0,
  "field": {"kind": "constant", "beta": [0.2, 0.3, 0.4]},
  "initial": {"spinor": {
    "chi_plus": [1.0, 0.0],
    "chi_minus": [0.0, 0.0],
    "u": [1.0, 0.0, 0.0, 0.0],
    "u2": [0.0, 0.0, 0.0, 1.0]}},
  "run": {"t0": 0.0, "t1": 20.0, "dt": 0.001},
  "outputs": {"observables": ["compare", "hidden_variable"]}
})"},
    };
    return scenarios;
}

}  // namespace

std::vector<std::string> bundled_scenario_names() {
    std::vector<std::string> names;
    for (const auto& [name, _] : bundled()) names.push_back(name);
    return names;
}

const std::string* bundled_scenario_config(const std::string& name) {
    const auto& m = bundled();
    const auto it = m.find(name);
    return it == m.end() ? nullptr : &it->second;
}

}  // namespace spinosc
