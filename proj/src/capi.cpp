// extern-C surface over the C++ core. Exceptions are translated to status
// codes; the message is kept in a thread-local slot for spinosc_last_error().

#include "spinosc.h"

#include <algorithm>
#include <cstdlib>
#include <cstring>
#include <new>
#include <nlohmann/json.hpp>
#include <string>

#include "core/dynamics.hpp"
#include "core/fields.hpp"
#include "core/foucault.hpp"
#include "core/mapping.hpp"
#include "core/observables.hpp"
#include "core/quat.hpp"
#include "core/scenario.hpp"

namespace {

thread_local std::string g_last_error;

spinosc_status to_status(spinosc::Errc code) { return static_cast<spinosc_status>(code); }

template <class Fn>
spinosc_status guarded(Fn&& fn) {
    try {
        fn();
        g_last_error.clear();
        return SPINOSC_OK;
    } catch (const spinosc::Error& e) {
        g_last_error = e.what();
        return to_status(e.code());
    } catch (const std::bad_alloc&) {
        g_last_error = "out of memory";
        return SPINOSC_ERR_INTERNAL;
    } catch (const std::exception& e) {
        g_last_error = e.what();
        return SPINOSC_ERR_INTERNAL;
    }
}

spinosc::Quat from_c(spinosc_quat q) { return {q.w, q.x, q.y, q.z}; }
spinosc_quat to_c(const spinosc::Quat& q) { return {q.w, q.x, q.y, q.z}; }
spinosc::Spinor from_c(spinosc_spinor s) {
    return {{s.re_plus, s.im_plus}, {s.re_minus, s.im_minus}};
}
spinosc_spinor to_c(const spinosc::Spinor& s) {
    return {s.plus.real(), s.plus.imag(), s.minus.real(), s.minus.imag()};
}
Eigen::Vector3d vec3(const double v[3]) { return {v[0], v[1], v[2]}; }
spinosc::OscState from_c(const spinosc_osc_state& s) {
    spinosc::OscState out;
    for (int k = 0; k < 4; ++k) {
        out.x[k] = s.x[k];
        out.v[k] = s.v[k];
    }
    return out;
}
spinosc_osc_state to_c(const spinosc::OscState& s) {
    spinosc_osc_state out;
    for (int k = 0; k < 4; ++k) {
        out.x[k] = s.x[k];
        out.v[k] = s.v[k];
    }
    return out;
}

char* dup_string(const std::string& s) {
    char* out = static_cast<char*>(std::malloc(s.size() + 1));
    if (out) std::memcpy(out, s.c_str(), s.size() + 1);
    return out;
}

}  // namespace

struct spinosc_profile {
    spinosc::FieldProfile impl;
};
struct spinosc_osc_trajectory {
    spinosc::OscTrajectory impl;
};
struct spinosc_spinor_trajectory {
    spinosc::SpinorTrajectory impl;
};

extern "C" {

const char* spinosc_status_name(spinosc_status status) {
    switch (status) {
        case SPINOSC_OK: return "ok";
        case SPINOSC_ERR_INVALID_ARGUMENT: return "invalid_argument";
        case SPINOSC_ERR_NON_UNIT_QUATERNION: return "non_unit_hidden_quaternion";
        case SPINOSC_ERR_NOT_NORMALIZED: return "not_normalized";
        case SPINOSC_ERR_DEGENERATE_SPINOR: return "degenerate_spinor";
        case SPINOSC_ERR_OUT_OF_DOMAIN: return "out_of_domain";
        case SPINOSC_ERR_STEP_TOO_LARGE: return "step_too_large";
        case SPINOSC_ERR_NONFINITE: return "non_finite";
        case SPINOSC_ERR_SINGULAR_MODE_BASIS: return "singular_mode_basis";
        case SPINOSC_ERR_TOO_SHORT: return "too_short";
        case SPINOSC_ERR_BAD_AXIS: return "bad_axis";
        case SPINOSC_ERR_DEGENERATE_GEOMETRY: return "degenerate_geometry";
        case SPINOSC_ERR_CONFIG: return "config_invalid";
        case SPINOSC_ERR_IO: return "io_error";
        case SPINOSC_ERR_INTERNAL: return "internal";
    }
    return "unknown";
}

const char* spinosc_last_error(void) { return g_last_error.c_str(); }

spinosc_quat spinosc_qmul(spinosc_quat a, spinosc_quat b) {
    return to_c(spinosc::qmul(from_c(a), from_c(b)));
}

spinosc_quat spinosc_qconj(spinosc_quat a) { return to_c(spinosc::conj(from_c(a))); }

double spinosc_qnorm(spinosc_quat a) { return spinosc::norm(from_c(a)); }

spinosc_quat spinosc_spinor_to_quat(spinosc_spinor s) {
    return to_c(spinosc::spinor_to_quat(from_c(s)));
}

spinosc_status spinosc_quat_to_spinor_u(spinosc_quat q, spinosc_quat u, spinosc_spinor* out) {
    return guarded([&] { *out = to_c(spinosc::quat_to_spinor_u(from_c(q), from_c(u))); });
}

spinosc_quat spinosc_beta_to_quat(const double beta[3]) {
    return to_c(spinosc::beta_to_quat(vec3(beta)));
}

spinosc_status spinosc_fit_hidden_quaternion(spinosc_quat q, spinosc_spinor s, spinosc_quat* out) {
    return guarded([&] { *out = to_c(spinosc::fit_hidden_quaternion(from_c(q), from_c(s))); });
}

spinosc_status spinosc_profile_constant(const double beta[3], spinosc_profile** out) {
    return guarded([&] { *out = new spinosc_profile{spinosc::FieldProfile::constant(vec3(beta))}; });
}

spinosc_status spinosc_profile_rotating(const double axis[3], double amplitude, double rate,
                                        double axial, double phase, spinosc_profile** out) {
    return guarded([&] {
        *out = new spinosc_profile{spinosc::FieldProfile::rotating_about_axis(
            vec3(axis), amplitude, rate, axial, phase)};
    });
}

spinosc_status spinosc_profile_linear_ramp(const double beta0[3], const double slope[3],
                                           spinosc_profile** out) {
    return guarded([&] {
        *out = new spinosc_profile{spinosc::FieldProfile::linear_ramp(vec3(beta0), vec3(slope))};
    });
}

spinosc_status spinosc_profile_sinusoidal(const double beta0[3], const double amplitude[3],
                                          double rate, double phase, spinosc_profile** out) {
    return guarded([&] {
        *out = new spinosc_profile{
            spinosc::FieldProfile::sinusoidal(vec3(beta0), vec3(amplitude), rate, phase)};
    });
}

spinosc_status spinosc_profile_piecewise(const double* times, size_t n_times, const double* values,
                                         spinosc_profile** out) {
    return guarded([&] {
        std::vector<double> ts(times, times + n_times);
        std::vector<Eigen::Vector3d> vs;
        for (size_t k = 0; k <= n_times; ++k) vs.emplace_back(vec3(values + 3 * k));
        *out = new spinosc_profile{
            spinosc::FieldProfile::piecewise_constant(std::move(ts), std::move(vs))};
    });
}

spinosc_status spinosc_profile_set_domain(spinosc_profile* profile, double t_min, double t_max) {
    return guarded([&] { profile->impl = profile->impl.with_domain(t_min, t_max); });
}

spinosc_status spinosc_profile_sample(const spinosc_profile* profile, double t,
                                      spinosc_field_sample* out) {
    return guarded([&] {
        const spinosc::FieldSample s = profile->impl.sample(t);
        Eigen::Vector3d::Map(out->beta) = s.beta;
        Eigen::Vector3d::Map(out->beta_dot) = s.beta_dot;
    });
}

void spinosc_profile_free(spinosc_profile* profile) { delete profile; }

spinosc_status spinosc_beta_from_magnetic_field(const double b_tesla[3], double charge_to_mass,
                                                double beta_out[3]) {
    return guarded([&] {
        Eigen::Vector3d::Map(beta_out) = spinosc::from_magnetic_field(vec3(b_tesla), charge_to_mass);
    });
}

void spinosc_coupling_matrix(const double beta[3], double out[16]) {
    Eigen::Matrix<double, 4, 4, Eigen::RowMajor>::Map(out) =
        spinosc::build_coupling_matrix(vec3(beta));
}

void spinosc_canonical_momentum(const spinosc_osc_state* state, const double beta[3],
                                double p_out[4]) {
    Eigen::Vector4d::Map(p_out) = spinosc::canonical_momentum(from_c(*state), vec3(beta));
}

double spinosc_lagrangian_l2(const spinosc_osc_state* state, const double beta[3], double omega0) {
    return spinosc::lagrangian_L2(from_c(*state), vec3(beta), omega0);
}

spinosc_status spinosc_integrate_oscillator(const spinosc_profile* profile, double omega0,
                                            const spinosc_osc_state* initial, double t0, double t1,
                                            double dt, spinosc_osc_trajectory** out) {
    return guarded([&] {
        *out = new spinosc_osc_trajectory{
            spinosc::integrate_oscillator(profile->impl, omega0, from_c(*initial), t0, t1, dt)};
    });
}

spinosc_status spinosc_integrate_spe(const spinosc_profile* profile, double omega0,
                                     spinosc_spinor initial, double t0, double t1, double dt,
                                     spinosc_spinor_trajectory** out) {
    return guarded([&] {
        *out = new spinosc_spinor_trajectory{
            spinosc::integrate_spe(profile->impl, omega0, from_c(initial), t0, t1, dt)};
    });
}

size_t spinosc_osc_trajectory_size(const spinosc_osc_trajectory* traj) { return traj->impl.size(); }

double spinosc_osc_trajectory_time(const spinosc_osc_trajectory* traj, size_t i) {
    return traj->impl.time_at(i);
}

spinosc_status spinosc_osc_trajectory_state(const spinosc_osc_trajectory* traj, size_t i,
                                            spinosc_osc_state* out) {
    return guarded([&] {
        if (i >= traj->impl.size())
            spinosc::fail(spinosc::Errc::InvalidArgument, "trajectory index out of range");
        *out = to_c(traj->impl.samples[i]);
    });
}

void spinosc_osc_trajectory_free(spinosc_osc_trajectory* traj) { delete traj; }

size_t spinosc_spinor_trajectory_size(const spinosc_spinor_trajectory* traj) {
    return traj->impl.size();
}

double spinosc_spinor_trajectory_time(const spinosc_spinor_trajectory* traj, size_t i) {
    return traj->impl.time_at(i);
}

spinosc_status spinosc_spinor_trajectory_state(const spinosc_spinor_trajectory* traj, size_t i,
                                               spinosc_spinor* out) {
    return guarded([&] {
        if (i >= traj->impl.size())
            spinosc::fail(spinosc::Errc::InvalidArgument, "trajectory index out of range");
        *out = to_c(traj->impl.samples[i]);
    });
}

void spinosc_spinor_trajectory_free(spinosc_spinor_trajectory* traj) { delete traj; }

spinosc_status spinosc_spinor_to_oscillator_init(spinosc_spinor s, spinosc_quat u,
                                                 const double beta_at_t0[3], double omega0,
                                                 spinosc_osc_state* out) {
    return guarded([&] {
        *out = to_c(spinosc::spinor_to_oscillator_init(from_c(s), from_c(u), vec3(beta_at_t0),
                                                       omega0));
    });
}

spinosc_status spinosc_extract_spinor(const spinosc_osc_state* state, spinosc_quat u,
                                      spinosc_spinor* out) {
    return guarded([&] { *out = to_c(spinosc::extract_spinor(from_c(*state), from_c(u))); });
}

double spinosc_check_quantum_constraint(const spinosc_osc_state* state, const double beta[3],
                                        double omega0) {
    return spinosc::check_quantum_constraint(from_c(*state), vec3(beta), omega0);
}

spinosc_status spinosc_decompose_modes(const spinosc_osc_state* state, const double beta[3],
                                       double omega0, double coeffs_out[8]) {
    return guarded([&] {
        const spinosc::ModeCoefficients mc =
            spinosc::decompose_modes(from_c(*state), vec3(beta), omega0);
        coeffs_out[0] = mc.a.real();
        coeffs_out[1] = mc.a.imag();
        coeffs_out[2] = mc.b.real();
        coeffs_out[3] = mc.b.imag();
        coeffs_out[4] = mc.c.real();
        coeffs_out[5] = mc.c.imag();
        coeffs_out[6] = mc.d.real();
        coeffs_out[7] = mc.d.imag();
    });
}

spinosc_status spinosc_spin_expectation(const spinosc_osc_state* state, const double beta[3],
                                        const double axis[3], double omega0, double* out) {
    return guarded(
        [&] { *out = spinosc::spin_expectation(from_c(*state), vec3(beta), vec3(axis), omega0); });
}

spinosc_status spinosc_bloch_vector(spinosc_spinor s, double out[3]) {
    return guarded([&] {
        const spinosc::SpinVector v = spinosc::bloch_vector(from_c(s));
        out[0] = v.sx;
        out[1] = v.sy;
        out[2] = v.sz;
    });
}

spinosc_status spinosc_frequency_split(const spinosc_osc_trajectory* traj, int component,
                                       double* peaks_out, size_t max_peaks, size_t* n_peaks,
                                       double* resolution_out) {
    return guarded([&] {
        const spinosc::SpectrumEstimate est = spinosc::frequency_split(traj->impl, component);
        *n_peaks = est.peaks.size();
        const size_t n = std::min(max_peaks, est.peaks.size());
        for (size_t k = 0; k < n; ++k) peaks_out[k] = est.peaks[k].frequency;
        if (resolution_out) *resolution_out = est.resolution;
    });
}

spinosc_status spinosc_geometric_phase_check(const spinosc_profile* profile, spinosc_spinor s0,
                                             double omega0, double dt, double* residual_out) {
    return guarded([&] {
        *residual_out = spinosc::geometric_phase_check(profile->impl, from_c(s0), omega0, dt);
    });
}

spinosc_status spinosc_precession_rate(const spinosc_spinor_trajectory* traj,
                                       const double axis[3], double* rate_out) {
    return guarded([&] { *rate_out = spinosc::precession_rate(traj->impl, vec3(axis)); });
}

spinosc_status spinosc_run_scenario(const char* config_json, const char* out_dir,
                                    char** summary_json) {
    return guarded([&] {
        const auto summary =
            spinosc::run_scenario(spinosc::parse_config_text(config_json), out_dir);
        if (summary_json) *summary_json = dup_string(summary.dump(2));
    });
}

spinosc_status spinosc_compare_formulations(const char* config_json, const char* out_dir,
                                            char** summary_json) {
    return guarded([&] {
        const auto summary =
            spinosc::compare_formulations(spinosc::parse_config_text(config_json), out_dir);
        if (summary_json) *summary_json = dup_string(summary.dump(2));
    });
}

char* spinosc_bundled_scenario_names(void) {
    std::string joined;
    for (const auto& name : spinosc::bundled_scenario_names()) {
        if (!joined.empty()) joined += '\n';
        joined += name;
    }
    return dup_string(joined);
}

char* spinosc_bundled_scenario_config(const char* name) {
    const std::string* cfg = spinosc::bundled_scenario_config(name);
    return cfg ? dup_string(*cfg) : nullptr;
}

void spinosc_string_free(char* s) { std::free(s); }

}  // extern "C"
