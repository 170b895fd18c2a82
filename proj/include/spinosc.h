/*
 * spinosc - classical coupled-oscillator analog of a spin-1/2 state.
 *
 * C API over the C++ core. All functions that can fail return a
 * spinosc_status; on failure spinosc_last_error() describes the problem
 * (thread-local). Opaque handles own their resources and are released with
 * the matching _free function.
 */
#ifndef SPINOSC_H
#define SPINOSC_H

#include <stddef.h>

#ifdef __cplusplus
extern "C" {
#endif

typedef enum spinosc_status {
    SPINOSC_OK = 0,
    SPINOSC_ERR_INVALID_ARGUMENT = 1,
    SPINOSC_ERR_NON_UNIT_QUATERNION = 2,
    SPINOSC_ERR_NOT_NORMALIZED = 3,
    SPINOSC_ERR_DEGENERATE_SPINOR = 4,
    SPINOSC_ERR_OUT_OF_DOMAIN = 5,
    SPINOSC_ERR_STEP_TOO_LARGE = 6,
    SPINOSC_ERR_NONFINITE = 7,
    SPINOSC_ERR_SINGULAR_MODE_BASIS = 8,
    SPINOSC_ERR_TOO_SHORT = 9,
    SPINOSC_ERR_BAD_AXIS = 10,
    SPINOSC_ERR_DEGENERATE_GEOMETRY = 11,
    SPINOSC_ERR_CONFIG = 12,
    SPINOSC_ERR_IO = 13,
    SPINOSC_ERR_INTERNAL = 14
} spinosc_status;

/* w + ix + jy + kz, Hamilton convention */
typedef struct spinosc_quat {
    double w, x, y, z;
} spinosc_quat;

typedef struct spinosc_spinor {
    double re_plus, im_plus;
    double re_minus, im_minus;
} spinosc_spinor;

typedef struct spinosc_osc_state {
    double x[4];
    double v[4];
} spinosc_osc_state;

typedef struct spinosc_field_sample {
    double beta[3];
    double beta_dot[3];
} spinosc_field_sample;

typedef struct spinosc_profile spinosc_profile;
typedef struct spinosc_osc_trajectory spinosc_osc_trajectory;
typedef struct spinosc_spinor_trajectory spinosc_spinor_trajectory;

const char* spinosc_status_name(spinosc_status status);
/* Message for the most recent failure on this thread; empty string if none. */
const char* spinosc_last_error(void);

/* ---- quaternion algebra ---- */
spinosc_quat spinosc_qmul(spinosc_quat a, spinosc_quat b);
spinosc_quat spinosc_qconj(spinosc_quat a);
double spinosc_qnorm(spinosc_quat a);
spinosc_quat spinosc_spinor_to_quat(spinosc_spinor s);
spinosc_status spinosc_quat_to_spinor_u(spinosc_quat q, spinosc_quat u, spinosc_spinor* out);
spinosc_quat spinosc_beta_to_quat(const double beta[3]);
/* u = q s^-1; not renormalized, the caller checks unit norm. */
spinosc_status spinosc_fit_hidden_quaternion(spinosc_quat q, spinosc_spinor s, spinosc_quat* out);

/* ---- field profiles ---- */
spinosc_status spinosc_profile_constant(const double beta[3], spinosc_profile** out);
spinosc_status spinosc_profile_rotating(const double axis[3], double amplitude, double rate,
                                        double axial, double phase, spinosc_profile** out);
spinosc_status spinosc_profile_linear_ramp(const double beta0[3], const double slope[3],
                                           spinosc_profile** out);
spinosc_status spinosc_profile_sinusoidal(const double beta0[3], const double amplitude[3],
                                          double rate, double phase, spinosc_profile** out);
/* values holds 3*(n_times+1) doubles: value i applies on [times[i-1], times[i]). */
spinosc_status spinosc_profile_piecewise(const double* times, size_t n_times, const double* values,
                                         spinosc_profile** out);
spinosc_status spinosc_profile_set_domain(spinosc_profile* profile, double t_min, double t_max);
spinosc_status spinosc_profile_sample(const spinosc_profile* profile, double t,
                                      spinosc_field_sample* out);
void spinosc_profile_free(spinosc_profile* profile);
/* beta = B * charge_to_mass / 2 */
spinosc_status spinosc_beta_from_magnetic_field(const double b_tesla[3], double charge_to_mass,
                                                double beta_out[3]);

/* ---- dynamics ---- */
/* Row-major 4x4 coupling matrix. */
void spinosc_coupling_matrix(const double beta[3], double out[16]);
void spinosc_canonical_momentum(const spinosc_osc_state* state, const double beta[3],
                                double p_out[4]);
double spinosc_lagrangian_l2(const spinosc_osc_state* state, const double beta[3], double omega0);
spinosc_status spinosc_integrate_oscillator(const spinosc_profile* profile, double omega0,
                                            const spinosc_osc_state* initial, double t0, double t1,
                                            double dt, spinosc_osc_trajectory** out);
spinosc_status spinosc_integrate_spe(const spinosc_profile* profile, double omega0,
                                     spinosc_spinor initial, double t0, double t1, double dt,
                                     spinosc_spinor_trajectory** out);
size_t spinosc_osc_trajectory_size(const spinosc_osc_trajectory* traj);
double spinosc_osc_trajectory_time(const spinosc_osc_trajectory* traj, size_t i);
spinosc_status spinosc_osc_trajectory_state(const spinosc_osc_trajectory* traj, size_t i,
                                            spinosc_osc_state* out);
void spinosc_osc_trajectory_free(spinosc_osc_trajectory* traj);
size_t spinosc_spinor_trajectory_size(const spinosc_spinor_trajectory* traj);
double spinosc_spinor_trajectory_time(const spinosc_spinor_trajectory* traj, size_t i);
spinosc_status spinosc_spinor_trajectory_state(const spinosc_spinor_trajectory* traj, size_t i,
                                               spinosc_spinor* out);
void spinosc_spinor_trajectory_free(spinosc_spinor_trajectory* traj);

/* ---- classical <-> quantum mapping ---- */
spinosc_status spinosc_spinor_to_oscillator_init(spinosc_spinor s, spinosc_quat u,
                                                 const double beta_at_t0[3], double omega0,
                                                 spinosc_osc_state* out);
spinosc_status spinosc_extract_spinor(const spinosc_osc_state* state, spinosc_quat u,
                                      spinosc_spinor* out);
double spinosc_check_quantum_constraint(const spinosc_osc_state* state, const double beta[3],
                                        double omega0);
/* coeffs: (Re a, Im a, Re b, Im b, Re c, Im c, Re d, Im d) */
spinosc_status spinosc_decompose_modes(const spinosc_osc_state* state, const double beta[3],
                                       double omega0, double coeffs_out[8]);

/* ---- observables ---- */
spinosc_status spinosc_spin_expectation(const spinosc_osc_state* state, const double beta[3],
                                        const double axis[3], double omega0, double* out);
spinosc_status spinosc_bloch_vector(spinosc_spinor s, double out[3]);
/* Writes up to max_peaks peak frequencies (ascending) and their count. */
spinosc_status spinosc_frequency_split(const spinosc_osc_trajectory* traj, int component,
                                       double* peaks_out, size_t max_peaks, size_t* n_peaks,
                                       double* resolution_out);
spinosc_status spinosc_geometric_phase_check(const spinosc_profile* profile, spinosc_spinor s0,
                                             double omega0, double dt, double* residual_out);
spinosc_status spinosc_precession_rate(const spinosc_spinor_trajectory* traj,
                                       const double axis[3], double* rate_out);

/* ---- scenario runner ---- */
/* Both take a JSON scenario config and write CSV/JSON artifacts into out_dir.
 * On success *summary_json receives the run summary (free with
 * spinosc_string_free). */
spinosc_status spinosc_run_scenario(const char* config_json, const char* out_dir,
                                    char** summary_json);
spinosc_status spinosc_compare_formulations(const char* config_json, const char* out_dir,
                                            char** summary_json);
/* Newline-separated bundled scenario names. Free with spinosc_string_free. */
char* spinosc_bundled_scenario_names(void);
/* Config text of a bundled scenario, or NULL if the name is unknown. */
char* spinosc_bundled_scenario_config(const char* name);
void spinosc_string_free(char* s);

#ifdef __cplusplus
}
#endif

#endif /* SPINOSC_H */
