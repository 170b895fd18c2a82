#ifndef SPINOSC_CORE_FOUCAULT_HPP
#define SPINOSC_CORE_FOUCAULT_HPP

#include <Eigen/Dense>
#include <complex>

#include "dynamics.hpp"
#include "error.hpp"

namespace spinosc {

// The two-oscillator (Foucault-pendulum-like) analog with a scalar coupling.
struct Osc2State {
    double x1 = 0.0, x2 = 0.0;
    double v1 = 0.0, v2 = 0.0;
};

inline Osc2State operator+(const Osc2State& a, const Osc2State& b) {
    return {a.x1 + b.x1, a.x2 + b.x2, a.v1 + b.v1, a.v2 + b.v2};
}
inline Osc2State operator*(double s, const Osc2State& a) {
    return {s * a.x1, s * a.x2, s * a.v1, s * a.v2};
}

struct ScalarSample {
    double beta = 0.0;
    double beta_dot = 0.0;
};

// Scalar coupling profile beta(t) with analytic derivative.
class ScalarProfile {
public:
    static ScalarProfile constant(double beta);
    // beta(t) = beta0 + amplitude * sin(rate t + phase)
    static ScalarProfile sinusoidal(double beta0, double amplitude, double rate,
                                    double phase = 0.0);
    // Foucault geophysical parameterization: beta = Omega * sin(latitude).
    static ScalarProfile foucault_latitude(double earth_rotation_rate, double latitude_rad);

    ScalarSample sample(double t) const;
    double max_abs_beta() const;
    bool is_constant() const { return amplitude_ == 0.0; }

private:
    double beta0_ = 0.0, amplitude_ = 0.0, rate_ = 0.0, phase_ = 0.0;
};

// xdd1 + (omega0^2 - beta^2) x1 = 2 beta xd2 + betadot x2  (and the x2 mirror)
Osc2State foucault_rhs(const Osc2State& state, double t, const ScalarProfile& profile,
                       double omega0);

Trajectory<Osc2State> integrate_foucault(const ScalarProfile& profile, double omega0,
                                         const Osc2State& initial, double t0, double t1,
                                         double dt);

// Real part of  a (1, i) e^{-i(omega0-beta)t} + b (1, -i) e^{-i(omega0+beta)t}
// plus its analytic time derivative.
Osc2State foucault_analytic(std::complex<double> a, std::complex<double> b, double beta,
                            double omega0, double t);

double foucault_L1(const Osc2State& state, double beta, double omega0);

// Numerical rank with a relative singular-value threshold.
int matrix_rank(const Eigen::Matrix4d& m, double rel_tol = 1e-8);

// Integrates the first-order complex system from two independent starts and
// returns the rank of the four real phase-space solutions it spans (expected 4).
int span_rank_check(const ScalarProfile& profile, double omega0);

}  // namespace spinosc

#endif
