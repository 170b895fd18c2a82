#ifndef SPINOSC_CORE_DYNAMICS_HPP
#define SPINOSC_CORE_DYNAMICS_HPP

#include <Eigen/Dense>
#include <array>
#include <string>
#include <vector>

#include "fields.hpp"
#include "quat.hpp"

namespace spinosc {

// Classical configuration of the four coupled oscillators.
struct OscState {
    Eigen::Vector4d x = Eigen::Vector4d::Zero();
    Eigen::Vector4d v = Eigen::Vector4d::Zero();
};

inline OscState operator+(const OscState& a, const OscState& b) { return {a.x + b.x, a.v + b.v}; }
inline OscState operator*(double s, const OscState& a) { return {s * a.x, s * a.v}; }

// The antisymmetric coupling matrix; B^2 = -|beta|^2 I.
Eigen::Matrix4d build_coupling_matrix(const Eigen::Vector3d& beta);

// p = v + B x
Eigen::Vector4d canonical_momentum(const OscState& state, const Eigen::Vector3d& beta);

// L2 = (p.p - omega0^2 x.x)/2; vanishes exactly on quantum-mappable states.
double lagrangian_L2(const OscState& state, const Eigen::Vector3d& beta, double omega0);

// xdot = v, vdot = -2Bv - Bdot x - B^2 x - omega0^2 x
OscState oscillator_rhs(const OscState& state, double t, const FieldProfile& profile,
                        double omega0);

// chidot = -i (omega0 I + beta.sigma) chi
Spinor spe_rhs(const Spinor& s, double t, const FieldProfile& profile, double omega0);

template <class State>
struct Trajectory {
    double t0 = 0.0;
    double dt = 0.0;
    double omega0 = 0.0;
    std::string profile_desc;
    std::vector<State> samples;

    size_t size() const { return samples.size(); }
    double time_at(size_t i) const { return t0 + static_cast<double>(i) * dt; }
};

using OscTrajectory = Trajectory<OscState>;
using SpinorTrajectory = Trajectory<Spinor>;

// Classical fixed-step RK4. dt must resolve the carrier:
// dt <= 2*pi / (50 * (omega0 + max|beta|)), and any profile jump time must
// land on a step boundary.
OscTrajectory integrate_oscillator(const FieldProfile& profile, double omega0,
                                   const OscState& initial, double t0, double t1, double dt);
SpinorTrajectory integrate_spe(const FieldProfile& profile, double omega0, const Spinor& initial,
                               double t0, double t1, double dt);

// Complex amplitudes of the four constant-field eigenmodes.
struct ModeCoefficients {
    Complex a, b, c, d;
};

// The four complex mode 4-vectors for a constant field, together with the
// frequency offsets from omega0 (mode k evolves as exp(-i (omega0+offset_k) t)).
// Spherical angles use the convention theta=0, phi=0 when |beta|=0 and phi=0
// on the poles.
struct ModeBasis {
    std::array<Eigen::Vector4cd, 4> vectors;
    std::array<double, 4> offsets;
};
ModeBasis mode_basis(const Eigen::Vector3d& beta);

// Closed-form constant-field solution, including the carrier exp(-i omega0 t);
// returns both x and the analytic xdot.
OscState analytic_oscillator(const ModeCoefficients& coeffs, const Eigen::Vector3d& beta,
                             double omega0, double t);

// Closed-form constant-field SPE solution with the rest-mass phase; requires
// |f|^2 + |g|^2 = 1.
Spinor analytic_spinor(Complex f, Complex g, const Eigen::Vector3d& beta, double omega0, double t);

// Field-aligned eigenspinors (cos(theta/2), sin(theta/2)e^{i phi}) and
// (sin(theta/2), -cos(theta/2)e^{i phi}).
std::array<Spinor, 2> field_eigenspinors(const Eigen::Vector3d& beta);

}  // namespace spinosc

#endif
