#ifndef SPINOSC_CORE_MAPPING_HPP
#define SPINOSC_CORE_MAPPING_HPP

#include "dynamics.hpp"
#include "quat.hpp"

namespace spinosc {

// u = Re(A) + i Im(A) + j Re(B) - k Im(B); the quaternion form of the complex
// hidden-variable pair.
Quat hidden_from_complex_pair(Complex A, Complex B);

// Builds the quantum-constrained oscillator initial condition q = u s,
// qdot = u sdot with sdot = -i omega0 s - s b. The result satisfies L2 = 0.
OscState spinor_to_oscillator_init(const Spinor& s, const Quat& u, const Eigen::Vector3d& beta_at_t0,
                                   double omega0);

// s = u* q read as a spinor; inverse of the position part of the forward map.
// Output is not renormalized: drift is a diagnostic signal.
Spinor extract_spinor(const OscState& state, const Quat& u);

SpinorTrajectory extract_spinor_trajectory(const OscTrajectory& traj, const Quat& u);

// Dimensionless residual |L2| / (omega0^2 max(x.x, eps)); zero means the state
// maps onto a quantum spinor.
double check_quantum_constraint(const OscState& state, const Eigen::Vector3d& beta, double omega0);

// Solves the 8x8 real linear system expressing (x, v) at t = 0 in the four
// constant-field eigenmodes. Quantum-constrained states satisfy ad = bc.
ModeCoefficients decompose_modes(const OscState& state, const Eigen::Vector3d& beta, double omega0);

}  // namespace spinosc

#endif
