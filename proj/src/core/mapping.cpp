#include "mapping.hpp"

#include <cmath>

namespace spinosc {

Quat hidden_from_complex_pair(Complex A, Complex B) {
    return {A.real(), A.imag(), B.real(), -B.imag()};
}

OscState spinor_to_oscillator_init(const Spinor& s, const Quat& u, const Eigen::Vector3d& beta_at_t0,
                                   double omega0) {
    if (!is_unit(u))
        fail(Errc::NonUnitHiddenQuaternion, "hidden quaternion u is not unit");
    if (std::abs(norm(s) - 1.0) > 1e-9)
        fail(Errc::NotNormalized, "spinor must be normalized");
    const Quat sq = spinor_to_quat(s);
    const Quat qi{0.0, 1.0, 0.0, 0.0};
    // sdot = -i omega0 s - s b, with a quaternionic left-multiplied i.
    const Quat sdot = (-omega0) * qmul(qi, sq) + (-1.0) * qmul(sq, beta_to_quat(beta_at_t0));
    return {qmul(u, sq).vec(), qmul(u, sdot).vec()};
}

Spinor extract_spinor(const OscState& state, const Quat& u) {
    return quat_to_spinor_u(Quat::from_vec(state.x), u);
}

SpinorTrajectory extract_spinor_trajectory(const OscTrajectory& traj, const Quat& u) {
    SpinorTrajectory out;
    out.t0 = traj.t0;
    out.dt = traj.dt;
    out.omega0 = traj.omega0;
    out.profile_desc = traj.profile_desc;
    out.samples.reserve(traj.samples.size());
    for (const OscState& s : traj.samples) out.samples.push_back(extract_spinor(s, u));
    return out;
}

double check_quantum_constraint(const OscState& state, const Eigen::Vector3d& beta,
                                double omega0) {
    constexpr double eps = 1e-300;
    const double l2 = lagrangian_L2(state, beta, omega0);
    return std::abs(l2) / (omega0 * omega0 * std::max(state.x.squaredNorm(), eps));
}

ModeCoefficients decompose_modes(const OscState& state, const Eigen::Vector3d& beta,
                                 double omega0) {
    if (!(beta.norm() > 0.0))
        fail(Errc::InvalidArgument, "mode decomposition requires |beta| > 0");
    const ModeBasis mb = mode_basis(beta);

    // x = Re[c m], v = Re[-i Omega c m]; split each complex coefficient into
    // (Re, Im) columns.
    Eigen::Matrix<double, 8, 8> M;
    for (int k = 0; k < 4; ++k) {
        const auto& m = mb.vectors[static_cast<size_t>(k)];
        const double w = omega0 + mb.offsets[static_cast<size_t>(k)];
        M.block<4, 1>(0, 2 * k) = m.real();
        M.block<4, 1>(0, 2 * k + 1) = -m.imag();
        M.block<4, 1>(4, 2 * k) = w * m.imag();
        M.block<4, 1>(4, 2 * k + 1) = w * m.real();
    }
    Eigen::Matrix<double, 8, 1> rhs;
    rhs << state.x, state.v;

    Eigen::FullPivLU<Eigen::Matrix<double, 8, 8>> lu(M);
    lu.setThreshold(1e-10);
    if (lu.rank() < 8)
        fail(Errc::SingularModeBasis, "mode basis is rank-deficient");
    const Eigen::Matrix<double, 8, 1> sol = lu.solve(rhs);
    return {Complex(sol(0), sol(1)), Complex(sol(2), sol(3)), Complex(sol(4), sol(5)),
            Complex(sol(6), sol(7))};
}

}  // namespace spinosc
