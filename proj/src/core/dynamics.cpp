#include "dynamics.hpp"

#include <cmath>
#include <numbers>

namespace spinosc {

Eigen::Matrix4d build_coupling_matrix(const Eigen::Vector3d& beta) {
    const double bx = beta.x(), by = beta.y(), bz = beta.z();
    Eigen::Matrix4d B;
    B << 0.0, -bz, by, -bx,
         bz, 0.0, bx, by,
         -by, -bx, 0.0, bz,
         bx, -by, -bz, 0.0;
    return B;
}

Eigen::Vector4d canonical_momentum(const OscState& state, const Eigen::Vector3d& beta) {
    return state.v + build_coupling_matrix(beta) * state.x;
}

double lagrangian_L2(const OscState& state, const Eigen::Vector3d& beta, double omega0) {
    const Eigen::Vector4d p = canonical_momentum(state, beta);
    return 0.5 * (p.squaredNorm() - omega0 * omega0 * state.x.squaredNorm());
}

OscState oscillator_rhs(const OscState& state, double t, const FieldProfile& profile,
                        double omega0) {
    const FieldSample f = profile.sample(t);
    const Eigen::Matrix4d B = build_coupling_matrix(f.beta);
    const Eigen::Matrix4d Bdot = build_coupling_matrix(f.beta_dot);
    OscState d;
    d.x = state.v;
    d.v = -2.0 * (B * state.v) - Bdot * state.x - B * (B * state.x) -
          omega0 * omega0 * state.x;
    return d;
}

Spinor spe_rhs(const Spinor& s, double t, const FieldProfile& profile, double omega0) {
    const Eigen::Vector3d b = profile.sample(t).beta;
    const Complex i(0.0, 1.0);
    // (omega0 I + beta.sigma) chi, then multiply by -i.
    const Complex hp = omega0 * s.plus + b.z() * s.plus + (b.x() - i * b.y()) * s.minus;
    const Complex hm = omega0 * s.minus + (b.x() + i * b.y()) * s.plus - b.z() * s.minus;
    return {-i * hp, -i * hm};
}

namespace {

bool finite(const OscState& s) { return s.x.allFinite() && s.v.allFinite(); }
bool finite(const Spinor& s) {
    return std::isfinite(s.plus.real()) && std::isfinite(s.plus.imag()) &&
           std::isfinite(s.minus.real()) && std::isfinite(s.minus.imag());
}

void check_step(const FieldProfile& profile, double omega0, double t0, double t1, double dt) {
    if (!(dt > 0.0) || !(t1 > t0))
        fail(Errc::InvalidArgument, "integration interval requires t1 > t0 and dt > 0");
    const double carrier = omega0 + profile.max_beta_norm(t0, t1);
    const double dt_max = 2.0 * std::numbers::pi / (50.0 * carrier);
    if (dt > dt_max)
        fail(Errc::StepTooLarge, "dt does not resolve the carrier frequency");
    for (double tj : profile.jump_times()) {
        if (tj <= t0 || tj >= t1) continue;
        const double steps = (tj - t0) / dt;
        if (std::abs(steps - std::round(steps)) > 1e-9 * std::max(1.0, std::abs(steps)))
            fail(Errc::StepTooLarge, "profile jump time is not aligned with a step boundary");
    }
}

// At a field jump the -Bdot x term integrates to an impulse: x and the
// canonical momentum p stay continuous, so v jumps by -(B_after - B_before) x.
void apply_field_jump(OscState& y, const Eigen::Vector3d& before, const Eigen::Vector3d& after) {
    y.v -= build_coupling_matrix(after - before) * y.x;
}

void apply_field_jump(Spinor&, const Eigen::Vector3d&, const Eigen::Vector3d&) {}

// Piecewise profiles are integrated segment by segment with the field frozen,
// so no RK4 stage ever straddles a discontinuity.
template <class State, class Rhs>
Trajectory<State> integrate(const FieldProfile& profile, double omega0, const State& initial,
                            double t0, double t1, double dt, Rhs rhs) {
    check_step(profile, omega0, t0, t1, dt);

    std::vector<double> bounds{t0};
    for (double tj : profile.jump_times())
        if (tj > t0 && tj < t1) bounds.push_back(tj);
    bounds.push_back(t1);

    Trajectory<State> traj;
    traj.t0 = t0;
    traj.dt = dt;
    traj.omega0 = omega0;
    traj.profile_desc = profile.describe();
    traj.samples.reserve(static_cast<size_t>(std::llround((t1 - t0) / dt)) + 1);
    State y = initial;
    traj.samples.push_back(y);

    for (size_t seg = 0; seg + 1 < bounds.size(); ++seg) {
        const double a = bounds[seg], b = bounds[seg + 1];
        const FieldProfile local = profile.jump_times().empty()
                                       ? profile
                                       : FieldProfile::constant(profile.sample(a).beta);
        const auto n = static_cast<size_t>(std::llround((b - a) / dt));
        for (size_t k = 0; k < n; ++k) {
            const double t = a + static_cast<double>(k) * dt;
            const State k1 = rhs(y, t, local);
            const State k2 = rhs(y + (0.5 * dt) * k1, t + 0.5 * dt, local);
            const State k3 = rhs(y + (0.5 * dt) * k2, t + 0.5 * dt, local);
            const State k4 = rhs(y + dt * k3, t + dt, local);
            y = y + (dt / 6.0) * (k1 + 2.0 * k2 + 2.0 * k3 + k4);
            if (!finite(y))
                fail(Errc::NonFinite, "state overflowed during integration");
            if (k + 1 == n && seg + 2 < bounds.size())
                apply_field_jump(y, local.constant_beta(), profile.sample(b).beta);
            traj.samples.push_back(y);
        }
    }
    return traj;
}

}  // namespace

OscTrajectory integrate_oscillator(const FieldProfile& profile, double omega0,
                                   const OscState& initial, double t0, double t1, double dt) {
    return integrate(profile, omega0, initial, t0, t1, dt,
                     [&](const OscState& s, double t, const FieldProfile& p) {
                         return oscillator_rhs(s, t, p, omega0);
                     });
}

SpinorTrajectory integrate_spe(const FieldProfile& profile, double omega0, const Spinor& initial,
                               double t0, double t1, double dt) {
    return integrate(profile, omega0, initial, t0, t1, dt,
                     [&](const Spinor& s, double t, const FieldProfile& p) {
                         return spe_rhs(s, t, p, omega0);
                     });
}

namespace {

// Spherical angles of beta with the documented degenerate-direction tie-breaks.
void spherical_angles(const Eigen::Vector3d& beta, double& theta, double& phi) {
    const double b = beta.norm();
    if (b <= 0.0) {
        theta = 0.0;
        phi = 0.0;
        return;
    }
    theta = std::acos(std::clamp(beta.z() / b, -1.0, 1.0));
    phi = (beta.x() == 0.0 && beta.y() == 0.0) ? 0.0 : std::atan2(beta.y(), beta.x());
}

}  // namespace

std::array<Spinor, 2> field_eigenspinors(const Eigen::Vector3d& beta) {
    double theta, phi;
    spherical_angles(beta, theta, phi);
    const double c = std::cos(0.5 * theta), s = std::sin(0.5 * theta);
    const Complex e = std::exp(Complex(0.0, phi));
    return {Spinor{c, s * e}, Spinor{s, -c * e}};
}

ModeBasis mode_basis(const Eigen::Vector3d& beta) {
    double theta, phi;
    spherical_angles(beta, theta, phi);
    const double b = beta.norm();
    const double c = std::cos(0.5 * theta), s = std::sin(0.5 * theta);
    const Complex e = std::exp(Complex(0.0, phi));
    const Complex i(0.0, 1.0);
    const double r = 1.0 / std::sqrt(2.0);
    const Eigen::Vector2cd y_minus(r, -i * r);
    const Eigen::Vector2cd y_plus(r, i * r);

    ModeBasis mb;
    mb.vectors[0] << c * y_minus, (s * e) * y_minus;
    mb.vectors[1] << s * y_minus, (-c * e) * y_minus;
    mb.vectors[2] << (-s * e) * y_plus, c * y_plus;
    mb.vectors[3] << (c * e) * y_plus, s * y_plus;
    mb.offsets = {b, -b, b, -b};
    return mb;
}

OscState analytic_oscillator(const ModeCoefficients& coeffs, const Eigen::Vector3d& beta,
                             double omega0, double t) {
    const ModeBasis mb = mode_basis(beta);
    const std::array<Complex, 4> cs{coeffs.a, coeffs.b, coeffs.c, coeffs.d};
    Eigen::Vector4cd z = Eigen::Vector4cd::Zero();
    Eigen::Vector4cd zdot = Eigen::Vector4cd::Zero();
    const Complex i(0.0, 1.0);
    for (int k = 0; k < 4; ++k) {
        const double w = omega0 + mb.offsets[static_cast<size_t>(k)];
        const Complex ph = std::exp(-i * w * t);
        const Eigen::Vector4cd term = cs[static_cast<size_t>(k)] * ph * mb.vectors[static_cast<size_t>(k)];
        z += term;
        zdot += (-i * w) * term;
    }
    return {z.real(), zdot.real()};
}

Spinor analytic_spinor(Complex f, Complex g, const Eigen::Vector3d& beta, double omega0,
                       double t) {
    if (std::abs(std::norm(f) + std::norm(g) - 1.0) > 1e-9)
        fail(Errc::NotNormalized, "|f|^2 + |g|^2 must equal 1");
    const auto eig = field_eigenspinors(beta);
    const double b = beta.norm();
    const Complex i(0.0, 1.0);
    const Complex pp = std::exp(-i * (omega0 + b) * t);
    const Complex pm = std::exp(-i * (omega0 - b) * t);
    return {f * pp * eig[0].plus + g * pm * eig[1].plus,
            f * pp * eig[0].minus + g * pm * eig[1].minus};
}

}  // namespace spinosc
