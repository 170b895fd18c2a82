#include "foucault.hpp"

#include <cmath>
#include <numbers>

namespace spinosc {

ScalarProfile ScalarProfile::constant(double beta) {
    ScalarProfile p;
    p.beta0_ = beta;
    return p;
}

ScalarProfile ScalarProfile::sinusoidal(double beta0, double amplitude, double rate, double phase) {
    ScalarProfile p;
    p.beta0_ = beta0;
    p.amplitude_ = amplitude;
    p.rate_ = rate;
    p.phase_ = phase;
    return p;
}

ScalarProfile ScalarProfile::foucault_latitude(double earth_rotation_rate, double latitude_rad) {
    return constant(earth_rotation_rate * std::sin(latitude_rad));
}

ScalarSample ScalarProfile::sample(double t) const {
    if (!std::isfinite(t))
        fail(Errc::OutOfDomain, "non-finite sample time");
    return {beta0_ + amplitude_ * std::sin(rate_ * t + phase_),
            amplitude_ * rate_ * std::cos(rate_ * t + phase_)};
}

double ScalarProfile::max_abs_beta() const { return std::abs(beta0_) + std::abs(amplitude_); }

Osc2State foucault_rhs(const Osc2State& state, double t, const ScalarProfile& profile,
                       double omega0) {
    const ScalarSample f = profile.sample(t);
    const double w2 = omega0 * omega0 - f.beta * f.beta;
    return {state.v1, state.v2,
            2.0 * f.beta * state.v2 + f.beta_dot * state.x2 - w2 * state.x1,
            -2.0 * f.beta * state.v1 - f.beta_dot * state.x1 - w2 * state.x2};
}

namespace {

template <class State, class Rhs>
std::vector<State> rk4(Rhs rhs, State y, double t0, size_t n, double dt) {
    std::vector<State> out;
    out.reserve(n + 1);
    out.push_back(y);
    for (size_t k = 0; k < n; ++k) {
        const double t = t0 + static_cast<double>(k) * dt;
        const State k1 = rhs(y, t);
        const State k2 = rhs(y + (0.5 * dt) * k1, t + 0.5 * dt);
        const State k3 = rhs(y + (0.5 * dt) * k2, t + 0.5 * dt);
        const State k4 = rhs(y + dt * k3, t + dt);
        y = y + (dt / 6.0) * (k1 + 2.0 * k2 + 2.0 * k3 + k4);
        out.push_back(y);
    }
    return out;
}

}  // namespace

Trajectory<Osc2State> integrate_foucault(const ScalarProfile& profile, double omega0,
                                         const Osc2State& initial, double t0, double t1,
                                         double dt) {
    if (!(dt > 0.0) || !(t1 > t0))
        fail(Errc::InvalidArgument, "integration interval requires t1 > t0 and dt > 0");
    if (dt > 2.0 * std::numbers::pi / (50.0 * (omega0 + profile.max_abs_beta())))
        fail(Errc::StepTooLarge, "dt does not resolve the carrier frequency");
    const auto n = static_cast<size_t>(std::llround((t1 - t0) / dt));
    Trajectory<Osc2State> traj;
    traj.t0 = t0;
    traj.dt = dt;
    traj.omega0 = omega0;
    traj.profile_desc = "scalar coupling";
    traj.samples = rk4([&](const Osc2State& s, double t) { return foucault_rhs(s, t, profile, omega0); },
                       initial, t0, n, dt);
    return traj;
}

Osc2State foucault_analytic(std::complex<double> a, std::complex<double> b, double beta,
                            double omega0, double t) {
    using C = std::complex<double>;
    const C i(0.0, 1.0);
    const double wm = omega0 - beta, wp = omega0 + beta;
    const C za = a * std::exp(-i * wm * t), zb = b * std::exp(-i * wp * t);
    const C z1 = za + zb, z2 = i * za - i * zb;
    const C zd1 = -i * wm * za - i * wp * zb;
    const C zd2 = wm * za - wp * zb;  // d/dt of (i za - i zb)
    return {z1.real(), z2.real(), zd1.real(), zd2.real()};
}

double foucault_L1(const Osc2State& state, double beta, double omega0) {
    const double p1 = state.v1 - beta * state.x2;
    const double p2 = state.v2 + beta * state.x1;
    return 0.5 * (p1 * p1 + p2 * p2 -
                  omega0 * omega0 * (state.x1 * state.x1 + state.x2 * state.x2));
}

int matrix_rank(const Eigen::Matrix4d& m, double rel_tol) {
    Eigen::JacobiSVD<Eigen::Matrix4d> svd(m);
    const auto& sv = svd.singularValues();
    const double thresh = rel_tol * sv(0);
    int rank = 0;
    for (int k = 0; k < sv.size(); ++k)
        if (sv(k) > thresh) ++rank;
    return rank;
}

int span_rank_check(const ScalarProfile& profile, double omega0) {
    using Vec2c = Eigen::Vector2cd;
    const std::complex<double> i(0.0, 1.0);
    auto rhs = [&](const Vec2c& z, double t) -> Vec2c {
        const double b = profile.sample(t).beta;
        return {-i * omega0 * z(0) + b * z(1), -b * z(0) - i * omega0 * z(1)};
    };
    const double t1 = 5.0;
    const double dt = std::min(1e-3, 2.0 * std::numbers::pi /
                                         (200.0 * (omega0 + profile.max_abs_beta())));
    const auto n = static_cast<size_t>(std::llround(t1 / dt));
    const Vec2c z1_end = rk4(rhs, Vec2c(1.0, 0.0), 0.0, n, dt).back();
    const Vec2c z2_end = rk4(rhs, Vec2c(0.0, 1.0), 0.0, n, dt).back();

    // Columns: phase-space vectors (x1, x2, xd1, xd2) of the four real
    // solutions Re z1, Im z1, Re z2, Im z2 at the sample time.
    Eigen::Matrix4d m;
    int col = 0;
    for (const Vec2c& z : {z1_end, z2_end}) {
        const Vec2c zd = rhs(z, t1);
        m.col(col++) << z(0).real(), z(1).real(), zd(0).real(), zd(1).real();
        m.col(col++) << z(0).imag(), z(1).imag(), zd(0).imag(), zd(1).imag();
    }
    return matrix_rank(m);
}

}  // namespace spinosc
