#include "observables.hpp"

#include <fftw3.h>

#include <algorithm>
#include <cmath>
#include <numbers>

namespace spinosc {

double spin_expectation(const OscState& state, const Eigen::Vector3d& beta,
                        const Eigen::Vector3d& axis, double omega0) {
    if (std::abs(axis.norm() - 1.0) > 1e-12)
        fail(Errc::BadAxis, "axis must be a unit vector");
    const Eigen::Vector4d p = canonical_momentum(state, beta);
    return -p.dot(build_coupling_matrix(axis) * state.x) / (2.0 * omega0);
}

SpinVector bloch_vector(const Spinor& s) {
    const double n2 = norm2(s);
    if (std::sqrt(n2) <= 1e-12)
        fail(Errc::DegenerateSpinor, "spinor norm too small");
    const Complex cross = std::conj(s.plus) * s.minus;
    return {cross.real() / n2, cross.imag() / n2,
            0.5 * (std::norm(s.plus) - std::norm(s.minus)) / n2};
}

SpectrumEstimate estimate_spectrum(const std::vector<double>& series, double dt) {
    const size_t n = series.size();
    if (n < 16)
        fail(Errc::TooShort, "series too short for spectral analysis");

    size_t nfft = 1;
    while (nfft < n) nfft <<= 1;

    std::vector<double> in(nfft, 0.0);
    const double two_pi = 2.0 * std::numbers::pi;
    for (size_t k = 0; k < n; ++k) {
        const double hann = 0.5 * (1.0 - std::cos(two_pi * static_cast<double>(k) /
                                                  static_cast<double>(n - 1)));
        in[k] = series[k] * hann;
    }
    std::vector<double> mag(nfft / 2 + 1);
    {
        std::vector<fftw_complex> out(nfft / 2 + 1);
        fftw_plan plan =
            fftw_plan_dft_r2c_1d(static_cast<int>(nfft), in.data(), out.data(), FFTW_ESTIMATE);
        fftw_execute(plan);
        fftw_destroy_plan(plan);
        for (size_t k = 0; k < mag.size(); ++k) mag[k] = std::hypot(out[k][0], out[k][1]);
    }

    const double bin = two_pi / (static_cast<double>(nfft) * dt);
    const double peak_floor = 0.05 * *std::max_element(mag.begin(), mag.end());

    SpectrumEstimate est;
    est.resolution = two_pi / (static_cast<double>(n) * dt);
    for (size_t k = 1; k + 1 < mag.size(); ++k) {
        if (mag[k] <= mag[k - 1] || mag[k] < mag[k + 1] || mag[k] <= peak_floor) continue;
        // Quadratic interpolation on log amplitude around the local maximum.
        const double la = std::log(mag[k - 1]), lb = std::log(mag[k]), lc = std::log(mag[k + 1]);
        const double denom = la - 2.0 * lb + lc;
        const double delta = (denom != 0.0) ? 0.5 * (la - lc) / denom : 0.0;
        est.peaks.push_back({(static_cast<double>(k) + delta) * bin,
                             std::exp(lb - 0.25 * (la - lc) * delta)});
    }
    return est;
}

SpectrumEstimate frequency_split(const OscTrajectory& traj, int component) {
    if (component < 0 || component > 7)
        fail(Errc::InvalidArgument, "component index must be in [0, 7]");
    const double window = static_cast<double>(traj.size() - 1) * traj.dt;
    if (traj.size() < 2 || window < 20.0 * 2.0 * std::numbers::pi / traj.omega0)
        fail(Errc::TooShort, "trajectory shorter than 20 carrier periods");
    std::vector<double> series(traj.size());
    for (size_t k = 0; k < traj.size(); ++k)
        series[k] = component < 4 ? traj.samples[k].x[component] : traj.samples[k].v[component - 4];
    return estimate_spectrum(series, traj.dt);
}

double geometric_phase_check(const FieldProfile& profile, const Spinor& s0, double omega0,
                             double dt) {
    if (!profile.is_constant() || !(profile.constant_beta().norm() > 0.0))
        fail(Errc::InvalidArgument, "geometric phase check needs a constant nonzero field");
    const double b = profile.constant_beta().norm();
    const double T = std::numbers::pi / b;
    const auto n = static_cast<size_t>(std::llround(T / dt));
    const double dt_exact = T / static_cast<double>(n);
    const SpinorTrajectory traj = integrate_spe(profile, omega0, s0, 0.0, T, dt_exact);
    const Complex carrier = std::exp(Complex(0.0, omega0 * T));
    const Spinor& end = traj.samples.back();
    return std::max(std::abs(end.plus * carrier + s0.plus),
                    std::abs(end.minus * carrier + s0.minus));
}

double precession_rate(const SpinorTrajectory& traj, const Eigen::Vector3d& axis) {
    const double an = axis.norm();
    if (!(an > 0.0))
        fail(Errc::BadAxis, "axis must be nonzero");
    const Eigen::Vector3d a = axis / an;
    Eigen::Vector3d seed = Eigen::Vector3d::UnitX();
    if (std::abs(a.x()) > 0.9) seed = Eigen::Vector3d::UnitY();
    const Eigen::Vector3d e1 = (seed - seed.dot(a) * a).normalized();
    const Eigen::Vector3d e2 = a.cross(e1);

    auto transverse = [&](const Spinor& s) {
        const SpinVector bv = bloch_vector(s);
        const Eigen::Vector3d v(bv.sx, bv.sy, bv.sz);
        return Eigen::Vector2d(v.dot(e1), v.dot(e2));
    };
    const Eigen::Vector2d tr0 = transverse(traj.samples.front());
    // |S| = 1/2 for normalized spinors; the cone opening angle is tr/(1/2).
    if (tr0.norm() < 0.5e-6)
        fail(Errc::DegenerateGeometry, "initial Bloch vector is parallel to the axis");

    // Unwrapped azimuth, then a least-squares line fit.
    const size_t n = traj.size();
    double prev = std::atan2(tr0.y(), tr0.x());
    double offset = 0.0;
    double sum_t = 0.0, sum_p = 0.0, sum_tt = 0.0, sum_tp = 0.0;
    const double two_pi = 2.0 * std::numbers::pi;
    for (size_t k = 0; k < n; ++k) {
        const Eigen::Vector2d tr = transverse(traj.samples[k]);
        double phi = std::atan2(tr.y(), tr.x());
        while (phi + offset - prev > std::numbers::pi) offset -= two_pi;
        while (phi + offset - prev < -std::numbers::pi) offset += two_pi;
        phi += offset;
        prev = phi;
        const double t = traj.time_at(k);
        sum_t += t;
        sum_p += phi;
        sum_tt += t * t;
        sum_tp += t * phi;
    }
    const double nn = static_cast<double>(n);
    return (nn * sum_tp - sum_t * sum_p) / (nn * sum_tt - sum_t * sum_t);
}

}  // namespace spinosc
