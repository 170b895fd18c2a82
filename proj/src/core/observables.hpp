#ifndef SPINOSC_CORE_OBSERVABLES_HPP
#define SPINOSC_CORE_OBSERVABLES_HPP

#include <vector>

#include "dynamics.hpp"
#include "fields.hpp"
#include "mapping.hpp"

namespace spinosc {

// Spin expectation vector in units of hbar.
struct SpinVector {
    double sx = 0.0, sy = 0.0, sz = 0.0;
};

struct SpectrumPeak {
    double frequency = 0.0;  // rad/time
    double amplitude = 0.0;
};

struct SpectrumEstimate {
    std::vector<SpectrumPeak> peaks;  // sorted by frequency
    double resolution = 0.0;          // 2*pi / window length
};

// <S.e> = -(1/(2 omega0)) p . B(e) x  with p = v + B(beta) x.
double spin_expectation(const OscState& state, const Eigen::Vector3d& beta,
                        const Eigen::Vector3d& axis, double omega0);

// (<sigma_x>, <sigma_y>, <sigma_z>)/2 of the normalized spinor.
SpinVector bloch_vector(const Spinor& s);

// Hann-windowed DFT with quadratic log-amplitude peak interpolation; returns
// the dominant spectral peaks of a real sampled series.
SpectrumEstimate estimate_spectrum(const std::vector<double>& series, double dt);

// Spectrum of one oscillator component (0..3 for x, 4..7 for v); requires at
// least 20 carrier periods of data.
SpectrumEstimate frequency_split(const OscTrajectory& traj, int component);

// Integrates the SPE over T = pi/|beta| (one full Bloch revolution) and
// returns max|chi(T) e^{i omega0 T} + chi(0)|; zero certifies the pi phase.
double geometric_phase_check(const FieldProfile& profile, const Spinor& s0, double omega0,
                             double dt = 1e-4);

// Least-squares slope of the unwrapped Bloch azimuth about the field axis.
// Expected 2*beta for a constant field of magnitude beta.
double precession_rate(const SpinorTrajectory& traj, const Eigen::Vector3d& axis);

}  // namespace spinosc

#endif
