#ifndef SPINOSC_CORE_FIELDS_HPP
#define SPINOSC_CORE_FIELDS_HPP

#include <Eigen/Dense>
#include <limits>
#include <string>
#include <vector>

#include "error.hpp"

namespace spinosc {

struct FieldSample {
    Eigen::Vector3d beta;      // rad/time
    Eigen::Vector3d beta_dot;  // rad/time^2
};

// Time-dependent coupling vector beta(t) with its analytic derivative.
// Immutable after construction; sampling is pure.
class FieldProfile {
public:
    enum class Kind { Constant, RotatingAboutAxis, LinearRamp, Sinusoidal, PiecewiseConstant };

    static FieldProfile constant(const Eigen::Vector3d& beta);
    // beta(t) = axial*axis + amplitude*(e1 cos(rate t + phase) + e2 sin(rate t + phase))
    // with (e1, e2, axis) a right-handed orthonormal frame. For axis = z the
    // frame is (x, y, z).
    static FieldProfile rotating_about_axis(const Eigen::Vector3d& axis, double amplitude,
                                            double rate, double axial = 0.0, double phase = 0.0);
    static FieldProfile linear_ramp(const Eigen::Vector3d& beta0, const Eigen::Vector3d& slope);
    // beta(t) = beta0 + amplitude * sin(rate t + phase)
    static FieldProfile sinusoidal(const Eigen::Vector3d& beta0, const Eigen::Vector3d& amplitude,
                                   double rate, double phase = 0.0);
    // values[i] holds on [times[i-1], times[i]); values has times.size()+1 entries.
    static FieldProfile piecewise_constant(std::vector<double> times,
                                           std::vector<Eigen::Vector3d> values);

    FieldProfile with_domain(double t_min, double t_max) const;

    FieldSample sample(double t) const;  // throws OutOfDomain outside the validity window

    Kind kind() const { return kind_; }
    bool is_constant() const { return kind_ == Kind::Constant; }
    const Eigen::Vector3d& constant_beta() const;

    // Jump times of a piecewise-constant profile; empty for smooth kinds.
    const std::vector<double>& jump_times() const { return times_; }

    // Upper bound on |beta(t)| over [t0, t1]; used for integrator step checks.
    double max_beta_norm(double t0, double t1) const;

    std::string describe() const;

private:
    FieldProfile(Kind k) : kind_(k) {}

    Kind kind_;
    Eigen::Vector3d beta0_ = Eigen::Vector3d::Zero();
    Eigen::Vector3d slope_ = Eigen::Vector3d::Zero();      // LinearRamp
    Eigen::Vector3d amplitude3_ = Eigen::Vector3d::Zero(); // Sinusoidal
    Eigen::Vector3d axis_ = Eigen::Vector3d::UnitZ();      // RotatingAboutAxis frame
    Eigen::Vector3d e1_ = Eigen::Vector3d::UnitX();
    Eigen::Vector3d e2_ = Eigen::Vector3d::UnitY();
    double amplitude_ = 0.0;
    double rate_ = 0.0;
    double phase_ = 0.0;
    double axial_ = 0.0;
    std::vector<double> times_;
    std::vector<Eigen::Vector3d> values_;
    double domain_min_ = -std::numeric_limits<double>::infinity();
    double domain_max_ = std::numeric_limits<double>::infinity();
};

// beta = B * e/(2m). Unit-conversion helper; the rest of the library works in
// beta directly.
Eigen::Vector3d from_magnetic_field(const Eigen::Vector3d& B_tesla, double charge_to_mass);

}  // namespace spinosc

#endif
