#include "fields.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

namespace spinosc {

FieldProfile FieldProfile::constant(const Eigen::Vector3d& beta) {
    FieldProfile p(Kind::Constant);
    p.beta0_ = beta;
    return p;
}

FieldProfile FieldProfile::rotating_about_axis(const Eigen::Vector3d& axis, double amplitude,
                                               double rate, double axial, double phase) {
    const double n = axis.norm();
    if (n <= 0.0)
        fail(Errc::InvalidArgument, "rotation axis must be nonzero");
    FieldProfile p(Kind::RotatingAboutAxis);
    p.axis_ = axis / n;
    // Deterministic transverse frame: start from whichever cardinal direction
    // is least aligned with the axis.
    Eigen::Vector3d seed = Eigen::Vector3d::UnitX();
    if (std::abs(p.axis_.x()) > 0.9)
        seed = Eigen::Vector3d::UnitY();
    p.e1_ = (seed - seed.dot(p.axis_) * p.axis_).normalized();
    p.e2_ = p.axis_.cross(p.e1_);
    p.amplitude_ = amplitude;
    p.rate_ = rate;
    p.axial_ = axial;
    p.phase_ = phase;
    return p;
}

FieldProfile FieldProfile::linear_ramp(const Eigen::Vector3d& beta0, const Eigen::Vector3d& slope) {
    FieldProfile p(Kind::LinearRamp);
    p.beta0_ = beta0;
    p.slope_ = slope;
    return p;
}

FieldProfile FieldProfile::sinusoidal(const Eigen::Vector3d& beta0,
                                      const Eigen::Vector3d& amplitude, double rate, double phase) {
    FieldProfile p(Kind::Sinusoidal);
    p.beta0_ = beta0;
    p.amplitude3_ = amplitude;
    p.rate_ = rate;
    p.phase_ = phase;
    return p;
}

FieldProfile FieldProfile::piecewise_constant(std::vector<double> times,
                                              std::vector<Eigen::Vector3d> values) {
    if (values.size() != times.size() + 1)
        fail(Errc::InvalidArgument, "piecewise profile needs times.size()+1 values");
    if (!std::is_sorted(times.begin(), times.end()))
        fail(Errc::InvalidArgument, "piecewise jump times must be ascending");
    FieldProfile p(Kind::PiecewiseConstant);
    p.times_ = std::move(times);
    p.values_ = std::move(values);
    return p;
}

FieldProfile FieldProfile::with_domain(double t_min, double t_max) const {
    if (!(t_min < t_max))
        fail(Errc::InvalidArgument, "profile domain must satisfy t_min < t_max");
    FieldProfile p(*this);
    p.domain_min_ = t_min;
    p.domain_max_ = t_max;
    return p;
}

const Eigen::Vector3d& FieldProfile::constant_beta() const {
    if (kind_ != Kind::Constant)
        fail(Errc::InvalidArgument, "profile is not constant");
    return beta0_;
}

FieldSample FieldProfile::sample(double t) const {
    if (!std::isfinite(t) || t < domain_min_ || t > domain_max_)
        fail(Errc::OutOfDomain, "time outside the profile validity window");
    switch (kind_) {
        case Kind::Constant:
            return {beta0_, Eigen::Vector3d::Zero()};
        case Kind::RotatingAboutAxis: {
            const double c = std::cos(rate_ * t + phase_);
            const double s = std::sin(rate_ * t + phase_);
            return {axial_ * axis_ + amplitude_ * (c * e1_ + s * e2_),
                    amplitude_ * rate_ * (-s * e1_ + c * e2_)};
        }
        case Kind::LinearRamp:
            return {beta0_ + t * slope_, slope_};
        case Kind::Sinusoidal: {
            const double s = std::sin(rate_ * t + phase_);
            const double c = std::cos(rate_ * t + phase_);
            return {beta0_ + s * amplitude3_, rate_ * c * amplitude3_};
        }
        case Kind::PiecewiseConstant: {
            // Jump points take the right-hand value; beta_dot is reported as
            // zero everywhere, jump alignment is the integrator's job.
            const auto it = std::upper_bound(times_.begin(), times_.end(), t);
            return {values_[static_cast<size_t>(it - times_.begin())], Eigen::Vector3d::Zero()};
        }
    }
    fail(Errc::Internal, "unhandled profile kind");
}

double FieldProfile::max_beta_norm(double t0, double t1) const {
    switch (kind_) {
        case Kind::Constant:
            return beta0_.norm();
        case Kind::RotatingAboutAxis:
            return std::hypot(axial_, amplitude_);
        case Kind::LinearRamp:
            return std::max((beta0_ + t0 * slope_).norm(), (beta0_ + t1 * slope_).norm());
        case Kind::Sinusoidal:
            return beta0_.norm() + amplitude3_.norm();
        case Kind::PiecewiseConstant: {
            double m = 0.0;
            for (const auto& v : values_) m = std::max(m, v.norm());
            return m;
        }
    }
    fail(Errc::Internal, "unhandled profile kind");
}

std::string FieldProfile::describe() const {
    std::ostringstream os;
    switch (kind_) {
        case Kind::Constant:
            os << "constant beta=(" << beta0_.x() << "," << beta0_.y() << "," << beta0_.z() << ")";
            break;
        case Kind::RotatingAboutAxis:
            os << "rotating axis=(" << axis_.x() << "," << axis_.y() << "," << axis_.z()
               << ") amplitude=" << amplitude_ << " rate=" << rate_ << " axial=" << axial_;
            break;
        case Kind::LinearRamp:
            os << "linear ramp beta0=(" << beta0_.x() << "," << beta0_.y() << "," << beta0_.z()
               << ") slope=(" << slope_.x() << "," << slope_.y() << "," << slope_.z() << ")";
            break;
        case Kind::Sinusoidal:
            os << "sinusoidal beta0=(" << beta0_.x() << "," << beta0_.y() << "," << beta0_.z()
               << ") amplitude=(" << amplitude3_.x() << "," << amplitude3_.y() << ","
               << amplitude3_.z() << ") rate=" << rate_;
            break;
        case Kind::PiecewiseConstant:
            os << "piecewise constant, " << times_.size() << " jumps";
            break;
    }
    return os.str();
}

Eigen::Vector3d from_magnetic_field(const Eigen::Vector3d& B_tesla, double charge_to_mass) {
    if (!(charge_to_mass > 0.0))
        fail(Errc::InvalidArgument, "charge_to_mass must be positive");
    return 0.5 * charge_to_mass * B_tesla;
}

}  // namespace spinosc
