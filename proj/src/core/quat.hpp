#ifndef SPINOSC_CORE_QUAT_HPP
#define SPINOSC_CORE_QUAT_HPP

#include <Eigen/Dense>
#include <complex>

#include "error.hpp"

namespace spinosc {

using Complex = std::complex<double>;

// Quaternion w + ix + jy + kz, Hamilton convention (ij = k, right-handed).
struct Quat {
    double w = 0.0, x = 0.0, y = 0.0, z = 0.0;

    static Quat identity() { return {1.0, 0.0, 0.0, 0.0}; }

    Eigen::Vector4d vec() const { return {w, x, y, z}; }
    static Quat from_vec(const Eigen::Vector4d& v) { return {v[0], v[1], v[2], v[3]}; }
};

inline Quat operator+(const Quat& a, const Quat& b) {
    return {a.w + b.w, a.x + b.x, a.y + b.y, a.z + b.z};
}
inline Quat operator-(const Quat& a, const Quat& b) {
    return {a.w - b.w, a.x - b.x, a.y - b.y, a.z - b.z};
}
inline Quat operator*(double s, const Quat& a) { return {s * a.w, s * a.x, s * a.y, s * a.z}; }

// Hamilton product; non-commutative, left/right factors matter throughout.
inline Quat qmul(const Quat& a, const Quat& b) {
    return {a.w * b.w - a.x * b.x - a.y * b.y - a.z * b.z,
            a.w * b.x + a.x * b.w + a.y * b.z - a.z * b.y,
            a.w * b.y - a.x * b.z + a.y * b.w + a.z * b.x,
            a.w * b.z + a.x * b.y - a.y * b.x + a.z * b.w};
}

inline Quat conj(const Quat& a) { return {a.w, -a.x, -a.y, -a.z}; }
inline double norm2(const Quat& a) { return a.w * a.w + a.x * a.x + a.y * a.y + a.z * a.z; }
inline double norm(const Quat& a) { return std::sqrt(norm2(a)); }

constexpr double kUnitQuatTol = 1e-9;

inline bool is_unit(const Quat& u, double tol = kUnitQuatTol) {
    return std::abs(norm(u) - 1.0) <= tol;
}

// Two complex amplitudes (chi_plus, chi_minus); not necessarily normalized.
struct Spinor {
    Complex plus{0.0, 0.0};
    Complex minus{0.0, 0.0};
};

inline Spinor operator+(const Spinor& a, const Spinor& b) {
    return {a.plus + b.plus, a.minus + b.minus};
}
inline Spinor operator*(double s, const Spinor& a) { return {s * a.plus, s * a.minus}; }

inline double norm2(const Spinor& s) { return std::norm(s.plus) + std::norm(s.minus); }
inline double norm(const Spinor& s) { return std::sqrt(norm2(s)); }

// chi+ = x1 + i x2, chi- = x3 + i x4  maps to  q = x1 + i x2 + j x3 + k x4.
inline Quat spinor_to_quat(const Spinor& s) {
    return {s.plus.real(), s.plus.imag(), s.minus.real(), s.minus.imag()};
}

inline Spinor quat_to_spinor(const Quat& q) {
    return {Complex(q.w, q.x), Complex(q.y, q.z)};
}

// Undoes the hidden rotation: s = u* q, then reads the spinor components.
inline Spinor quat_to_spinor_u(const Quat& q, const Quat& u) {
    if (!is_unit(u))
        fail(Errc::NonUnitHiddenQuaternion, "hidden quaternion u is not unit");
    return quat_to_spinor(qmul(conj(u), q));
}

// b = 0 + i bz - j by + k bx; right-multiplication by b equals the coupling
// matrix acting from the left on the oscillator 4-vector.
inline Quat beta_to_quat(const Eigen::Vector3d& beta) {
    return {0.0, beta.z(), -beta.y(), beta.x()};
}

// Solves u = q s^-1. Returned quotient is not renormalized; if norm(q) equals
// norm(s) the result is unit.
inline Quat fit_hidden_quaternion(const Quat& q, const Spinor& s) {
    const Quat sq = spinor_to_quat(s);
    const double n2 = norm2(sq);
    if (std::sqrt(n2) <= 1e-12)
        fail(Errc::DegenerateSpinor, "spinor norm too small to invert");
    return (1.0 / n2) * qmul(q, conj(sq));
}

}  // namespace spinosc

#endif
