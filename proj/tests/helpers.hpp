#ifndef SPINOSC_TESTS_HELPERS_HPP
#define SPINOSC_TESTS_HELPERS_HPP

#include <random>

#include "core/dynamics.hpp"
#include "core/quat.hpp"

namespace spinosc::test {

inline std::mt19937_64 make_rng(uint64_t seed = 20240817ULL) { return std::mt19937_64(seed); }

inline double uniform(std::mt19937_64& rng, double lo = -1.0, double hi = 1.0) {
    return std::uniform_real_distribution<double>(lo, hi)(rng);
}

inline Quat random_quat(std::mt19937_64& rng) {
    return {uniform(rng), uniform(rng), uniform(rng), uniform(rng)};
}

inline Quat random_unit_quat(std::mt19937_64& rng) {
    Quat q = random_quat(rng);
    while (norm(q) < 1e-3) q = random_quat(rng);
    return (1.0 / norm(q)) * q;
}

inline Spinor random_spinor(std::mt19937_64& rng) {
    return {{uniform(rng), uniform(rng)}, {uniform(rng), uniform(rng)}};
}

inline Spinor random_unit_spinor(std::mt19937_64& rng) {
    Spinor s = random_spinor(rng);
    while (norm(s) < 1e-3) s = random_spinor(rng);
    return (1.0 / norm(s)) * s;
}

inline Eigen::Vector3d random_vec3(std::mt19937_64& rng, double scale = 1.0) {
    return {scale * uniform(rng), scale * uniform(rng), scale * uniform(rng)};
}

inline OscState random_osc_state(std::mt19937_64& rng, double vel_scale = 1.0) {
    OscState s;
    for (int k = 0; k < 4; ++k) {
        s.x[k] = uniform(rng);
        s.v[k] = vel_scale * uniform(rng);
    }
    return s;
}

}  // namespace spinosc::test

#endif
