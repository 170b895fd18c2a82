#include <doctest.h>

#include "core/mapping.hpp"
#include "core/observables.hpp"
#include "helpers.hpp"

using namespace spinosc;
using test::make_rng;

namespace {

double spinor_dev(const Spinor& a, const Spinor& b) {
    return std::max(std::abs(a.plus - b.plus), std::abs(a.minus - b.minus));
}

}  // namespace

TEST_CASE("initial condition for the trivial hidden variable") {
    const double omega0 = 10.0;
    const Spinor s{{1.0, 0.0}, {0.0, 0.0}};
    const OscState free = spinor_to_oscillator_init(s, Quat::identity(), Eigen::Vector3d::Zero(),
                                                    omega0);
    CHECK((free.x - Eigen::Vector4d::Unit(0)).norm() == 0.0);
    CHECK((free.v - Eigen::Vector4d(0.0, -omega0, 0.0, 0.0)).norm() == 0.0);

    const OscState coupled =
        spinor_to_oscillator_init(s, Quat::identity(), {0.0, 0.0, 0.5}, omega0);
    CHECK((coupled.x - Eigen::Vector4d::Unit(0)).norm() == 0.0);
    CHECK((coupled.v - Eigen::Vector4d(0.0, -(omega0 + 0.5), 0.0, 0.0)).norm() < 1e-14);
}

TEST_CASE("mapped states satisfy the quantum constraint") {
    auto rng = make_rng(73);
    const double omega0 = 10.0;
    for (int n = 0; n < 100; ++n) {
        const Spinor s = test::random_unit_spinor(rng);
        const Quat u = test::random_unit_quat(rng);
        const Eigen::Vector3d beta = test::random_vec3(rng);
        const OscState state = spinor_to_oscillator_init(s, u, beta, omega0);
        CHECK(check_quantum_constraint(state, beta, omega0) < 1e-12);
    }
}

TEST_CASE("initial-condition validation") {
    const Spinor ok{{1.0, 0.0}, {0.0, 0.0}};
    try {
        (void)spinor_to_oscillator_init(ok, {0.5, 0, 0, 0}, Eigen::Vector3d::Zero(), 10.0);
        FAIL("expected throw");
    } catch (const Error& e) {
        CHECK(e.code() == Errc::NonUnitHiddenQuaternion);
    }
    try {
        (void)spinor_to_oscillator_init({{2.0, 0.0}, {0.0, 0.0}}, Quat::identity(),
                                        Eigen::Vector3d::Zero(), 10.0);
        FAIL("expected throw");
    } catch (const Error& e) {
        CHECK(e.code() == Errc::NotNormalized);
    }
}

TEST_CASE("extraction inverts the forward map") {
    auto rng = make_rng(79);
    for (int n = 0; n < 100; ++n) {
        const Spinor s = test::random_unit_spinor(rng);
        const Quat u = test::random_unit_quat(rng);
        const Eigen::Vector3d beta = test::random_vec3(rng);
        const OscState state = spinor_to_oscillator_init(s, u, beta, 10.0);
        CHECK(spinor_dev(extract_spinor(state, u), s) < 1e-13);
    }
}

TEST_CASE("different hidden variables give different oscillators, identical spinors") {
    auto rng = make_rng(83);
    const Spinor s = test::random_unit_spinor(rng);
    const Eigen::Vector3d beta{0.2, 0.3, 0.4};
    const Quat u1 = Quat::identity();
    const Quat u2{0.0, 0.0, 0.0, 1.0};
    const OscState a = spinor_to_oscillator_init(s, u1, beta, 10.0);
    const OscState b = spinor_to_oscillator_init(s, u2, beta, 10.0);
    CHECK((a.x - b.x).norm() > 0.1);
    CHECK(spinor_dev(extract_spinor(a, u1), extract_spinor(b, u2)) < 1e-13);
}

TEST_CASE("a global left rotation is invisible to the extracted spinor") {
    auto rng = make_rng(89);
    for (int n = 0; n < 50; ++n) {
        const Quat g = test::random_unit_quat(rng);
        const Quat u = test::random_unit_quat(rng);
        const OscState state = test::random_osc_state(rng);
        OscState rotated;
        rotated.x = qmul(g, Quat::from_vec(state.x)).vec();
        rotated.v = qmul(g, Quat::from_vec(state.v)).vec();
        const Quat gu = qmul(g, u);
        CHECK(spinor_dev(extract_spinor(rotated, gu), extract_spinor(state, u)) < 1e-13);
    }
}

TEST_CASE("constraint residual is dimensionless and scale invariant") {
    const double omega0 = 10.0;
    OscState rest;
    rest.x = Eigen::Vector4d::Unit(0);
    CHECK(check_quantum_constraint(rest, Eigen::Vector3d::Zero(), omega0) ==
          doctest::Approx(0.5));
    OscState scaled;
    scaled.x = 3.0 * rest.x;
    CHECK(check_quantum_constraint(scaled, Eigen::Vector3d::Zero(), omega0) ==
          doctest::Approx(0.5));
    CHECK(check_quantum_constraint(OscState{}, Eigen::Vector3d::Zero(), omega0) == 0.0);
}

TEST_CASE("mode decomposition inverts the analytic solution") {
    auto rng = make_rng(97);
    const double omega0 = 10.0;
    for (int n = 0; n < 50; ++n) {
        const Eigen::Vector3d beta = test::random_vec3(rng, 0.5) + Eigen::Vector3d(0, 0, 0.6);
        const ModeCoefficients in{{test::uniform(rng), test::uniform(rng)},
                                  {test::uniform(rng), test::uniform(rng)},
                                  {test::uniform(rng), test::uniform(rng)},
                                  {test::uniform(rng), test::uniform(rng)}};
        const OscState state = analytic_oscillator(in, beta, omega0, 0.0);
        const ModeCoefficients out = decompose_modes(state, beta, omega0);
        CHECK(std::abs(out.a - in.a) < 1e-10);
        CHECK(std::abs(out.b - in.b) < 1e-10);
        CHECK(std::abs(out.c - in.c) < 1e-10);
        CHECK(std::abs(out.d - in.d) < 1e-10);
    }
    CHECK_THROWS_AS((void)decompose_modes(OscState{}, Eigen::Vector3d::Zero(), omega0), Error);
}

TEST_CASE("quantum-constrained states have ad = bc") {
    auto rng = make_rng(101);
    const double omega0 = 10.0;
    for (int n = 0; n < 50; ++n) {
        const Eigen::Vector3d beta = test::random_vec3(rng, 0.3) + Eigen::Vector3d(0.5, 0, 0);
        const Spinor s = test::random_unit_spinor(rng);
        const Quat u = test::random_unit_quat(rng);
        const OscState state = spinor_to_oscillator_init(s, u, beta, omega0);
        const ModeCoefficients mc = decompose_modes(state, beta, omega0);
        CHECK(std::abs(mc.a * mc.d - mc.b * mc.c) < 1e-10);
    }
    // generic phase-space points break the relation
    const Eigen::Vector3d beta{0.5, 0.1, 0.2};
    OscState generic;
    generic.x << 1.0, 0.0, 0.0, 0.0;
    generic.v << 0.0, 0.0, 0.0, 0.0;
    const ModeCoefficients mc = decompose_modes(generic, beta, omega0);
    CHECK(std::abs(mc.a * mc.d - mc.b * mc.c) > 1e-3);
}

TEST_CASE("aligned mode pairs reproduce the two-level analytic solution") {
    const double omega0 = 10.0;
    const Eigen::Vector3d beta{0.3, -0.2, 0.4};
    const Complex f{0.6, 0.0}, g{0.48, 0.64};
    const double r2 = std::sqrt(2.0);
    const ModeCoefficients coeffs{r2 * f, r2 * g, 0.0, 0.0};
    for (double t : {0.0, 0.7, 2.9, 8.1}) {
        const OscState from_modes = analytic_oscillator(coeffs, beta, omega0, t);
        const Spinor s = analytic_spinor(f, g, beta, omega0, t);
        const OscState from_spinor = spinor_to_oscillator_init(s, Quat::identity(), beta, omega0);
        CHECK((from_modes.x - from_spinor.x).norm() < 1e-12);
        CHECK((from_modes.v - from_spinor.v).norm() < 1e-12);
    }
}

TEST_CASE("extracted oscillator trajectory follows the spinor equation") {
    auto rng = make_rng(103);
    const double omega0 = 10.0;
    const auto profile = FieldProfile::sinusoidal({0.1, -0.2, 0.3}, {0.2, 0.1, -0.1}, 1.3, 0.4);
    const Spinor s0 = test::random_unit_spinor(rng);
    const Quat u = test::random_unit_quat(rng);
    const double t1 = 10.0, dt = 1e-3;

    const OscState init = spinor_to_oscillator_init(s0, u, profile.sample(0.0).beta, omega0);
    const auto osc = integrate_oscillator(profile, omega0, init, 0.0, t1, dt);
    const auto spe = integrate_spe(profile, omega0, s0, 0.0, t1, dt);
    const auto extracted = extract_spinor_trajectory(osc, u);

    REQUIRE(extracted.size() == spe.size());
    double max_dev = 0.0;
    for (size_t k = 0; k < spe.size(); ++k)
        max_dev = std::max(max_dev, spinor_dev(extracted.samples[k], spe.samples[k]));
    CHECK(max_dev < 1e-7);
}
