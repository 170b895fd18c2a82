#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <cstring>
#include <filesystem>
#include <string>

#include "spinosc.h"

namespace {

std::string temp_dir(const char* tag) {
    const auto dir = std::filesystem::temp_directory_path() / (std::string("spinosc_capi_") + tag);
    std::filesystem::remove_all(dir);
    return dir.string();
}

}  // namespace

TEST_CASE("quaternion algebra through the C API") {
    const spinosc_quat i{0, 1, 0, 0}, j{0, 0, 1, 0};
    const spinosc_quat k = spinosc_qmul(i, j);
    CHECK(k.w == 0.0);
    CHECK(k.z == 1.0);

    const spinosc_quat c = spinosc_qconj({1, 2, 3, 4});
    CHECK(c.x == -2.0);
    CHECK(spinosc_qnorm({3, 0, 4, 0}) == doctest::Approx(5.0));

    const double beta[3] = {1.0, 2.0, 3.0};
    const spinosc_quat b = spinosc_beta_to_quat(beta);
    CHECK(b.x == 3.0);
    CHECK(b.y == -2.0);
    CHECK(b.z == 1.0);
}

TEST_CASE("spinor round trip and error reporting") {
    const spinosc_spinor s{0.6, 0.0, 0.48, 0.64};
    const spinosc_quat q = spinosc_spinor_to_quat(s);
    spinosc_spinor back;
    REQUIRE(spinosc_quat_to_spinor_u(q, {1, 0, 0, 0}, &back) == SPINOSC_OK);
    CHECK(back.re_plus == doctest::Approx(0.6));
    CHECK(back.im_minus == doctest::Approx(0.64));

    CHECK(spinosc_quat_to_spinor_u(q, {2, 0, 0, 0}, &back) == SPINOSC_ERR_NON_UNIT_QUATERNION);
    CHECK(std::strlen(spinosc_last_error()) > 0);
    CHECK(std::string(spinosc_status_name(SPINOSC_ERR_NON_UNIT_QUATERNION)).size() > 0);

    spinosc_quat u;
    CHECK(spinosc_fit_hidden_quaternion(q, s, &u) == SPINOSC_OK);
    CHECK(u.w == doctest::Approx(1.0).epsilon(1e-12));
    CHECK(spinosc_fit_hidden_quaternion(q, {0, 0, 0, 0}, &u) == SPINOSC_ERR_DEGENERATE_SPINOR);
}

TEST_CASE("profiles and integration") {
    const double beta[3] = {0.0, 0.0, 0.5};
    spinosc_profile* profile = nullptr;
    REQUIRE(spinosc_profile_constant(beta, &profile) == SPINOSC_OK);

    spinosc_field_sample sample;
    REQUIRE(spinosc_profile_sample(profile, 3.0, &sample) == SPINOSC_OK);
    CHECK(sample.beta[2] == 0.5);
    CHECK(sample.beta_dot[2] == 0.0);

    const spinosc_spinor s0{1, 0, 0, 0};
    spinosc_osc_state init;
    REQUIRE(spinosc_spinor_to_oscillator_init(s0, {1, 0, 0, 0}, beta, 10.0, &init) == SPINOSC_OK);
    CHECK(init.x[0] == 1.0);
    CHECK(init.v[1] == doctest::Approx(-10.5));
    CHECK(spinosc_lagrangian_l2(&init, beta, 10.0) == doctest::Approx(0.0).epsilon(1e-10));

    spinosc_osc_trajectory* traj = nullptr;
    REQUIRE(spinosc_integrate_oscillator(profile, 10.0, &init, 0.0, 50.0, 1e-3, &traj) ==
            SPINOSC_OK);
    CHECK(spinosc_osc_trajectory_size(traj) == 50001);
    CHECK(spinosc_osc_trajectory_time(traj, 1000) == doctest::Approx(1.0));

    spinosc_osc_state end;
    REQUIRE(spinosc_osc_trajectory_state(traj, 50000, &end) == SPINOSC_OK);
    spinosc_spinor extracted;
    REQUIRE(spinosc_extract_spinor(&end, {1, 0, 0, 0}, &extracted) == SPINOSC_OK);
    const double n = std::hypot(std::hypot(extracted.re_plus, extracted.im_plus),
                                std::hypot(extracted.re_minus, extracted.im_minus));
    CHECK(n == doctest::Approx(1.0).epsilon(1e-8));

    double peaks[8], resolution;
    size_t n_peaks = 0;
    REQUIRE(spinosc_frequency_split(traj, 0, peaks, 8, &n_peaks, &resolution) == SPINOSC_OK);
    REQUIRE(n_peaks == 1);  // aligned u keeps x1 on a single line
    CHECK(std::abs(peaks[0] - 10.5) < resolution);

    // step guard propagates as a status
    spinosc_osc_trajectory* reject = nullptr;
    CHECK(spinosc_integrate_oscillator(profile, 10.0, &init, 0.0, 1.0, 0.05, &reject) ==
          SPINOSC_ERR_STEP_TOO_LARGE);

    spinosc_osc_trajectory_free(traj);
    spinosc_profile_free(profile);
}

TEST_CASE("spe integration and observables") {
    const double beta[3] = {0.0, 0.0, 0.5};
    spinosc_profile* profile = nullptr;
    REQUIRE(spinosc_profile_constant(beta, &profile) == SPINOSC_OK);

    const double r = 1.0 / std::sqrt(2.0);
    const spinosc_spinor x_plus{r, 0.0, r, 0.0};
    spinosc_spinor_trajectory* traj = nullptr;
    REQUIRE(spinosc_integrate_spe(profile, 10.0, x_plus, 0.0, 30.0, 1e-3, &traj) == SPINOSC_OK);

    const double axis[3] = {0.0, 0.0, 1.0};
    double rate = 0.0;
    REQUIRE(spinosc_precession_rate(traj, axis, &rate) == SPINOSC_OK);
    CHECK(rate == doctest::Approx(1.0).epsilon(1e-6));

    double residual = 0.0;
    REQUIRE(spinosc_geometric_phase_check(profile, x_plus, 10.0, 1e-4, &residual) == SPINOSC_OK);
    CHECK(residual < 1e-6);

    double bloch[3];
    REQUIRE(spinosc_bloch_vector(x_plus, bloch) == SPINOSC_OK);
    CHECK(bloch[0] == doctest::Approx(0.5));

    spinosc_spinor_trajectory_free(traj);
    spinosc_profile_free(profile);
}

TEST_CASE("scenario runner through the C API") {
    char* names = spinosc_bundled_scenario_names();
    REQUIRE(names != nullptr);
    CHECK(std::string(names).find("zeeman_constant_z") != std::string::npos);
    spinosc_string_free(names);

    char* config = spinosc_bundled_scenario_config("geometric_phase");
    REQUIRE(config != nullptr);
    CHECK(spinosc_bundled_scenario_config("bogus") == nullptr);

    char* summary = nullptr;
    const std::string dir = temp_dir("run");
    REQUIRE(spinosc_run_scenario(config, dir.c_str(), &summary) == SPINOSC_OK);
    REQUIRE(summary != nullptr);
    CHECK(std::string(summary).find("phase_residual") != std::string::npos);
    CHECK(std::filesystem::exists(std::filesystem::path(dir) / "trajectory.csv"));
    spinosc_string_free(summary);
    spinosc_string_free(config);

    // config errors carry a message naming the field
    char* bad_summary = nullptr;
    CHECK(spinosc_run_scenario("{\"field\": {}}", temp_dir("bad").c_str(), &bad_summary) ==
          SPINOSC_ERR_CONFIG);
    CHECK(std::string(spinosc_last_error()).find("omega0") != std::string::npos);
}
