#include <doctest.h>

#include "core/mapping.hpp"
#include "core/quat.hpp"
#include "helpers.hpp"

using namespace spinosc;
using test::make_rng;

namespace {
bool approx_eq(const Quat& a, const Quat& b, double tol) {
    return norm(a - b) <= tol;
}
}  // namespace

TEST_CASE("hamilton product basis relations") {
    const Quat i{0, 1, 0, 0}, j{0, 0, 1, 0}, k{0, 0, 0, 1};
    CHECK(approx_eq(qmul(i, j), k, 0.0));
    CHECK(approx_eq(qmul(j, k), i, 0.0));
    CHECK(approx_eq(qmul(k, i), j, 0.0));
    CHECK(approx_eq(qmul(i, i), {-1, 0, 0, 0}, 0.0));
    // non-commutative: ji = -k
    CHECK(approx_eq(qmul(j, i), {0, 0, 0, -1}, 0.0));
}

TEST_CASE("product norm and associativity") {
    auto rng = make_rng();
    for (int n = 0; n < 1000; ++n) {
        const Quat a = test::random_quat(rng);
        const Quat b = test::random_quat(rng);
        CHECK(norm(qmul(a, b)) == doctest::Approx(norm(a) * norm(b)).epsilon(1e-12));
    }
    for (int n = 0; n < 200; ++n) {
        const Quat a = test::random_quat(rng);
        const Quat b = test::random_quat(rng);
        const Quat c = test::random_quat(rng);
        CHECK(approx_eq(qmul(qmul(a, b), c), qmul(a, qmul(b, c)), 1e-13));
    }
}

TEST_CASE("conjugation reverses products") {
    auto rng = make_rng(7);
    const Quat a = test::random_quat(rng), b = test::random_quat(rng);
    CHECK(approx_eq(conj(qmul(a, b)), qmul(conj(b), conj(a)), 1e-13));
    const Quat u = test::random_unit_quat(rng);
    CHECK(approx_eq(qmul(u, conj(u)), Quat::identity(), 1e-14));
}

TEST_CASE("spinor packing convention") {
    // chi+ = x1 + i x2, chi- = x3 + i x4
    const Quat q = spinor_to_quat({{1.0, 2.0}, {3.0, 4.0}});
    CHECK(q.w == 1.0);
    CHECK(q.x == 2.0);
    CHECK(q.y == 3.0);
    CHECK(q.z == 4.0);

    const Quat yplus = spinor_to_quat({{1.0 / std::sqrt(2.0), 0.0}, {0.0, 1.0 / std::sqrt(2.0)}});
    CHECK(yplus.w == doctest::Approx(1.0 / std::sqrt(2.0)));
    CHECK(yplus.z == doctest::Approx(1.0 / std::sqrt(2.0)));
    CHECK(yplus.x == 0.0);
    CHECK(yplus.y == 0.0);
}

TEST_CASE("quat_to_spinor_u inverts the hidden rotation") {
    auto rng = make_rng(11);
    for (int n = 0; n < 100; ++n) {
        const Spinor s = test::random_spinor(rng);
        const Quat u = test::random_unit_quat(rng);
        const Spinor back = quat_to_spinor_u(qmul(u, spinor_to_quat(s)), u);
        CHECK(std::abs(back.plus - s.plus) < 1e-13);
        CHECK(std::abs(back.minus - s.minus) < 1e-13);
    }
    // u = 1 reduces to the plain component read-off
    const Spinor s{{0.3, -0.4}, {0.5, 0.6}};
    const Spinor t = quat_to_spinor_u(spinor_to_quat(s), Quat::identity());
    CHECK(t.plus == s.plus);
    CHECK(t.minus == s.minus);
}

TEST_CASE("quat_to_spinor_u rejects non-unit u") {
    const Quat q{1, 0, 0, 0};
    CHECK_THROWS_AS((void)quat_to_spinor_u(q, Quat{2, 0, 0, 0}), Error);
    try {
        (void)quat_to_spinor_u(q, Quat{0.5, 0, 0, 0});
        FAIL("expected throw");
    } catch (const Error& e) {
        CHECK(e.code() == Errc::NonUnitHiddenQuaternion);
    }
}

TEST_CASE("hidden quaternion from a complex pair matches the general map") {
    // With u built from (A, B), the rotated components satisfy
    // chi+ = A(x1 + i x2) + B(x3 - i x4), chi- = A(x3 + i x4) - B(x1 - i x2)
    // after normalizing |A|^2 + |B|^2 = 1.
    auto rng = make_rng(13);
    for (int n = 0; n < 50; ++n) {
        Complex A{test::uniform(rng), test::uniform(rng)};
        Complex B{test::uniform(rng), test::uniform(rng)};
        const double scale = std::sqrt(std::norm(A) + std::norm(B));
        if (scale < 1e-3) continue;
        A /= scale;
        B /= scale;
        const Quat u = hidden_from_complex_pair(A, B);
        CHECK(is_unit(u));

        const Quat q = test::random_quat(rng);
        const Spinor s = quat_to_spinor_u(q, u);
        const Complex x1{q.w, 0}, x2{q.x, 0}, x3{q.y, 0}, x4{q.z, 0};
        const Complex ii{0, 1};
        const Complex expect_plus = std::conj(A) * (x1 + ii * x2) + std::conj(B) * (x3 - ii * x4);
        const Complex expect_minus = std::conj(A) * (x3 + ii * x4) - std::conj(B) * (x1 - ii * x2);
        CHECK(std::abs(s.plus - expect_plus) < 1e-12);
        CHECK(std::abs(s.minus - expect_minus) < 1e-12);
    }
}

TEST_CASE("beta_to_quat layout and norm") {
    const Quat b = beta_to_quat({1.0, 2.0, 3.0});
    CHECK(b.w == 0.0);
    CHECK(b.x == 3.0);
    CHECK(b.y == -2.0);
    CHECK(b.z == 1.0);

    auto rng = make_rng(17);
    for (int n = 0; n < 100; ++n) {
        const Eigen::Vector3d beta = test::random_vec3(rng);
        CHECK(norm(beta_to_quat(beta)) == doctest::Approx(beta.norm()).epsilon(1e-14));
        // pure imaginary: b^2 = -|beta|^2
        const Quat sq = qmul(beta_to_quat(beta), beta_to_quat(beta));
        CHECK(sq.w == doctest::Approx(-beta.squaredNorm()).epsilon(1e-13));
        CHECK(std::abs(sq.x) + std::abs(sq.y) + std::abs(sq.z) < 1e-13);
    }
}

TEST_CASE("fit_hidden_quaternion recovers u") {
    auto rng = make_rng(19);
    for (int n = 0; n < 100; ++n) {
        const Spinor s = test::random_unit_spinor(rng);
        const Quat u = test::random_unit_quat(rng);
        const Quat fitted = fit_hidden_quaternion(qmul(u, spinor_to_quat(s)), s);
        CHECK(approx_eq(fitted, u, 1e-12));
    }
    // scale mismatch shows up as a non-unit quotient
    const Spinor s{{1.0, 0.0}, {0.0, 0.0}};
    const Quat fitted = fit_hidden_quaternion({2, 0, 0, 0}, s);
    CHECK(norm(fitted) == doctest::Approx(2.0));
    CHECK_THROWS_AS((void)fit_hidden_quaternion({1, 0, 0, 0}, Spinor{}), Error);
}
