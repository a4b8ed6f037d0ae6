#include "doctest.h"

#include "helpers.hpp"
#include "s3h/quat.hpp"

using namespace s3h;
using s3h::test::random_imquaternion;
using s3h::test::random_quaternion;
using s3h::test::random_unit_quaternion;

namespace {
const Quaternion e1 = Quaternion::e1();
const Quaternion e2 = Quaternion::e2();
const Quaternion e3 = Quaternion::e3();
}

TEST_CASE("basis products") {
    CHECK(norm(e1 * e2 - e3) == 0.0);
    CHECK(norm(e2 * e3 - e1) == 0.0);
    CHECK(norm(e1 * e1 + Quaternion::one()) == 0.0);
    CHECK(norm(e2 * e2 + Quaternion::one()) == 0.0);
    CHECK(norm(e3 * e3 + Quaternion::one()) == 0.0);
    // (1 + e1)(1 - e1) = 2
    const Quaternion p = Quaternion::one() + e1;
    const Quaternion q = Quaternion::one() - e1;
    CHECK(norm(p * q - 2.0 * Quaternion::one()) == 0.0);
}

TEST_CASE("conjugations") {
    CHECK(norm(star(Quaternion::one() + e1) - (Quaternion::one() - e1)) == 0.0);
    // star is an anti-homomorphism: star(e1 e2) = (-e2)(-e1) = -e3
    CHECK(norm(star(e1 * e2) + e3) == 0.0);

    const CQuaternion u(e1, e2);  // e1 + i e2
    CHECK(norm(bar(u) - CQuaternion(e1, -e2)) == 0.0);
    CHECK(norm(bar(bar(u)) - u) == 0.0);

    for (int i = 0; i < 200; ++i) {
        const Quaternion p = random_quaternion(), q = random_quaternion();
        CHECK(norm(star(p * q) - star(q) * star(p)) < 1e-12);
        CHECK(norm(star(star(p)) - p) < 1e-15);
        const CQuaternion u2(random_quaternion(), random_quaternion());
        CHECK(norm(star(bar(u2)) - bar(star(u2))) == 0.0);
    }
}

TEST_CASE("complex bilinear products") {
    const CQuaternion ie1(Quaternion{}, e1);
    CHECK(std::abs(cdot(ie1, ie1) - Complex(-1, 0)) == 0.0);

    const CImQuaternion a(ImQuaternion::e1()), b(ImQuaternion::e2());
    CHECK(norm(ccross(a, b) - CImQuaternion(ImQuaternion::e3())) == 0.0);

    const CQuaternion u(e1, e2), v(e1, -e2);  // e1 + i e2, e1 - i e2
    CHECK(std::abs(cdot(u, v) - Complex(2, 0)) == 0.0);
}

TEST_CASE("imaginary product split") {
    auto [s1, v1] = improd_split(ImQuaternion::e1(), ImQuaternion::e2());
    CHECK(s1 == 0.0);
    CHECK(norm(v1 - ImQuaternion::e3()) == 0.0);

    auto [s2, v2] = improd_split(ImQuaternion::e1(), ImQuaternion::e1());
    CHECK(s2 == -1.0);
    CHECK(norm(v2) == 0.0);

    // (2 e1 + e2) e2 = -1 + 2 e3
    auto [s3, v3] = improd_split(ImQuaternion{2, 1, 0}, ImQuaternion::e2());
    CHECK(s3 == -1.0);
    CHECK(norm(v3 - ImQuaternion{0, 0, 2}) == 0.0);

    for (int i = 0; i < 500; ++i) {
        const ImQuaternion a = random_imquaternion(2.0), b = random_imquaternion(2.0);
        auto [s, v] = improd_split(a, b);
        const Quaternion reassembled = s * Quaternion::one() + as_quaternion(v);
        CHECK(norm(reassembled - as_quaternion(a) * as_quaternion(b)) == 0.0);
    }
}

TEST_CASE("algebra properties on random samples") {
    for (int i = 0; i < 2000; ++i) {
        const Quaternion p = random_quaternion(2.0), q = random_quaternion(2.0),
                         r = random_quaternion(2.0);
        CHECK(norm((p * q) * r - p * (q * r)) < 1e-12);
        CHECK(std::abs(norm(p * q) - norm(p) * norm(q)) < 1e-12);
    }
    // tangency: <p alpha, p> = 0 for unit p
    for (int i = 0; i < 500; ++i) {
        const Quaternion p = random_unit_quaternion();
        const ImQuaternion a = random_imquaternion(3.0);
        CHECK(std::abs(dot(p * a, p)) < 1e-14);
    }
}

TEST_CASE("complexified product rule") {
    for (int i = 0; i < 200; ++i) {
        const Quaternion p1 = random_quaternion(), p2 = random_quaternion();
        const Quaternion q1 = random_quaternion(), q2 = random_quaternion();
        const CQuaternion u(p1, p2), v(q1, q2);
        const CQuaternion prod = u * v;
        CHECK(norm(prod.re - (p1 * q1 - p2 * q2)) < 1e-14);
        CHECK(norm(prod.im - (p1 * q2 + p2 * q1)) < 1e-14);
        // cdot is bilinear, not Hermitian: cdot(i u, v) = i cdot(u, v)
        CHECK(std::abs(cdot(times_i(u), v) - Complex(0, 1) * cdot(u, v)) < 1e-14);
    }
}
