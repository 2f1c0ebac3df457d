#include <doctest.h>

#include <random>

#include "qframe/quaternion.hpp"
#include "support.hpp"

using namespace qframe;
using testsupport::random_quaternion;
using testsupport::random_unit_scale_quaternion;

namespace {
const Quaternion one = Quaternion::one();
const Quaternion qi = Quaternion::i();
const Quaternion qj = Quaternion::j();
const Quaternion qk = Quaternion::k();
} // namespace

TEST_CASE("multiplication table is exact") {
    CHECK(qi * qj == qk);
    CHECK(qj * qi == -qk);
    CHECK(qj * qk == qi);
    CHECK(qk * qj == -qi);
    CHECK(qk * qi == qj);
    CHECK(qi * qk == -qj);
    CHECK(qi * qi == -one);
    CHECK(qj * qj == -one);
    CHECK(qk * qk == -one);
}

TEST_CASE("addition") {
    CHECK(Quaternion(1, 0, 0, 0) + Quaternion::zero() == Quaternion(1, 0, 0, 0));
    CHECK(Quaternion(1, 2, 3, 4) + Quaternion(-1, -2, -3, -4) == Quaternion::zero());
    CHECK(Quaternion(1, 1, 0, 0) + Quaternion(0, 0, 1, 1) == Quaternion(1, 1, 1, 1));
}

TEST_CASE("product examples") {
    std::mt19937_64 rng(7);
    for (int it = 0; it < 100; ++it) {
        const Quaternion q = random_quaternion(rng);
        CHECK(q * one == q);
        CHECK(one * q == q);
    }
    // expanded by hand from the unit multiplication table
    CHECK((one + qi) * (one + qj) == Quaternion(1, 1, 1, 1));
}

TEST_CASE("conjugation") {
    CHECK(conj(Quaternion(1, 1, 1, 1)) == Quaternion(1, -1, -1, -1));
    CHECK(conj(Quaternion(3.5, 0, 0, 0)) == Quaternion(3.5, 0, 0, 0));
    CHECK(conj(qi * qj) == conj(qj) * conj(qi));
    CHECK(conj(qi * qj) == -qk);

    std::mt19937_64 rng(11);
    for (int it = 0; it < 1000; ++it) {
        const Quaternion p = random_quaternion(rng);
        const Quaternion q = random_quaternion(rng);
        CHECK(conj(conj(p)) == p);
        CHECK(approx_equal(conj(p * q), conj(q) * conj(p)));
    }
}

TEST_CASE("modulus") {
    CHECK(norm(Quaternion(1, 1, 1, 1)) == doctest::Approx(2.0).epsilon(1e-15));
    CHECK(norm(Quaternion::zero()) == 0.0);
    // |i (3 + 4j)| = |i| |3 + 4j| = 5
    CHECK(norm(qi * Quaternion(3, 0, 4, 0)) == doctest::Approx(5.0).epsilon(1e-14));

    std::mt19937_64 rng(13);
    for (int it = 0; it < 10000; ++it) {
        const Quaternion p = random_quaternion(rng);
        const Quaternion q = random_quaternion(rng);
        CHECK(norm(p * q) == doctest::Approx(norm(p) * norm(q)).epsilon(1e-12));
        // |q|^2 = q conj(q), with vanishing imaginary part
        const Quaternion qq = q * conj(q);
        CHECK(qq.w == doctest::Approx(norm_sq(q)).epsilon(1e-13));
        CHECK(std::abs(qq.x) <= 1e-14);
        CHECK(std::abs(qq.y) <= 1e-14);
        CHECK(std::abs(qq.z) <= 1e-14);
    }
}

TEST_CASE("inverse") {
    CHECK(inverse(qi) == -qi);
    CHECK(inverse(Quaternion(2, 0, 0, 0)) == Quaternion(0.5, 0, 0, 0));

    const Quaternion r = inverse(Quaternion(1, 1, 0, 0));
    CHECK(approx_equal(r, Quaternion(0.5, -0.5, 0, 0)));
    CHECK(approx_equal(Quaternion(1, 1, 0, 0) * r, one, 1e-14, 0.0));
    CHECK(approx_equal(r * Quaternion(1, 1, 0, 0), one, 1e-14, 0.0));

    CHECK_THROWS_AS(inverse(Quaternion::zero()), DivisionByZero);
    CHECK_THROWS_AS(inverse(Quaternion(1e-301, 0, 0, 0)), DivisionByZero);
}

TEST_CASE("associativity and distributivity") {
    std::mt19937_64 rng(17);
    for (int it = 0; it < 10000; ++it) {
        const Quaternion q = random_quaternion(rng);
        const Quaternion r = random_quaternion(rng);
        const Quaternion s = random_quaternion(rng);
        const double scale = std::max(1.0, norm(q) * norm(r) * norm(s));
        CHECK(norm((q * r) * s - q * (r * s)) <= 1e-12 * scale);
        CHECK(norm(q * (r + s) - (q * r + q * s)) <= 1e-12 * scale);
    }
}

TEST_CASE("cancellation") {
    std::mt19937_64 rng(19);
    for (int it = 0; it < 1000; ++it) {
        const Quaternion q = random_unit_scale_quaternion(rng);
        const Quaternion r = random_quaternion(rng);
        const Quaternion recovered = inverse(q) * (q * r);
        CHECK(norm(recovered - r) <= 1e-10 * std::max(1.0, norm(r)));
    }
}

TEST_CASE("approx_equal tolerances") {
    CHECK(approx_equal(one, Quaternion(1 + 1e-13, 0, 0, 0)));
    CHECK_FALSE(approx_equal(one, Quaternion(1 + 1e-9, 0, 0, 0)));
    CHECK(approx_equal(one, Quaternion(1 + 1e-9, 0, 0, 0), 1e-8, 0.0));
}
