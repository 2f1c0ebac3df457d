#include <doctest.h>

#include <cmath>
#include <random>

#include "qframe/embedding.hpp"
#include "qframe/qmatrix.hpp"
#include "qframe/qvector.hpp"
#include "support.hpp"

using namespace qframe;
using testsupport::random_quaternion;
using testsupport::random_qvector;

namespace {

const Quaternion qi = Quaternion::i();
const Quaternion qj = Quaternion::j();
const Quaternion qk = Quaternion::k();

QMatrix random_qmatrix(std::mt19937_64& rng, std::size_t rows, std::size_t cols) {
    QMatrix m(rows, cols);
    for (std::size_t r = 0; r < rows; ++r)
        for (std::size_t c = 0; c < cols; ++c) m(r, c) = random_quaternion(rng);
    return m;
}

double frobenius_diff(const RealMatrix& a, const RealMatrix& b) {
    double acc = 0.0;
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t j = 0; j < a.cols(); ++j) {
            const double d = a(i, j) - b(i, j);
            acc += d * d;
        }
    return std::sqrt(acc);
}

} // namespace

TEST_CASE("inner product basics") {
    const QVector e1 = QVector::unit(2, 0);
    const QVector e2 = QVector::unit(2, 1);
    CHECK(inner(e1, e2) == Quaternion::zero());
    CHECK(inner(qi * e1, e1) == qi);
    CHECK(inner(e1, qj * e1) == -qj);
    CHECK_THROWS_AS(inner(e1, QVector::unit(3, 0)), DimensionMismatch);
}

TEST_CASE("inner product axioms") {
    std::mt19937_64 rng(23);
    for (int it = 0; it < 1000; ++it) {
        const QVector f = random_qvector(rng, 5);
        const QVector g = random_qvector(rng, 5);
        const QVector h = random_qvector(rng, 5);
        const Quaternion q = random_quaternion(rng);

        CHECK(approx_equal(conj(inner(f, g)), inner(g, f), 1e-12, 1e-12));
        CHECK(approx_equal(inner(f, g + h), inner(f, g) + inner(f, h), 1e-12, 1e-12));
        CHECK(approx_equal(inner(q * f, g), q * inner(f, g), 1e-11, 1e-11));
        CHECK(approx_equal(inner(f, q * g), inner(f, g) * conj(q), 1e-11, 1e-11));

        // <f|f> is real and nonnegative
        const Quaternion ff = inner(f, f);
        CHECK(ff.w >= 0.0);
        CHECK(std::abs(ff.x) <= 1e-12 * ff.w);
        CHECK(std::abs(ff.y) <= 1e-12 * ff.w);
        CHECK(std::abs(ff.z) <= 1e-12 * ff.w);
    }
}

TEST_CASE("schwartz inequality") {
    std::mt19937_64 rng(29);
    for (int it = 0; it < 10000; ++it) {
        const QVector f = random_qvector(rng, 4);
        const QVector g = random_qvector(rng, 4);
        const Quaternion fg = inner(f, g);
        const double lhs = (fg * inner(g, f)).w; // = |<f|g>|^2
        const double rhs = norm(f) * norm(f) * norm(g) * norm(g);
        CHECK(lhs <= rhs + 1e-10 * std::max(1.0, rhs));
    }
}

TEST_CASE("pythagoras for orthogonal pairs") {
    std::mt19937_64 rng(31);
    for (int it = 0; it < 1000; ++it) {
        const QVector f = random_qvector(rng, 4);
        QVector g = random_qvector(rng, 4);
        const double nf2 = norm(f) * norm(f);
        if (nf2 < 1e-8) continue;
        // orthogonalize g against f (left coefficient)
        g = g - inner(g, f) * ((1.0 / nf2) * f);
        const double sum = norm(f + g) * norm(f + g);
        const double parts = nf2 + norm(g) * norm(g);
        CHECK(sum == doctest::Approx(parts).epsilon(1e-10));
    }
}

TEST_CASE("vector norm") {
    CHECK(norm(QVector::unit(3, 0)) == 1.0);
    CHECK(norm(QVector({Quaternion(1, 1, 0, 0), Quaternion(1, 0, 1, 0)})) ==
          doctest::Approx(2.0).epsilon(1e-15));

    std::mt19937_64 rng(37);
    for (int it = 0; it < 1000; ++it) {
        const Quaternion q = random_quaternion(rng);
        const QVector f = random_qvector(rng, 6);
        CHECK(norm(q * f) == doctest::Approx(norm(q) * norm(f)).epsilon(1e-12));
    }
}

TEST_CASE("left scaling") {
    const QVector e1 = QVector::unit(2, 0);
    CHECK(1.0 * e1 == e1);
    CHECK(qi * (qj * e1) == qk * e1);
    CHECK((qi + qj) * e1 == qi * e1 + qj * e1);
}

TEST_CASE("gram_schmidt") {
    const QVector e1 = QVector::unit(2, 0);
    const QVector e2 = QVector::unit(2, 1);

    SUBCASE("orthonormal input unchanged") {
        const auto basis = gram_schmidt({e1, e2});
        REQUIRE(basis.size() == 2);
        CHECK(norm(basis[0] - e1) <= 1e-15);
        CHECK(norm(basis[1] - e2) <= 1e-15);
    }
    SUBCASE("dependent copy dropped") {
        const auto basis = gram_schmidt({e1, e1});
        REQUIRE(basis.size() == 1);
        CHECK(norm(basis[0] - e1) <= 1e-15);
    }
    SUBCASE("hand-worked 2x2") {
        const QVector v1({Quaternion::one(), Quaternion::zero()});
        const QVector v2({Quaternion::one(), Quaternion::one()});
        const auto basis = gram_schmidt({v1, v2});
        REQUIRE(basis.size() == 2);
        CHECK(norm(basis[0] - e1) <= 1e-14);
        CHECK(norm(basis[1] - e2) <= 1e-14);
    }
    SUBCASE("left-scalar dependence is detected") {
        const auto basis = gram_schmidt({e1, qi * e1, e2});
        CHECK(basis.size() == 2);
    }
    SUBCASE("output is orthonormal and spans the input") {
        std::mt19937_64 rng(41);
        for (int it = 0; it < 200; ++it) {
            std::vector<QVector> vs;
            for (int k = 0; k < 5; ++k) vs.push_back(random_qvector(rng, 4));
            const auto basis = gram_schmidt(vs);
            REQUIRE(basis.size() == 4);
            for (std::size_t a = 0; a < basis.size(); ++a) {
                for (std::size_t b = 0; b < basis.size(); ++b) {
                    const Quaternion p = inner(basis[a], basis[b]);
                    const Quaternion expected = a == b ? Quaternion::one() : Quaternion::zero();
                    CHECK(approx_equal(p, expected, 1e-12, 1e-12));
                }
            }
            // basis expansion f = sum <f|e_k> e_k for f in the span
            const QVector f = random_qvector(rng, 4);
            QVector recon(4);
            for (const auto& e : basis) recon = recon + inner(f, e) * e;
            CHECK(norm(recon - f) <= 1e-9 * std::max(1.0, norm(f)));
        }
    }
    SUBCASE("dimension mismatch") {
        CHECK_THROWS_AS(gram_schmidt({e1, QVector::unit(3, 0)}), DimensionMismatch);
    }
}

TEST_CASE("matrix product") {
    std::mt19937_64 rng(43);
    const QMatrix m = random_qmatrix(rng, 3, 3);
    const QMatrix id = QMatrix::identity(3);
    CHECK(m * id == m);

    QMatrix a(1, 1), b(1, 1);
    a(0, 0) = qi;
    b(0, 0) = qj;
    CHECK((a * b)(0, 0) == qk);

    CHECK_THROWS_AS(random_qmatrix(rng, 2, 3) * random_qmatrix(rng, 2, 3),
                    DimensionMismatch);
}

TEST_CASE("dagger") {
    const QMatrix id = QMatrix::identity(3);
    CHECK(dagger(id) == id);

    std::mt19937_64 rng(47);
    const QMatrix m = random_qmatrix(rng, 3, 4);
    CHECK(dagger(dagger(m)) == m);

    // entrywise conjugate + transpose
    QMatrix x(2, 2);
    x(0, 0) = qi;
    x(0, 1) = Quaternion::zero();
    x(1, 0) = Quaternion(1, 0, 1, 0);
    x(1, 1) = qk;
    const QMatrix xd = dagger(x);
    CHECK(xd(0, 0) == -qi);
    CHECK(xd(0, 1) == Quaternion(1, 0, -1, 0));
    CHECK(xd(1, 0) == Quaternion::zero());
    CHECK(xd(1, 1) == -qk);

    // (M N)^dagger = N^dagger M^dagger
    for (int it = 0; it < 100; ++it) {
        const QMatrix p = random_qmatrix(rng, 3, 3);
        const QMatrix q = random_qmatrix(rng, 3, 3);
        const QMatrix lhs = dagger(p * q);
        const QMatrix rhs = dagger(q) * dagger(p);
        CHECK(frobenius_norm(lhs - rhs) <= 1e-12 * std::max(1.0, frobenius_norm(lhs)));
    }
}

TEST_CASE("adjoint identity under the row convention") {
    std::mt19937_64 rng(53);
    for (int it = 0; it < 500; ++it) {
        const QMatrix m = random_qmatrix(rng, 4, 4);
        const QVector f = random_qvector(rng, 4);
        const QVector g = random_qvector(rng, 4);
        const Quaternion lhs = inner(f * m, g);
        const Quaternion rhs = inner(f, g * dagger(m));
        CHECK(approx_equal(lhs, rhs, 1e-10, 1e-10));
    }
}

TEST_CASE("real embedding") {
    SUBCASE("identity and unit blocks") {
        CHECK(embed_real(QMatrix::identity(1)) == RealMatrix::identity(4));
        QMatrix m(1, 1);
        m(0, 0) = qi;
        const RealMatrix e = embed_real(m);
        CHECK(e(0, 1) == -1.0);
        CHECK(e(1, 0) == 1.0);
        CHECK(e(2, 3) == -1.0);
        CHECK(e(3, 2) == 1.0);
        CHECK(e(0, 0) == 0.0);
    }
    SUBCASE("multiplicative homomorphism") {
        std::mt19937_64 rng(59);
        for (int it = 0; it < 200; ++it) {
            const QMatrix m = random_qmatrix(rng, 2, 3);
            const QMatrix n = random_qmatrix(rng, 3, 2);
            const RealMatrix lhs = embed_real(m * n);
            const RealMatrix rhs = embed_real(m) * embed_real(n);
            CHECK(frobenius_diff(lhs, rhs) <= 1e-11 * std::max(1.0, frobenius_norm(lhs)));
        }
    }
    SUBCASE("dagger maps to transpose exactly") {
        std::mt19937_64 rng(61);
        for (int it = 0; it < 100; ++it) {
            const QMatrix m = random_qmatrix(rng, 3, 2);
            CHECK(embed_real(dagger(m)) == transpose(embed_real(m)));
        }
    }
    SUBCASE("hermitian matrices embed symmetrically") {
        std::mt19937_64 rng(67);
        const QMatrix r = random_qmatrix(rng, 3, 3);
        const QMatrix h = dagger(r) * r;
        const RealMatrix e = embed_real(h);
        CHECK(frobenius_diff(e, transpose(e)) <= 1e-12 * frobenius_norm(e));
    }
}

TEST_CASE("solve x M = b") {
    std::mt19937_64 rng(71);

    SUBCASE("identity") {
        const QVector b = random_qvector(rng, 3);
        const QVector x = solve(QMatrix::identity(3), b);
        CHECK(norm(x - b) <= 1e-14);
    }
    SUBCASE("diagonal") {
        QMatrix m(2, 2);
        m(0, 0) = Quaternion(2, 0, 0, 0);
        m(1, 1) = Quaternion::one();
        const QVector x = solve(m, QVector::unit(2, 0));
        CHECK(norm(x - 0.5 * QVector::unit(2, 0)) <= 1e-14);
    }
    SUBCASE("noncommutative 1x1") {
        QMatrix m(1, 1);
        m(0, 0) = qi;
        const QVector x = solve(m, QVector({qj}));
        // x i = j  =>  x = j i^{-1} = k
        CHECK(approx_equal(x[0], qk, 1e-14, 1e-14));
    }
    SUBCASE("random round trip") {
        for (int it = 0; it < 100; ++it) {
            const QMatrix m = random_qmatrix(rng, 4, 4);
            const QVector x0 = random_qvector(rng, 4);
            const QVector b = x0 * m;
            const QVector x = solve(m, b);
            CHECK(norm(x * m - b) <= 1e-9 * (1.0 + norm(b)));
            CHECK(norm(x - x0) <= 1e-8 * (1.0 + norm(x0)));
        }
    }
    SUBCASE("singular matrix") {
        QMatrix m(2, 2);
        m(0, 0) = Quaternion::one();
        m(0, 1) = qi;
        m(1, 0) = Quaternion::one();
        m(1, 1) = qi; // second row repeats the first
        CHECK_THROWS_AS(solve(m, QVector::unit(2, 0)), SingularMatrix);
    }
}

TEST_CASE("hermitian eigenvalues") {
    SUBCASE("identity") {
        const auto vals = hermitian_eigenvalues(QMatrix::identity(2));
        REQUIRE(vals.size() == 2);
        CHECK(vals[0] == doctest::Approx(1.0).epsilon(1e-14));
        CHECK(vals[1] == doctest::Approx(1.0).epsilon(1e-14));
    }
    SUBCASE("real diagonal") {
        QMatrix m(2, 2);
        m(0, 0) = Quaternion(2, 0, 0, 0);
        m(1, 1) = Quaternion::one();
        const auto vals = hermitian_eigenvalues(m);
        REQUIRE(vals.size() == 2);
        CHECK(vals[0] == doctest::Approx(1.0).epsilon(1e-14));
        CHECK(vals[1] == doctest::Approx(2.0).epsilon(1e-14));
    }
    SUBCASE("rejects non-hermitian input") {
        QMatrix m(2, 2);
        m(0, 1) = qi;
        CHECK_THROWS_AS(hermitian_eigenvalues(m), NotHermitian);
    }
    SUBCASE("rayleigh quotients are bracketed") {
        std::mt19937_64 rng(73);
        for (int it = 0; it < 20; ++it) {
            const QMatrix r = random_qmatrix(rng, 4, 4);
            const QMatrix h = dagger(r) * r;
            const auto vals = hermitian_eigenvalues(h);
            for (int s = 0; s < 50; ++s) {
                const QVector f = random_qvector(rng, 4);
                const double nf2 = norm(f) * norm(f);
                if (nf2 < 1e-6) continue;
                const double rayleigh = inner(f * h, f).w / nf2;
                CHECK(rayleigh >= vals.front() - 1e-9 * std::max(1.0, vals.back()));
                CHECK(rayleigh <= vals.back() + 1e-9 * std::max(1.0, vals.back()));
            }
        }
    }
    SUBCASE("embedded eigenvectors attain their eigenvalues") {
        std::mt19937_64 rng(79);
        const QMatrix r = random_qmatrix(rng, 3, 3);
        const QMatrix h = dagger(r) * r;
        const auto eig = jacobi_eigensystem(embed_real(h));
        for (std::size_t idx : {std::size_t{0}, std::size_t{11}}) {
            std::vector<double> u(12);
            for (std::size_t i = 0; i < 12; ++i) u[i] = eig.vectors(i, idx);
            const QVector f = qvector_from_embedded_column(u);
            const double rayleigh = inner(f * h, f).w / (norm(f) * norm(f));
            CHECK(rayleigh == doctest::Approx(eig.values[idx]).epsilon(1e-10));
        }
    }
}
