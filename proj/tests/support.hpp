#pragma once

// Shared test helpers: seeded random inputs with bounded conditioning and
// the independent null-space grid oracle for the minimum sum |d_k| search.

#include <cmath>
#include <random>
#include <vector>

#include "qframe/coefficients.hpp"
#include "qframe/frame.hpp"
#include "qframe/qvector.hpp"

namespace testsupport {

using qframe::CoefficientVector;
using qframe::Frame;
using qframe::Quaternion;
using qframe::QVector;

inline Quaternion random_quaternion(std::mt19937_64& rng) {
    std::uniform_real_distribution<double> u(-1.0, 1.0);
    return {u(rng), u(rng), u(rng), u(rng)};
}

/// Modulus bounded away from zero, for identities that divide by |q|.
inline Quaternion random_unit_scale_quaternion(std::mt19937_64& rng) {
    for (;;) {
        const Quaternion q = random_quaternion(rng);
        if (qframe::norm(q) > 1e-2) return q;
    }
}

inline QVector random_qvector(std::mt19937_64& rng, std::size_t n) {
    std::vector<Quaternion> entries(n);
    for (auto& q : entries) q = random_quaternion(rng);
    return QVector(std::move(entries));
}

inline CoefficientVector random_coefficients(std::mt19937_64& rng, std::size_t m) {
    std::vector<Quaternion> entries(m);
    for (auto& q : entries) q = random_quaternion(rng);
    return CoefficientVector(std::move(entries));
}

/// Random m-vector family in H^n whose frame operator has spectral ratio
/// at least min_ratio, so tolerance-level assertions are meaningful.
inline Frame random_frame(std::mt19937_64& rng, std::size_t n, std::size_t m,
                          double min_ratio = 1e-4) {
    for (;;) {
        std::vector<QVector> vectors;
        vectors.reserve(m);
        for (std::size_t k = 0; k < m; ++k) vectors.push_back(random_qvector(rng, n));
        Frame frame(n, std::move(vectors));
        if (frame.spectrum().front() > min_ratio * frame.spectrum().back()) {
            return frame;
        }
    }
}

/// Nonzero coefficient vector in the null space of the synthesis map.
inline CoefficientVector random_null_vector(std::mt19937_64& rng, const Frame& frame) {
    for (;;) {
        const CoefficientVector h =
            qframe::synthesis_nullspace_project(frame, random_coefficients(rng, frame.size()));
        double total = 0.0;
        for (std::size_t k = 0; k < h.size(); ++k) total += qframe::norm_sq(h[k]);
        if (std::sqrt(total) > 1e-6) return h;
    }
}

/// Orthonormal direction spanning the null space of synthesis for a frame
/// with m = n + 1, found by completing the analysis range to a basis of
/// H^m. Verifies nothing; callers assert synthesis(h) ~ 0.
inline CoefficientVector nullspace_direction(const Frame& frame) {
    const std::size_t m = frame.size();
    const std::size_t n = frame.dim();
    // rows of dagger(F) seen as vectors in H^m left-span the analysis range
    const qframe::QMatrix fd = qframe::dagger(frame.frame_matrix());
    std::vector<QVector> gens;
    gens.reserve(n + m);
    for (std::size_t j = 0; j < n; ++j) gens.push_back(fd.row(j));
    for (std::size_t k = 0; k < m; ++k) gens.push_back(QVector::unit(m, k));
    const std::vector<QVector> onb = qframe::gram_schmidt(gens);
    // the extension beyond the range rank is the orthogonal complement
    return CoefficientVector(onb.back().entries());
}

/**
 * Exhaustive oracle for the minimum of
 *   phi(t) = sum_k |canonical_k + t h_k|,   t in H,
 * over the one-null-direction representation family: multiresolution
 * search over the 4 real coordinates of t, starting on the cube of radius
 * 2 * sum |canonical_k| and shrinking the step until below 1e-6 of the
 * radius. phi is convex, so recentering on the grid minimum converges to
 * the global minimum value.
 */
inline double l1_oracle_objective(const Frame& frame, const QVector& signal,
                                  const CoefficientVector& null_direction) {
    const CoefficientVector canonical = qframe::canonical_coefficients(frame, signal);
    const std::size_t m = canonical.size();

    auto phi = [&](const Quaternion& t) {
        double acc = 0.0;
        for (std::size_t k = 0; k < m; ++k) {
            acc += qframe::norm(canonical[k] + t * null_direction[k]);
        }
        return acc;
    };

    const double radius = 2.0 * qframe::lp_norm(canonical, 1.0);
    Quaternion center = Quaternion::zero();
    double best = phi(center);
    double step = radius / 4.0;
    while (step > 1e-6 * (radius > 0.0 ? radius : 1.0)) {
        Quaternion best_point = center;
        for (int dw = -4; dw <= 4; ++dw)
            for (int dx = -4; dx <= 4; ++dx)
                for (int dy = -4; dy <= 4; ++dy)
                    for (int dz = -4; dz <= 4; ++dz) {
                        const Quaternion t = center + Quaternion(dw * step, dx * step,
                                                                 dy * step, dz * step);
                        const double value = phi(t);
                        if (value < best) {
                            best = value;
                            best_point = t;
                        }
                    }
        center = best_point;
        step *= 0.5;
    }
    return best;
}

} // namespace testsupport
