#pragma once

#include <cstddef>
#include <tuple>

#include "qframe/frame.hpp"
#include "qframe/qvector.hpp"

namespace qframe {

/// (sum_k |c_k|^p)^(1/p) with the quaternion modulus. Throws InvalidP for p < 1.
double lp_norm(const CoefficientVector& c, double p);

/// Frame coefficients {<f|S^{-1} f_k>}: the representation of f with
/// minimal l2 norm.
CoefficientVector canonical_coefficients(const Frame& frame, const QVector& f);

/**
 * @brief Splits the energy of a representation c of f as
 *
 *   sum |c_k|^2 = sum |<f|S^{-1}f_k>|^2 + sum |c_k - <f|S^{-1}f_k>|^2,
 *
 * returned in that order. Throws NotARepresentation when synthesis(c)
 * misses f by more than 1e-8 * (1 + |f|).
 */
std::tuple<double, double, double> pythagoras_split(const Frame& frame,
                                                    const QVector& f,
                                                    const CoefficientVector& c);

struct SolverParams {
    double rho = 1.0;         ///< splitting step, fixed (no adaptation)
    int max_iter = 5000;
    double feas_tol = 1e-8;
    double stall_tol = 1e-10;
};

struct L1SolveReport {
    CoefficientVector coefficients;
    double objective = 0.0;      ///< sum of |d_k| at the returned iterate
    int iterations = 0;
    double primal_residual = 0.0;
    double dual_residual = 0.0;
    bool converged = false;
};

/**
 * @brief Minimizes sum_k |d_k| subject to synthesis(d) = f.
 *
 * Works over the real embedding, where the quaternion modulus is the
 * Euclidean norm of a 4-component block: an alternating-direction
 * splitting whose proximal step is blockwise soft-thresholding and whose
 * other step projects onto the affine feasible set through a precomputed
 * factorization of the embedded frame operator. Iterates start from the
 * canonical coefficients (always feasible), and the best feasible iterate
 * seen is returned, so the objective never exceeds the canonical one.
 *
 * Throws NotAFrame. Non-convergence at max_iter is reported through
 * converged = false, not an exception. Iterates whose objective exceeds
 * ten times the canonical objective stop the loop as divergence.
 */
L1SolveReport min_l1_coefficients(const Frame& frame, const QVector& f,
                                  const SolverParams& params = {});

} // namespace qframe
