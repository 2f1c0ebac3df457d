#include "qframe/coefficients.hpp"

#include <algorithm>
#include <cmath>
#include <string>
#include <vector>

#include "qframe/embedding.hpp"
#include "qframe/errors.hpp"

namespace qframe {

double lp_norm(const CoefficientVector& c, double p) {
    if (!(p >= 1.0)) {
        throw InvalidP("lp_norm: p must be at least 1, got " + std::to_string(p));
    }
    double acc = 0.0;
    for (std::size_t k = 0; k < c.size(); ++k) {
        acc += std::pow(norm(c[k]), p);
    }
    return std::pow(acc, 1.0 / p);
}

CoefficientVector canonical_coefficients(const Frame& frame, const QVector& f) {
    return frame_decomposition(frame, f).first;
}

std::tuple<double, double, double> pythagoras_split(const Frame& frame,
                                                    const QVector& f,
                                                    const CoefficientVector& c) {
    const QVector resynthesized = synthesis(frame, c);
    if (norm(resynthesized - f) > 1e-8 * (1.0 + norm(f))) {
        throw NotARepresentation("coefficients do not synthesize the target signal");
    }
    const CoefficientVector canonical = canonical_coefficients(frame, f);
    double total = 0.0, canonical_part = 0.0, excess = 0.0;
    for (std::size_t k = 0; k < c.size(); ++k) {
        total += norm_sq(c[k]);
        canonical_part += norm_sq(canonical[k]);
        excess += norm_sq(c[k] - canonical[k]);
    }
    return {total, canonical_part, excess};
}

namespace {

double euclidean(const std::vector<double>& v) {
    double acc = 0.0;
    for (double x : v) acc += x * x;
    return std::sqrt(acc);
}

/// Objective over 4-component blocks: sum of block Euclidean norms.
double group_objective(const std::vector<double>& v) {
    double acc = 0.0;
    for (std::size_t b = 0; b < v.size(); b += 4) {
        acc += std::sqrt(v[b] * v[b] + v[b + 1] * v[b + 1] + v[b + 2] * v[b + 2] +
                         v[b + 3] * v[b + 3]);
    }
    return acc;
}

/// Blockwise shrink(v, t) = max(1 - t/|v|, 0) v.
void block_soft_threshold(std::vector<double>& v, double t) {
    for (std::size_t b = 0; b < v.size(); b += 4) {
        const double m = std::sqrt(v[b] * v[b] + v[b + 1] * v[b + 1] +
                                   v[b + 2] * v[b + 2] + v[b + 3] * v[b + 3]);
        const double scale = m > t ? 1.0 - t / m : 0.0;
        v[b] *= scale;
        v[b + 1] *= scale;
        v[b + 2] *= scale;
        v[b + 3] *= scale;
    }
}

CoefficientVector coefficients_from_stacked(const std::vector<double>& u) {
    std::vector<Quaternion> qs = unstack_coords(u);
    for (auto& q : qs) q = conj(q);
    return CoefficientVector(std::move(qs));
}

} // namespace

L1SolveReport min_l1_coefficients(const Frame& frame, const QVector& f,
                                  const SolverParams& params) {
    if (f.size() != frame.dim()) {
        throw DimensionMismatch("min_l1_coefficients: signal length != frame dimension");
    }
    if (!frame.spectral_is_frame()) {
        throw NotAFrame("min_l1_coefficients: family does not span the space");
    }
    if (!(params.rho > 0.0)) {
        throw ValidationError("min_l1_coefficients: rho must be positive");
    }

    // constraint in stacked conjugate coordinates: A u = v with
    // A = embed(dagger(F)) and A A^T the embedded frame operator
    const RealMatrix a = embed_real(dagger(frame.frame_matrix()));
    const RealMatrix at = transpose(a);
    const LuFactorization& s_lu = frame.embedded_operator_lu();

    std::vector<Quaternion> target(f.size());
    for (std::size_t i = 0; i < f.size(); ++i) target[i] = conj(f[i]);
    const std::vector<double> v = stack_coords(target);

    auto project_feasible = [&](const std::vector<double>& w) {
        std::vector<double> residual = a * w;
        for (std::size_t i = 0; i < residual.size(); ++i) residual[i] -= v[i];
        const std::vector<double> correction = at * s_lu.solve(residual);
        std::vector<double> out(w.size());
        for (std::size_t i = 0; i < w.size(); ++i) out[i] = w[i] - correction[i];
        return out;
    };

    const std::size_t dim = 4 * frame.size();
    // minimum-norm particular solution = canonical coefficients
    std::vector<double> d = project_feasible(std::vector<double>(dim, 0.0));
    const double canonical_objective = group_objective(d);

    std::vector<double> z = d;
    std::vector<double> dual(dim, 0.0);

    L1SolveReport report;
    report.coefficients = coefficients_from_stacked(d);
    report.objective = canonical_objective;

    double previous_objective = canonical_objective;
    std::vector<double> scratch(dim), z_prev(dim);
    for (int iter = 1; iter <= params.max_iter; ++iter) {
        for (std::size_t i = 0; i < dim; ++i) scratch[i] = z[i] - dual[i];
        d = project_feasible(scratch);

        z_prev = z;
        for (std::size_t i = 0; i < dim; ++i) z[i] = d[i] + dual[i];
        block_soft_threshold(z, 1.0 / params.rho);

        for (std::size_t i = 0; i < dim; ++i) dual[i] += d[i] - z[i];

        const double objective = group_objective(d);
        if (objective < report.objective) {
            report.objective = objective;
            report.coefficients = coefficients_from_stacked(d);
        }

        double primal = 0.0, dual_change = 0.0;
        for (std::size_t i = 0; i < dim; ++i) {
            primal += (d[i] - z[i]) * (d[i] - z[i]);
            dual_change += (z[i] - z_prev[i]) * (z[i] - z_prev[i]);
        }
        report.primal_residual = std::sqrt(primal);
        report.dual_residual = params.rho * std::sqrt(dual_change);
        report.iterations = iter;

        const double scale = 1.0 + std::max(euclidean(d), euclidean(z));
        const bool primal_ok = report.primal_residual <= params.feas_tol * scale;
        const bool dual_ok =
            report.dual_residual <= params.feas_tol * (1.0 + params.rho * euclidean(dual));
        const bool stalled =
            std::abs(objective - previous_objective) <= params.stall_tol * (1.0 + objective);
        previous_objective = objective;

        if (primal_ok && (dual_ok || stalled)) {
            report.converged = true;
            break;
        }
        if (objective > 10.0 * canonical_objective) {
            break; // divergence safeguard; best feasible iterate stands
        }
    }
    return report;
}

} // namespace qframe
