#pragma once

#include <cstddef>
#include <optional>
#include <utility>
#include <vector>

#include "qframe/embedding.hpp"
#include "qframe/qmatrix.hpp"
#include "qframe/qvector.hpp"

namespace qframe {

/**
 * @brief Ordered family {f_k} of m vectors in H^n with its cached frame
 * operator.
 *
 * The frame operator S f = sum_k <f|f_k> f_k is realized as the Hermitian
 * n x n matrix dagger(F) F, F the m x n matrix whose rows are the family.
 * Construction eagerly caches the operator matrix, its spectrum, and an LU
 * factorization of the embedded operator; the object is immutable
 * afterwards, so every operation is pure and safe to call concurrently.
 *
 * Individual zero vectors are allowed; the all-zero family is rejected.
 */
class Frame {
public:
    Frame(std::size_t dim, std::vector<QVector> vectors);

    std::size_t dim() const { return dim_; }
    std::size_t size() const { return vectors_.size(); }
    const std::vector<QVector>& vectors() const { return vectors_; }
    const QVector& vector(std::size_t k) const { return vectors_[k]; }

    /// m x n matrix with the family as rows.
    const QMatrix& frame_matrix() const { return frame_matrix_; }
    /// Matrix of the frame operator, dagger(F) F.
    const QMatrix& operator_matrix() const { return s_matrix_; }
    /// Eigenvalues of the frame operator, ascending.
    const std::vector<double>& spectrum() const { return spectrum_; }

    /// Spectral frame test: smallest eigenvalue above 1e-10 of the largest.
    bool spectral_is_frame() const;

    /// Solves y S = rhs against the cached factorization (the action of
    /// the inverse frame operator). Throws SingularMatrix if unavailable.
    QVector apply_inverse_operator(const QVector& rhs) const;

    const LuFactorization& embedded_operator_lu() const;

private:
    std::size_t dim_ = 0;
    std::vector<QVector> vectors_;
    QMatrix frame_matrix_;
    QMatrix s_matrix_;
    std::vector<double> spectrum_;
    std::optional<LuFactorization> s_lu_;
};

/// Optimal frame bounds: the extreme eigenvalues of the frame operator.
struct FrameBounds {
    double lower = 0.0;          ///< A = smallest eigenvalue
    double upper = 0.0;          ///< B = largest eigenvalue
    bool tight = false;          ///< whether A and B coincide within 1e-9 of B
    std::optional<double> tight_constant;
    double schwartz_upper = 0.0; ///< sum of |f_k|^2, always an upper bound
};

/// Canonical dual family g_k = S^{-1} f_k.
struct DualFrame {
    std::vector<QVector> vectors;
};

/// Synthesis sum_k c_k f_k (left coefficients).
QVector synthesis(const Frame& frame, const CoefficientVector& c);

/// Analysis {<f|f_k>}_k, the adjoint of synthesis.
CoefficientVector analysis(const Frame& frame, const QVector& f);

/// Matrix of the frame operator (cached copy).
QMatrix frame_operator(const Frame& frame);

/// Optimal bounds from the cached spectrum. Throws NotAFrame when the
/// family does not span H^n.
FrameBounds frame_bounds(const Frame& frame);

/// Span test via Gram-Schmidt rank over H.
bool is_frame(const Frame& frame);

/// Canonical dual {S^{-1} f_k}. Throws NotAFrame.
DualFrame canonical_dual(const Frame& frame);

/// Frame coefficients {<f|S^{-1} f_k>} and the reconstruction
/// sum_k <f|S^{-1} f_k> f_k. Throws NotAFrame.
std::pair<CoefficientVector, QVector> frame_decomposition(const Frame& frame,
                                                          const QVector& f);

/// The tight constant A with S = A I, or empty when the frame is not tight.
std::optional<double> is_tight(const Frame& frame);

/// For a basis (m = n, full rank): the matrix <f_j|g_k> against the
/// canonical dual, which must be the identity. Throws NotABasis.
QMatrix biorthogonal_check(const Frame& frame);

/**
 * @brief Orthogonal projection of f onto the left span W of the given
 * vectors, computed through the frame operator of the family inside W.
 *
 * The span's orthonormal basis comes from Gram-Schmidt; the family is
 * rewritten in W coordinates, its frame operator inverted there, and
 *   P f = sum_k <f|S_W^{-1} f_k> f_k
 * assembled in the ambient space. Throws EmptySpan when every input is
 * numerically zero.
 */
QVector project_onto_span(const std::vector<QVector>& vs, const QVector& f);

/// Orthogonal projection of a coefficient vector onto the null space of
/// the synthesis map, via the real embedding.
CoefficientVector synthesis_nullspace_project(const Frame& frame,
                                              const CoefficientVector& c);

} // namespace qframe
