#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "qframe/qmatrix.hpp"
#include "qframe/qvector.hpp"

namespace qframe {

/// Dense row-major real matrix used for the embedded computations.
class RealMatrix {
public:
    RealMatrix() = default;
    RealMatrix(std::size_t rows, std::size_t cols)
        : rows_(rows), cols_(cols), a_(rows * cols, 0.0) {}

    static RealMatrix identity(std::size_t n);

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }

    double operator()(std::size_t r, std::size_t c) const { return a_[r * cols_ + c]; }
    double& operator()(std::size_t r, std::size_t c) { return a_[r * cols_ + c]; }

    bool operator==(const RealMatrix&) const = default;

private:
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<double> a_;
};

RealMatrix operator*(const RealMatrix& a, const RealMatrix& b);
RealMatrix transpose(const RealMatrix& m);
std::vector<double> operator*(const RealMatrix& m, const std::vector<double>& v);
double frobenius_norm(const RealMatrix& m);

/**
 * @brief Real 4m x 4n image of a quaternion matrix.
 *
 * Each entry q = w + xi + yj + zk becomes the 4x4 block
 *   [[w,-x,-y,-z], [x,w,-z,y], [y,z,w,-x], [z,-y,x,w]]
 * (the left-multiplication representation in the basis 1,i,j,k). The map
 * is multiplicative, embed(M N) = embed(M) embed(N), and sends dagger to
 * transpose, so Hermitian matrices land on symmetric ones with every
 * eigenvalue repeated four times.
 */
RealMatrix embed_real(const QMatrix& m);

/// Stacked (w,x,y,z) coordinates of each entry; equals the first column of
/// the embedded image of the column vector.
std::vector<double> stack_coords(const std::vector<Quaternion>& qs);
std::vector<Quaternion> unstack_coords(const std::vector<double>& v);

/// LU factorization with partial pivoting of a square real matrix.
/// Factoring throws SingularMatrix when a pivot falls below
/// 1e-12 times the largest initial entry magnitude.
class LuFactorization {
public:
    explicit LuFactorization(const RealMatrix& m);

    /// Attempts the factorization, empty on a singular matrix.
    static std::optional<LuFactorization> try_factor(const RealMatrix& m);

    std::vector<double> solve(const std::vector<double>& rhs) const;
    std::size_t size() const { return n_; }

private:
    LuFactorization() = default;
    bool factor(const RealMatrix& m);

    std::size_t n_ = 0;
    std::vector<double> lu_;
    std::vector<std::size_t> perm_;
};

/**
 * @brief Solves x M = b for a row vector x (the row-vector realization of
 * applying the inverse operator).
 *
 * Passes to columns via dagger and solves the embedded 4n x 4n real system
 * with partial-pivot elimination.
 */
QVector solve(const QMatrix& m, const QVector& b);

/// Eigenvalues (ascending) and orthonormal eigenvector columns of a
/// symmetric real matrix, by cyclic Jacobi sweeps.
struct SymmetricEigenResult {
    std::vector<double> values;
    RealMatrix vectors;
};

SymmetricEigenResult jacobi_eigensystem(const RealMatrix& sym,
                                        int max_sweeps = 100,
                                        double rel_tol = 1e-12);

/**
 * @brief Eigenvalues of a Hermitian quaternion matrix via the real
 * embedding.
 *
 * The 4n real eigenvalues group into n quadruplets; returns the n
 * quadruplet means, ascending. Throws NotHermitian, NoConvergence, or
 * MultiplicityViolation when the greedy grouping exceeds the spread bound
 * 1e-8 * (1 + |lambda|).
 */
std::vector<double> hermitian_eigenvalues(const QMatrix& m);

/// Maps a real eigenvector of embed_real(M) back to a quaternion row
/// vector with the same Rayleigh quotient Re<f M|f> / |f|^2.
QVector qvector_from_embedded_column(const std::vector<double>& u);

} // namespace qframe
