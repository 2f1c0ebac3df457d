#pragma once

#include <cstddef>
#include <vector>

#include "qframe/quaternion.hpp"

namespace qframe {

/**
 * @brief Element of the left quaternion module H^n.
 *
 * Vectors are rows; left-linear operators act by right matrix
 * multiplication, so left scalar multiplication commutes with every
 * operator application. The inner product is
 *   <f|g> = sum_k f_k conj(g_k),
 * left-linear in the first slot and conjugate-right-scaled in the second.
 */
class QVector {
public:
    QVector() = default;
    explicit QVector(std::vector<Quaternion> entries);
    explicit QVector(std::size_t n) : entries_(n) {}

    /// k-th standard basis vector of H^n.
    static QVector unit(std::size_t n, std::size_t k);

    std::size_t size() const { return entries_.size(); }
    const Quaternion& operator[](std::size_t i) const { return entries_[i]; }
    Quaternion& operator[](std::size_t i) { return entries_[i]; }
    const std::vector<Quaternion>& entries() const { return entries_; }

    bool operator==(const QVector&) const = default;

private:
    std::vector<Quaternion> entries_;
};

QVector operator+(const QVector& a, const QVector& b);
QVector operator-(const QVector& a, const QVector& b);

/// Left scalar action (q f)_k = q f_k.
QVector operator*(const Quaternion& q, const QVector& f);
QVector operator*(double s, const QVector& f);

/// <f|g> = sum_k f_k conj(g_k).
Quaternion inner(const QVector& f, const QVector& g);

/// sqrt(Re<f|f>).
double norm(const QVector& f);

/**
 * @brief Orthonormalizes a list of vectors over H (modified Gram-Schmidt,
 * two passes per vector).
 *
 * Projection coefficients multiply from the left: v -= <v|e_j> e_j.
 * Vectors whose residual norm falls at or below drop_tol_factor times the
 * largest input norm are treated as dependent and discarded, so the output
 * size is the rank of the input set over H.
 */
std::vector<QVector> gram_schmidt(const std::vector<QVector>& vs,
                                  double drop_tol_factor = 1e-10);

/**
 * @brief Coefficient sequence in H^m paired with an m-element frame.
 *
 * Distinct from QVector only in role: entries index frame elements, not
 * space coordinates.
 */
class CoefficientVector {
public:
    CoefficientVector() = default;
    explicit CoefficientVector(std::vector<Quaternion> entries);
    explicit CoefficientVector(std::size_t m) : entries_(m) {}

    std::size_t size() const { return entries_.size(); }
    const Quaternion& operator[](std::size_t i) const { return entries_[i]; }
    Quaternion& operator[](std::size_t i) { return entries_[i]; }
    const std::vector<Quaternion>& entries() const { return entries_; }

    bool operator==(const CoefficientVector&) const = default;

private:
    std::vector<Quaternion> entries_;
};

CoefficientVector operator+(const CoefficientVector& a, const CoefficientVector& b);
CoefficientVector operator-(const CoefficientVector& a, const CoefficientVector& b);

/// Pairing sum_k a_k conj(b_k) in H^m (same form as the vector inner product).
Quaternion inner(const CoefficientVector& a, const CoefficientVector& b);

} // namespace qframe
