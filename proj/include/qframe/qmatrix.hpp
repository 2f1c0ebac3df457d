#pragma once

#include <cstddef>
#include <vector>

#include "qframe/quaternion.hpp"
#include "qframe/qvector.hpp"

namespace qframe {

/// Dense row-major quaternion matrix. Entry products in matrix
/// multiplication run left factor first, so the noncommutative order is
/// fixed by the storage convention.
class QMatrix {
public:
    QMatrix() = default;
    QMatrix(std::size_t rows, std::size_t cols);
    QMatrix(std::size_t rows, std::size_t cols, std::vector<Quaternion> entries);

    static QMatrix identity(std::size_t n);
    /// Stacks vectors as rows (all must share one length).
    static QMatrix from_rows(const std::vector<QVector>& rows);

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }

    const Quaternion& operator()(std::size_t r, std::size_t c) const {
        return a_[r * cols_ + c];
    }
    Quaternion& operator()(std::size_t r, std::size_t c) {
        return a_[r * cols_ + c];
    }

    QVector row(std::size_t r) const;

    bool operator==(const QMatrix&) const = default;

private:
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<Quaternion> a_;
};

QMatrix operator+(const QMatrix& a, const QMatrix& b);
QMatrix operator-(const QMatrix& a, const QMatrix& b);
QMatrix operator*(const QMatrix& a, const QMatrix& b);
QMatrix operator*(double s, const QMatrix& m);

/// Row vector times matrix: the action of a left-linear operator on f.
QVector operator*(const QVector& f, const QMatrix& m);

/// Conjugate transpose. The matrix of an operator's adjoint under the
/// row-vector convention: <f M | g> = <f | g dagger(M)>.
QMatrix dagger(const QMatrix& m);

/// Largest entry modulus.
double max_abs(const QMatrix& m);

/// sqrt of the sum of squared entry moduli.
double frobenius_norm(const QMatrix& m);

} // namespace qframe
