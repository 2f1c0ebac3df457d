#include "qframe/qmatrix.hpp"

#include <algorithm>
#include <string>

#include "qframe/errors.hpp"

namespace qframe {

namespace {

void require(bool cond, const char* msg) {
    if (!cond) throw DimensionMismatch(msg);
}

} // namespace

QMatrix::QMatrix(std::size_t rows, std::size_t cols)
    : rows_(rows), cols_(cols), a_(rows * cols) {}

QMatrix::QMatrix(std::size_t rows, std::size_t cols, std::vector<Quaternion> entries)
    : rows_(rows), cols_(cols), a_(std::move(entries)) {
    if (a_.size() != rows * cols) {
        throw DimensionMismatch("QMatrix: entry count does not match shape");
    }
    for (const auto& q : a_) {
        if (!is_finite(q)) throw ValidationError("QMatrix: non-finite entry");
    }
}

QMatrix QMatrix::identity(std::size_t n) {
    QMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = Quaternion::one();
    return m;
}

QMatrix QMatrix::from_rows(const std::vector<QVector>& rows) {
    require(!rows.empty(), "from_rows: empty row list");
    const std::size_t cols = rows.front().size();
    QMatrix m(rows.size(), cols);
    for (std::size_t r = 0; r < rows.size(); ++r) {
        require(rows[r].size() == cols, "from_rows: ragged rows");
        for (std::size_t c = 0; c < cols; ++c) m(r, c) = rows[r][c];
    }
    return m;
}

QVector QMatrix::row(std::size_t r) const {
    QVector v(cols_);
    for (std::size_t c = 0; c < cols_; ++c) v[c] = (*this)(r, c);
    return v;
}

QMatrix operator+(const QMatrix& a, const QMatrix& b) {
    require(a.rows() == b.rows() && a.cols() == b.cols(), "matrix add: shape mismatch");
    QMatrix r(a.rows(), a.cols());
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t j = 0; j < a.cols(); ++j) r(i, j) = a(i, j) + b(i, j);
    return r;
}

QMatrix operator-(const QMatrix& a, const QMatrix& b) {
    require(a.rows() == b.rows() && a.cols() == b.cols(), "matrix subtract: shape mismatch");
    QMatrix r(a.rows(), a.cols());
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t j = 0; j < a.cols(); ++j) r(i, j) = a(i, j) - b(i, j);
    return r;
}

QMatrix operator*(const QMatrix& a, const QMatrix& b) {
    require(a.cols() == b.rows(), "matrix product: inner dimensions disagree");
    QMatrix r(a.rows(), b.cols());
    for (std::size_t i = 0; i < a.rows(); ++i) {
        for (std::size_t k = 0; k < a.cols(); ++k) {
            const Quaternion& aik = a(i, k);
            for (std::size_t j = 0; j < b.cols(); ++j) {
                r(i, j) += aik * b(k, j);
            }
        }
    }
    return r;
}

QMatrix operator*(double s, const QMatrix& m) {
    QMatrix r(m.rows(), m.cols());
    for (std::size_t i = 0; i < m.rows(); ++i)
        for (std::size_t j = 0; j < m.cols(); ++j) r(i, j) = m(i, j) * s;
    return r;
}

QVector operator*(const QVector& f, const QMatrix& m) {
    require(f.size() == m.rows(), "row-vector product: length != rows");
    QVector r(m.cols());
    for (std::size_t i = 0; i < m.rows(); ++i) {
        const Quaternion& fi = f[i];
        for (std::size_t j = 0; j < m.cols(); ++j) {
            r[j] += fi * m(i, j);
        }
    }
    return r;
}

QMatrix dagger(const QMatrix& m) {
    QMatrix r(m.cols(), m.rows());
    for (std::size_t i = 0; i < m.rows(); ++i)
        for (std::size_t j = 0; j < m.cols(); ++j) r(j, i) = conj(m(i, j));
    return r;
}

double max_abs(const QMatrix& m) {
    double best = 0.0;
    for (std::size_t i = 0; i < m.rows(); ++i)
        for (std::size_t j = 0; j < m.cols(); ++j)
            best = std::max(best, norm(m(i, j)));
    return best;
}

double frobenius_norm(const QMatrix& m) {
    double acc = 0.0;
    for (std::size_t i = 0; i < m.rows(); ++i)
        for (std::size_t j = 0; j < m.cols(); ++j) acc += norm_sq(m(i, j));
    return std::sqrt(acc);
}

} // namespace qframe
