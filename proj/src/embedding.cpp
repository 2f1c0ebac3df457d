#include "qframe/embedding.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <string>

#include "qframe/errors.hpp"

namespace qframe {

RealMatrix RealMatrix::identity(std::size_t n) {
    RealMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = 1.0;
    return m;
}

RealMatrix operator*(const RealMatrix& a, const RealMatrix& b) {
    if (a.cols() != b.rows()) {
        throw DimensionMismatch("real matrix product: inner dimensions disagree");
    }
    RealMatrix r(a.rows(), b.cols());
    for (std::size_t i = 0; i < a.rows(); ++i) {
        for (std::size_t k = 0; k < a.cols(); ++k) {
            const double aik = a(i, k);
            if (aik == 0.0) continue;
            for (std::size_t j = 0; j < b.cols(); ++j) {
                r(i, j) += aik * b(k, j);
            }
        }
    }
    return r;
}

RealMatrix transpose(const RealMatrix& m) {
    RealMatrix r(m.cols(), m.rows());
    for (std::size_t i = 0; i < m.rows(); ++i)
        for (std::size_t j = 0; j < m.cols(); ++j) r(j, i) = m(i, j);
    return r;
}

std::vector<double> operator*(const RealMatrix& m, const std::vector<double>& v) {
    if (m.cols() != v.size()) {
        throw DimensionMismatch("real matrix-vector product: size mismatch");
    }
    std::vector<double> r(m.rows(), 0.0);
    for (std::size_t i = 0; i < m.rows(); ++i) {
        double acc = 0.0;
        for (std::size_t j = 0; j < m.cols(); ++j) acc += m(i, j) * v[j];
        r[i] = acc;
    }
    return r;
}

double frobenius_norm(const RealMatrix& m) {
    double acc = 0.0;
    for (std::size_t i = 0; i < m.rows(); ++i)
        for (std::size_t j = 0; j < m.cols(); ++j) acc += m(i, j) * m(i, j);
    return std::sqrt(acc);
}

RealMatrix embed_real(const QMatrix& m) {
    RealMatrix r(4 * m.rows(), 4 * m.cols());
    for (std::size_t i = 0; i < m.rows(); ++i) {
        for (std::size_t j = 0; j < m.cols(); ++j) {
            const Quaternion& q = m(i, j);
            const std::size_t r0 = 4 * i, c0 = 4 * j;
            r(r0 + 0, c0 + 0) = q.w; r(r0 + 0, c0 + 1) = -q.x; r(r0 + 0, c0 + 2) = -q.y; r(r0 + 0, c0 + 3) = -q.z;
            r(r0 + 1, c0 + 0) = q.x; r(r0 + 1, c0 + 1) =  q.w; r(r0 + 1, c0 + 2) = -q.z; r(r0 + 1, c0 + 3) =  q.y;
            r(r0 + 2, c0 + 0) = q.y; r(r0 + 2, c0 + 1) =  q.z; r(r0 + 2, c0 + 2) =  q.w; r(r0 + 2, c0 + 3) = -q.x;
            r(r0 + 3, c0 + 0) = q.z; r(r0 + 3, c0 + 1) = -q.y; r(r0 + 3, c0 + 2) =  q.x; r(r0 + 3, c0 + 3) =  q.w;
        }
    }
    return r;
}

std::vector<double> stack_coords(const std::vector<Quaternion>& qs) {
    std::vector<double> v(4 * qs.size());
    for (std::size_t i = 0; i < qs.size(); ++i) {
        v[4 * i + 0] = qs[i].w;
        v[4 * i + 1] = qs[i].x;
        v[4 * i + 2] = qs[i].y;
        v[4 * i + 3] = qs[i].z;
    }
    return v;
}

std::vector<Quaternion> unstack_coords(const std::vector<double>& v) {
    if (v.size() % 4 != 0) {
        throw DimensionMismatch("unstack_coords: length not a multiple of 4");
    }
    std::vector<Quaternion> qs(v.size() / 4);
    for (std::size_t i = 0; i < qs.size(); ++i) {
        qs[i] = Quaternion(v[4 * i], v[4 * i + 1], v[4 * i + 2], v[4 * i + 3]);
    }
    return qs;
}

bool LuFactorization::factor(const RealMatrix& m) {
    if (m.rows() != m.cols()) {
        throw DimensionMismatch("LU factorization requires a square matrix");
    }
    n_ = m.rows();
    lu_.assign(n_ * n_, 0.0);
    perm_.resize(n_);
    std::iota(perm_.begin(), perm_.end(), std::size_t{0});
    for (std::size_t i = 0; i < n_; ++i)
        for (std::size_t j = 0; j < n_; ++j) lu_[i * n_ + j] = m(i, j);

    double largest = 0.0;
    for (double v : lu_) largest = std::max(largest, std::abs(v));
    const double pivot_tol = 1e-12 * largest;

    for (std::size_t col = 0; col < n_; ++col) {
        std::size_t best = col;
        double best_abs = std::abs(lu_[col * n_ + col]);
        for (std::size_t r = col + 1; r < n_; ++r) {
            const double a = std::abs(lu_[r * n_ + col]);
            if (a > best_abs) { best = r; best_abs = a; }
        }
        if (best_abs <= pivot_tol) return false;
        if (best != col) {
            for (std::size_t j = 0; j < n_; ++j)
                std::swap(lu_[best * n_ + j], lu_[col * n_ + j]);
            std::swap(perm_[best], perm_[col]);
        }
        const double pivot = lu_[col * n_ + col];
        for (std::size_t r = col + 1; r < n_; ++r) {
            const double factor = lu_[r * n_ + col] / pivot;
            lu_[r * n_ + col] = factor;
            for (std::size_t j = col + 1; j < n_; ++j) {
                lu_[r * n_ + j] -= factor * lu_[col * n_ + j];
            }
        }
    }
    return true;
}

LuFactorization::LuFactorization(const RealMatrix& m) {
    if (!factor(m)) {
        throw SingularMatrix("pivot below 1e-12 of largest initial entry");
    }
}

std::optional<LuFactorization> LuFactorization::try_factor(const RealMatrix& m) {
    LuFactorization f;
    if (!f.factor(m)) return std::nullopt;
    return f;
}

std::vector<double> LuFactorization::solve(const std::vector<double>& rhs) const {
    if (rhs.size() != n_) {
        throw DimensionMismatch("LU solve: right-hand side length mismatch");
    }
    std::vector<double> x(n_);
    for (std::size_t i = 0; i < n_; ++i) x[i] = rhs[perm_[i]];
    for (std::size_t i = 1; i < n_; ++i) {
        double acc = x[i];
        for (std::size_t j = 0; j < i; ++j) acc -= lu_[i * n_ + j] * x[j];
        x[i] = acc;
    }
    for (std::size_t ii = n_; ii-- > 0;) {
        double acc = x[ii];
        for (std::size_t j = ii + 1; j < n_; ++j) acc -= lu_[ii * n_ + j] * x[j];
        x[ii] = acc / lu_[ii * n_ + ii];
    }
    return x;
}

QVector solve(const QMatrix& m, const QVector& b) {
    if (m.rows() != m.cols()) {
        throw DimensionMismatch("solve: matrix must be square");
    }
    if (b.size() != m.rows()) {
        throw DimensionMismatch("solve: right-hand side length != matrix size");
    }
    // x M = b  <=>  dagger(M) y = c with y = dagger(x), c = dagger(b);
    // the embedded image of a column stacks each entry's coordinates.
    const LuFactorization lu(embed_real(dagger(m)));
    std::vector<Quaternion> c(b.size());
    for (std::size_t i = 0; i < b.size(); ++i) c[i] = conj(b[i]);
    const std::vector<double> u = lu.solve(stack_coords(c));
    std::vector<Quaternion> y = unstack_coords(u);
    for (auto& q : y) q = conj(q);
    return QVector(std::move(y));
}

SymmetricEigenResult jacobi_eigensystem(const RealMatrix& sym, int max_sweeps,
                                        double rel_tol) {
    if (sym.rows() != sym.cols()) {
        throw DimensionMismatch("jacobi_eigensystem: matrix must be square");
    }
    const std::size_t n = sym.rows();
    RealMatrix a = sym;
    RealMatrix v = RealMatrix::identity(n);
    const double base = frobenius_norm(sym);

    auto off_diagonal = [&]() {
        double acc = 0.0;
        for (std::size_t p = 0; p + 1 < n; ++p)
            for (std::size_t q = p + 1; q < n; ++q) acc += a(p, q) * a(p, q);
        return std::sqrt(2.0 * acc);
    };

    bool converged = (base == 0.0) || off_diagonal() <= rel_tol * base;
    for (int sweep = 0; sweep < max_sweeps && !converged; ++sweep) {
        for (std::size_t p = 0; p + 1 < n; ++p) {
            for (std::size_t q = p + 1; q < n; ++q) {
                const double apq = a(p, q);
                if (std::abs(apq) <= 1e-300) continue;
                const double theta = (a(q, q) - a(p, p)) / (2.0 * apq);
                const double sgn = theta < 0.0 ? -1.0 : 1.0;
                const double t = sgn / (std::abs(theta) + std::sqrt(theta * theta + 1.0));
                const double c = 1.0 / std::sqrt(t * t + 1.0);
                const double s = t * c;
                const double tau = s / (1.0 + c);

                const double app = a(p, p), aqq = a(q, q);
                a(p, p) = app - t * apq;
                a(q, q) = aqq + t * apq;
                a(p, q) = 0.0;
                a(q, p) = 0.0;
                for (std::size_t r = 0; r < n; ++r) {
                    if (r != p && r != q) {
                        const double arp = a(r, p), arq = a(r, q);
                        a(r, p) = arp - s * (arq + tau * arp);
                        a(p, r) = a(r, p);
                        a(r, q) = arq + s * (arp - tau * arq);
                        a(q, r) = a(r, q);
                    }
                    const double vrp = v(r, p), vrq = v(r, q);
                    v(r, p) = vrp - s * (vrq + tau * vrp);
                    v(r, q) = vrq + s * (vrp - tau * vrq);
                }
            }
        }
        converged = off_diagonal() <= rel_tol * base;
    }
    if (!converged) {
        throw NoConvergence("jacobi_eigensystem: off-diagonal norm above tolerance after max sweeps");
    }

    std::vector<std::size_t> order(n);
    std::iota(order.begin(), order.end(), std::size_t{0});
    std::sort(order.begin(), order.end(),
              [&](std::size_t i, std::size_t j) { return a(i, i) < a(j, j); });

    SymmetricEigenResult result;
    result.values.resize(n);
    result.vectors = RealMatrix(n, n);
    for (std::size_t j = 0; j < n; ++j) {
        result.values[j] = a(order[j], order[j]);
        for (std::size_t i = 0; i < n; ++i) result.vectors(i, j) = v(i, order[j]);
    }
    return result;
}

std::vector<double> hermitian_eigenvalues(const QMatrix& m) {
    if (m.rows() != m.cols()) {
        throw DimensionMismatch("hermitian_eigenvalues: matrix must be square");
    }
    const QMatrix deviation = m - dagger(m);
    if (max_abs(deviation) > 1e-10 * std::max(1.0, max_abs(m))) {
        throw NotHermitian("hermitian_eigenvalues: dagger(M) != M beyond 1e-10");
    }
    const std::size_t n = m.rows();
    const SymmetricEigenResult eig = jacobi_eigensystem(embed_real(m));

    // each quaternionic eigenvalue shows up four times in the embedding
    std::vector<double> reps(n);
    for (std::size_t g = 0; g < n; ++g) {
        const double lo = eig.values[4 * g];
        const double hi = eig.values[4 * g + 3];
        double mean = 0.0;
        for (int k = 0; k < 4; ++k) mean += eig.values[4 * g + k];
        mean *= 0.25;
        if (hi - lo >= 1e-8 * (1.0 + std::abs(mean))) {
            throw MultiplicityViolation(
                "hermitian_eigenvalues: quadruplet spread " + std::to_string(hi - lo) +
                " exceeds bound near eigenvalue " + std::to_string(mean));
        }
        reps[g] = mean;
    }
    return reps;
}

QVector qvector_from_embedded_column(const std::vector<double>& u) {
    std::vector<Quaternion> qs = unstack_coords(u);
    for (auto& q : qs) q = conj(q);
    return QVector(std::move(qs));
}

} // namespace qframe
