#include "qframe/qvector.hpp"

#include <algorithm>

#include "qframe/errors.hpp"

namespace qframe {

namespace {

void check_finite(const std::vector<Quaternion>& entries, const char* what) {
    for (const auto& q : entries) {
        if (!is_finite(q)) {
            throw ValidationError(std::string(what) + ": non-finite entry");
        }
    }
}

void check_same_size(std::size_t a, std::size_t b, const char* what) {
    if (a != b) {
        throw DimensionMismatch(std::string(what) + ": lengths " +
                                std::to_string(a) + " and " + std::to_string(b));
    }
}

} // namespace

QVector::QVector(std::vector<Quaternion> entries) : entries_(std::move(entries)) {
    check_finite(entries_, "QVector");
}

QVector QVector::unit(std::size_t n, std::size_t k) {
    QVector e(n);
    e[k] = Quaternion::one();
    return e;
}

QVector operator+(const QVector& a, const QVector& b) {
    check_same_size(a.size(), b.size(), "vector add");
    QVector r(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i] + b[i];
    return r;
}

QVector operator-(const QVector& a, const QVector& b) {
    check_same_size(a.size(), b.size(), "vector subtract");
    QVector r(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i] - b[i];
    return r;
}

QVector operator*(const Quaternion& q, const QVector& f) {
    QVector r(f.size());
    for (std::size_t i = 0; i < f.size(); ++i) r[i] = q * f[i];
    return r;
}

QVector operator*(double s, const QVector& f) {
    QVector r(f.size());
    for (std::size_t i = 0; i < f.size(); ++i) r[i] = f[i] * s;
    return r;
}

Quaternion inner(const QVector& f, const QVector& g) {
    check_same_size(f.size(), g.size(), "inner product");
    Quaternion acc;
    for (std::size_t i = 0; i < f.size(); ++i) acc += f[i] * conj(g[i]);
    return acc;
}

double norm(const QVector& f) {
    double acc = 0.0;
    for (std::size_t i = 0; i < f.size(); ++i) acc += norm_sq(f[i]);
    return std::sqrt(acc);
}

std::vector<QVector> gram_schmidt(const std::vector<QVector>& vs,
                                  double drop_tol_factor) {
    if (vs.empty()) return {};
    const std::size_t n = vs.front().size();
    double max_norm = 0.0;
    for (const auto& v : vs) {
        check_same_size(v.size(), n, "gram_schmidt");
        max_norm = std::max(max_norm, norm(v));
    }
    const double drop_tol = drop_tol_factor * max_norm;

    std::vector<QVector> basis;
    for (const auto& v : vs) {
        QVector r = v;
        // two orthogonalization passes keep the output orthonormal to
        // machine precision even for nearly dependent inputs
        for (int pass = 0; pass < 2; ++pass) {
            for (const auto& e : basis) {
                r = r - inner(r, e) * e;
            }
        }
        const double rn = norm(r);
        if (rn <= drop_tol) continue; // dependent on the vectors kept so far
        basis.push_back((1.0 / rn) * r);
    }
    return basis;
}

CoefficientVector::CoefficientVector(std::vector<Quaternion> entries)
    : entries_(std::move(entries)) {
    check_finite(entries_, "CoefficientVector");
}

CoefficientVector operator+(const CoefficientVector& a, const CoefficientVector& b) {
    check_same_size(a.size(), b.size(), "coefficient add");
    CoefficientVector r(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i] + b[i];
    return r;
}

CoefficientVector operator-(const CoefficientVector& a, const CoefficientVector& b) {
    check_same_size(a.size(), b.size(), "coefficient subtract");
    CoefficientVector r(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i] - b[i];
    return r;
}

Quaternion inner(const CoefficientVector& a, const CoefficientVector& b) {
    check_same_size(a.size(), b.size(), "coefficient pairing");
    Quaternion acc;
    for (std::size_t i = 0; i < a.size(); ++i) acc += a[i] * conj(b[i]);
    return acc;
}

} // namespace qframe
