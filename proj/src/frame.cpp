#include "qframe/frame.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "qframe/errors.hpp"

namespace qframe {

namespace {

constexpr double kRankTolerance = 1e-10;

void check_coefficient_length(const Frame& frame, const CoefficientVector& c) {
    if (c.size() != frame.size()) {
        throw DimensionMismatch("coefficient vector length " + std::to_string(c.size()) +
                                " does not match frame size " + std::to_string(frame.size()));
    }
}

void check_signal_length(const Frame& frame, const QVector& f) {
    if (f.size() != frame.dim()) {
        throw DimensionMismatch("signal length " + std::to_string(f.size()) +
                                " does not match frame dimension " + std::to_string(frame.dim()));
    }
}

void require_frame(const Frame& frame) {
    if (!frame.spectral_is_frame()) {
        throw NotAFrame("family does not span H^" + std::to_string(frame.dim()));
    }
}

} // namespace

Frame::Frame(std::size_t dim, std::vector<QVector> vectors)
    : dim_(dim), vectors_(std::move(vectors)) {
    if (dim_ == 0) throw ValidationError("Frame: dimension must be positive");
    if (vectors_.empty()) throw ValidationError("Frame: needs at least one vector");
    bool any_nonzero = false;
    for (const auto& v : vectors_) {
        if (v.size() != dim_) {
            throw ValidationError("Frame: vector length " + std::to_string(v.size()) +
                                  " does not match dimension " + std::to_string(dim_));
        }
        if (norm(v) > 0.0) any_nonzero = true;
    }
    if (!any_nonzero) throw ValidationError("Frame: all vectors are zero");

    frame_matrix_ = QMatrix::from_rows(vectors_);
    s_matrix_ = dagger(frame_matrix_) * frame_matrix_;
    spectrum_ = hermitian_eigenvalues(s_matrix_);
    s_lu_ = LuFactorization::try_factor(embed_real(s_matrix_));
}

bool Frame::spectral_is_frame() const {
    return spectrum_.front() > kRankTolerance * spectrum_.back();
}

const LuFactorization& Frame::embedded_operator_lu() const {
    if (!s_lu_) throw SingularMatrix("frame operator is not invertible");
    return *s_lu_;
}

QVector Frame::apply_inverse_operator(const QVector& rhs) const {
    check_signal_length(*this, rhs);
    // y S = rhs passes to the embedded columns; S is Hermitian so the
    // embedded image of dagger(S) is the cached one.
    std::vector<Quaternion> c(rhs.size());
    for (std::size_t i = 0; i < rhs.size(); ++i) c[i] = conj(rhs[i]);
    std::vector<Quaternion> y = unstack_coords(embedded_operator_lu().solve(stack_coords(c)));
    for (auto& q : y) q = conj(q);
    return QVector(std::move(y));
}

QVector synthesis(const Frame& frame, const CoefficientVector& c) {
    check_coefficient_length(frame, c);
    QVector acc(frame.dim());
    for (std::size_t k = 0; k < frame.size(); ++k) {
        acc = acc + c[k] * frame.vector(k);
    }
    return acc;
}

CoefficientVector analysis(const Frame& frame, const QVector& f) {
    check_signal_length(frame, f);
    CoefficientVector c(frame.size());
    for (std::size_t k = 0; k < frame.size(); ++k) {
        c[k] = inner(f, frame.vector(k));
    }
    return c;
}

QMatrix frame_operator(const Frame& frame) { return frame.operator_matrix(); }

FrameBounds frame_bounds(const Frame& frame) {
    require_frame(frame);
    FrameBounds bounds;
    bounds.lower = frame.spectrum().front();
    bounds.upper = frame.spectrum().back();
    bounds.tight = (bounds.upper - bounds.lower) <= 1e-9 * bounds.upper;
    if (bounds.tight) {
        bounds.tight_constant = 0.5 * (bounds.lower + bounds.upper);
    }
    double sum = 0.0;
    for (const auto& v : frame.vectors()) sum += norm(v) * norm(v);
    bounds.schwartz_upper = sum;
    return bounds;
}

bool is_frame(const Frame& frame) {
    return gram_schmidt(frame.vectors()).size() == frame.dim();
}

DualFrame canonical_dual(const Frame& frame) {
    require_frame(frame);
    DualFrame dual;
    dual.vectors.reserve(frame.size());
    for (std::size_t k = 0; k < frame.size(); ++k) {
        dual.vectors.push_back(frame.apply_inverse_operator(frame.vector(k)));
    }
    return dual;
}

std::pair<CoefficientVector, QVector> frame_decomposition(const Frame& frame,
                                                          const QVector& f) {
    check_signal_length(frame, f);
    const DualFrame dual = canonical_dual(frame);
    CoefficientVector coeffs(frame.size());
    for (std::size_t k = 0; k < frame.size(); ++k) {
        coeffs[k] = inner(f, dual.vectors[k]);
    }
    return {coeffs, synthesis(frame, coeffs)};
}

std::optional<double> is_tight(const Frame& frame) {
    const double lo = frame.spectrum().front();
    const double hi = frame.spectrum().back();
    if (hi - lo > 1e-9 * hi) return std::nullopt;
    const double a = 0.5 * (lo + hi);
    const QMatrix deviation = frame.operator_matrix() - a * QMatrix::identity(frame.dim());
    if (frobenius_norm(deviation) > 1e-8 * a * std::sqrt(double(frame.dim()))) {
        return std::nullopt;
    }
    return a;
}

QMatrix biorthogonal_check(const Frame& frame) {
    if (frame.size() != frame.dim()) {
        throw NotABasis("family of " + std::to_string(frame.size()) +
                        " vectors in H^" + std::to_string(frame.dim()) + " is not a basis");
    }
    if (!frame.spectral_is_frame()) {
        throw NotABasis("family is rank deficient");
    }
    const DualFrame dual = canonical_dual(frame);
    QMatrix pairing(frame.size(), frame.size());
    for (std::size_t j = 0; j < frame.size(); ++j) {
        for (std::size_t k = 0; k < frame.size(); ++k) {
            pairing(j, k) = inner(frame.vector(j), dual.vectors[k]);
        }
    }
    return pairing;
}

QVector project_onto_span(const std::vector<QVector>& vs, const QVector& f) {
    const std::vector<QVector> onb = gram_schmidt(vs);
    if (onb.empty()) throw EmptySpan("projection target span is empty");
    const std::size_t d = onb.size();
    for (const auto& v : vs) {
        if (v.size() != f.size()) {
            throw DimensionMismatch("projection: vector and signal dimensions differ");
        }
    }

    // rewrite the family in W coordinates; it is a frame for W there
    std::vector<QVector> coords;
    coords.reserve(vs.size());
    for (const auto& v : vs) {
        QVector w(d);
        for (std::size_t j = 0; j < d; ++j) w[j] = inner(v, onb[j]);
        coords.push_back(w);
    }
    const Frame inner_frame(d, coords);

    // c_k = <f | S_W^{-1} f_k>, taken in the ambient space after mapping
    // each dual vector back through the orthonormal basis
    const DualFrame dual = canonical_dual(inner_frame);
    QVector projection(f.size());
    for (std::size_t k = 0; k < vs.size(); ++k) {
        QVector dual_ambient(f.size());
        for (std::size_t j = 0; j < d; ++j) {
            dual_ambient = dual_ambient + dual.vectors[k][j] * onb[j];
        }
        projection = projection + inner(f, dual_ambient) * vs[k];
    }
    return projection;
}

CoefficientVector synthesis_nullspace_project(const Frame& frame,
                                              const CoefficientVector& c) {
    check_coefficient_length(frame, c);
    require_frame(frame);
    // null(c -> c F) maps to null(embed(dagger(F))) on stacked conjugate
    // coordinates; project there and map back
    const RealMatrix a = embed_real(dagger(frame.frame_matrix()));
    std::vector<Quaternion> y(c.size());
    for (std::size_t k = 0; k < c.size(); ++k) y[k] = conj(c[k]);
    const std::vector<double> u = stack_coords(y);

    const std::vector<double> au = a * u;
    const std::vector<double> w = frame.embedded_operator_lu().solve(au);
    std::vector<double> correction = transpose(a) * w;
    std::vector<double> h(u.size());
    for (std::size_t i = 0; i < u.size(); ++i) h[i] = u[i] - correction[i];

    std::vector<Quaternion> out = unstack_coords(h);
    for (auto& q : out) q = conj(q);
    return CoefficientVector(std::move(out));
}

} // namespace qframe
