#pragma once

#include <cmath>
#include <ostream>

#include "qframe/errors.hpp"

namespace qframe {

/**
 * @brief Quaternion scalar q = w + x*i + y*j + z*k with double components.
 *
 * The imaginary units satisfy i^2 = j^2 = k^2 = -1 and ij = -ji = k,
 * jk = -kj = i, ki = -ik = j, so multiplication is associative but not
 * commutative. Component order is fixed as (w, x, y, z) = (1, i, j, k)
 * everywhere, including serialization.
 */
struct Quaternion {
    double w = 0.0; ///< real part
    double x = 0.0; ///< i component
    double y = 0.0; ///< j component
    double z = 0.0; ///< k component

    constexpr Quaternion() = default;
    constexpr Quaternion(double w_, double x_, double y_, double z_)
        : w(w_), x(x_), y(y_), z(z_) {}

    /// Real scalar embedded as w + 0i + 0j + 0k.
    static constexpr Quaternion real(double r) { return {r, 0.0, 0.0, 0.0}; }
    static constexpr Quaternion zero() { return {0.0, 0.0, 0.0, 0.0}; }
    static constexpr Quaternion one() { return {1.0, 0.0, 0.0, 0.0}; }
    static constexpr Quaternion i() { return {0.0, 1.0, 0.0, 0.0}; }
    static constexpr Quaternion j() { return {0.0, 0.0, 1.0, 0.0}; }
    static constexpr Quaternion k() { return {0.0, 0.0, 0.0, 1.0}; }

    constexpr bool operator==(const Quaternion&) const = default;

    constexpr Quaternion& operator+=(const Quaternion& r) {
        w += r.w; x += r.x; y += r.y; z += r.z;
        return *this;
    }
    constexpr Quaternion& operator-=(const Quaternion& r) {
        w -= r.w; x -= r.x; y -= r.y; z -= r.z;
        return *this;
    }
    constexpr Quaternion& operator*=(double s) {
        w *= s; x *= s; y *= s; z *= s;
        return *this;
    }
    constexpr Quaternion operator-() const { return {-w, -x, -y, -z}; }
};

constexpr Quaternion operator+(Quaternion a, const Quaternion& b) { return a += b; }
constexpr Quaternion operator-(Quaternion a, const Quaternion& b) { return a -= b; }
constexpr Quaternion operator*(Quaternion a, double s) { return a *= s; }
constexpr Quaternion operator*(double s, Quaternion a) { return a *= s; }

/// Hamilton product. Left-to-right order matters: ab != ba in general.
constexpr Quaternion operator*(const Quaternion& a, const Quaternion& b) {
    return {a.w * b.w - a.x * b.x - a.y * b.y - a.z * b.z,
            a.w * b.x + a.x * b.w + a.y * b.z - a.z * b.y,
            a.w * b.y - a.x * b.z + a.y * b.w + a.z * b.x,
            a.w * b.z + a.x * b.y - a.y * b.x + a.z * b.w};
}

/// Conjugate w - xi - yj - zk. Reverses products: conj(ab) = conj(b)conj(a).
constexpr Quaternion conj(const Quaternion& q) { return {q.w, -q.x, -q.y, -q.z}; }

constexpr double norm_sq(const Quaternion& q) {
    return q.w * q.w + q.x * q.x + q.y * q.y + q.z * q.z;
}

/// Modulus |q| = sqrt(q conj(q)).
inline double norm(const Quaternion& q) { return std::sqrt(norm_sq(q)); }

/// Multiplicative inverse conj(q)/|q|^2. Throws DivisionByZero for |q| < 1e-300.
inline Quaternion inverse(const Quaternion& q) {
    const double n2 = norm_sq(q);
    if (std::sqrt(n2) < 1e-300) {
        throw DivisionByZero("quaternion inverse: modulus below 1e-300");
    }
    return conj(q) * (1.0 / n2);
}

inline bool is_finite(const Quaternion& q) {
    return std::isfinite(q.w) && std::isfinite(q.x) && std::isfinite(q.y) &&
           std::isfinite(q.z);
}

/// Componentwise closeness with absolute and relative tolerances.
inline bool approx_equal(const Quaternion& a, const Quaternion& b,
                         double atol = 1e-12, double rtol = 1e-12) {
    const double scale = std::max(norm(a), norm(b));
    const Quaternion d = a - b;
    const double bound = atol + rtol * scale;
    return std::abs(d.w) <= bound && std::abs(d.x) <= bound &&
           std::abs(d.y) <= bound && std::abs(d.z) <= bound;
}

inline std::ostream& operator<<(std::ostream& os, const Quaternion& q) {
    return os << "(" << q.w << ", " << q.x << ", " << q.y << ", " << q.z << ")";
}

} // namespace qframe
