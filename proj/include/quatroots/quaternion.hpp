#pragma once

#include <algorithm>
#include <cmath>

#include "quatroots/errors.hpp"

namespace quatroots {

// Element of the real quaternion algebra on the basis {1, i, j, k}.
// Multiplication follows i*i = j*j = k*k = -1, i*j = k = -j*i.
struct Quaternion {
    double w = 0.0;
    double x = 0.0;
    double y = 0.0;
    double z = 0.0;

    constexpr Quaternion() = default;
    // Intentionally non-explicit: reals embed as w + 0i + 0j + 0k.
    constexpr Quaternion(double w_, double x_ = 0.0, double y_ = 0.0, double z_ = 0.0)
        : w(w_), x(x_), y(y_), z(z_) {}

    friend constexpr bool operator==(const Quaternion&, const Quaternion&) = default;

    constexpr Quaternion& operator+=(const Quaternion& r) {
        w += r.w;
        x += r.x;
        y += r.y;
        z += r.z;
        return *this;
    }
    constexpr Quaternion& operator-=(const Quaternion& r) {
        w -= r.w;
        x -= r.x;
        y -= r.y;
        z -= r.z;
        return *this;
    }
    constexpr Quaternion& operator*=(double s) {
        w *= s;
        x *= s;
        y *= s;
        z *= s;
        return *this;
    }
    constexpr Quaternion& operator/=(double s) {
        w /= s;
        x /= s;
        y /= s;
        z /= s;
        return *this;
    }
};

constexpr Quaternion operator+(Quaternion a, const Quaternion& b) { return a += b; }
constexpr Quaternion operator-(Quaternion a, const Quaternion& b) { return a -= b; }
constexpr Quaternion operator-(const Quaternion& a) { return {-a.w, -a.x, -a.y, -a.z}; }
constexpr Quaternion operator*(Quaternion a, double s) { return a *= s; }
constexpr Quaternion operator*(double s, Quaternion a) { return a *= s; }
constexpr Quaternion operator/(Quaternion a, double s) { return a /= s; }

// Hamilton product; not commutative.
constexpr Quaternion operator*(const Quaternion& a, const Quaternion& b) {
    return {a.w * b.w - a.x * b.x - a.y * b.y - a.z * b.z,
            a.w * b.x + a.x * b.w + a.y * b.z - a.z * b.y,
            a.w * b.y - a.x * b.z + a.y * b.w + a.z * b.x,
            a.w * b.z + a.x * b.y - a.y * b.x + a.z * b.w};
}

constexpr Quaternion conj(const Quaternion& q) { return {q.w, -q.x, -q.y, -q.z}; }

constexpr double re(const Quaternion& q) { return q.w; }

constexpr double norm_sq(const Quaternion& q) {
    return q.w * q.w + q.x * q.x + q.y * q.y + q.z * q.z;
}

// Overflow/underflow-safe Euclidean norm.
inline double norm(const Quaternion& q) {
    return std::hypot(std::hypot(q.w, q.x), std::hypot(q.y, q.z));
}

constexpr double vec_norm_sq(const Quaternion& q) { return q.x * q.x + q.y * q.y + q.z * q.z; }

inline double vec_norm(const Quaternion& q) { return std::hypot(std::hypot(q.x, q.y), q.z); }

inline bool is_finite(const Quaternion& q) {
    return std::isfinite(q.w) && std::isfinite(q.x) && std::isfinite(q.y) && std::isfinite(q.z);
}

// Norms below this floor are treated as zero for inversion purposes.
inline constexpr double kInverseFloor = 1e-300;

// q^-1 = conj(q) / |q|^2, computed as two divisions by |q| so that tiny
// norms do not underflow the denominator.
inline Quaternion inverse(const Quaternion& q) {
    const double n = norm(q);
    if (n < kInverseFloor) throw ZeroDivision("quaternion inverse: |q| below floor");
    return conj(q) / n / n;
}

// Congruence (similarity) transform h q h^-1. Preserves real part and norm.
inline Quaternion similar(const Quaternion& h, const Quaternion& q) {
    return h * q * inverse(h);
}

// Congruence classes are characterized by (real part, norm): two quaternions
// are congruent iff both numbers agree.
struct ClassKey {
    double re = 0.0;
    double norm = 0.0;

    friend constexpr bool operator==(const ClassKey&, const ClassKey&) = default;
};

inline ClassKey class_key(const Quaternion& q) { return {re(q), norm(q)}; }

inline bool same_class(const Quaternion& a, const Quaternion& b, double tol) {
    return std::abs(re(a) - re(b)) <= tol && std::abs(norm(a) - norm(b)) <= tol;
}

// Chebyshev distance between class keys; the complement of same_class.
inline double class_gap(const Quaternion& a, const Quaternion& b) {
    return std::max(std::abs(re(a) - re(b)), std::abs(norm(a) - norm(b)));
}

}  // namespace quatroots
