#pragma once

#include <cmath>
#include <complex>
#include <iosfwd>

namespace pfq {

using cplx = std::complex<double>;

/// 2x2 complex matrix, the image of a complexified quaternion under phi.
struct Complex2x2 {
    cplx a{}, b{}, c{}, d{};  // row-major: ((a,b),(c,d))

    static Complex2x2 identity() { return {1.0, 0.0, 0.0, 1.0}; }

    Complex2x2 operator+(const Complex2x2& o) const { return {a + o.a, b + o.b, c + o.c, d + o.d}; }
    Complex2x2 operator-(const Complex2x2& o) const { return {a - o.a, b - o.b, c - o.c, d - o.d}; }
    Complex2x2 operator*(const Complex2x2& o) const {
        return {a * o.a + b * o.c, a * o.b + b * o.d, c * o.a + d * o.c, c * o.b + d * o.d};
    }
    Complex2x2 operator*(const cplx& t) const { return {a * t, b * t, c * t, d * t}; }

    // matrix of the conjugate quaternion: ((d,-b),(-c,a))
    Complex2x2 adjugate() const { return {d, -b, -c, a}; }

    double max_abs() const {
        return std::max(std::max(std::abs(a), std::abs(b)), std::max(std::abs(c), std::abs(d)));
    }
};

/// Complexified quaternion s + x i + y j + z k with complex coefficients.
/// Complex scalars embed as quaternions with x = y = z = 0; they commute with
/// everything and are fixed by conjugation.
struct Quaternion {
    cplx s{}, x{}, y{}, z{};

    Quaternion() = default;
    Quaternion(cplx s_) : s(s_) {}
    Quaternion(double s_) : s(s_) {}
    Quaternion(cplx s_, cplx x_, cplx y_, cplx z_) : s(s_), x(x_), y(y_), z(z_) {}

    static Quaternion unit_i() { return {0.0, 1.0, 0.0, 0.0}; }
    static Quaternion unit_j() { return {0.0, 0.0, 1.0, 0.0}; }
    static Quaternion unit_k() { return {0.0, 0.0, 0.0, 1.0}; }

    /// q* = s - x i - y j - z k. Leaves any imaginary part of s alone.
    Quaternion conj() const { return {s, -x, -y, -z}; }

    Quaternion operator-() const { return {-s, -x, -y, -z}; }
    Quaternion operator+(const Quaternion& o) const { return {s + o.s, x + o.x, y + o.y, z + o.z}; }
    Quaternion operator-(const Quaternion& o) const { return {s - o.s, x - o.x, y - o.y, z - o.z}; }
    Quaternion& operator+=(const Quaternion& o) {
        s += o.s; x += o.x; y += o.y; z += o.z;
        return *this;
    }
    Quaternion& operator-=(const Quaternion& o) {
        s -= o.s; x -= o.x; y -= o.y; z -= o.z;
        return *this;
    }

    double max_abs() const {
        return std::max(std::max(std::abs(s), std::abs(x)), std::max(std::abs(y), std::abs(z)));
    }
    double vector_abs() const { return std::max(std::abs(x), std::max(std::abs(y), std::abs(z))); }

    bool is_scalar(double tol = 1e-10) const { return vector_abs() <= tol; }
    bool is_real(double tol = 1e-10) const {
        return std::max(std::max(std::abs(s.imag()), std::abs(x.imag())),
                        std::max(std::abs(y.imag()), std::abs(z.imag()))) <= tol;
    }
};

/// Non-commutative product following ij = -ji = k and cyclic relatives.
inline Quaternion operator*(const Quaternion& p, const Quaternion& q) {
    return {p.s * q.s - p.x * q.x - p.y * q.y - p.z * q.z,
            p.s * q.x + p.x * q.s + p.y * q.z - p.z * q.y,
            p.s * q.y + p.y * q.s + p.z * q.x - p.x * q.z,
            p.s * q.z + p.z * q.s + p.x * q.y - p.y * q.x};
}

inline Quaternion operator*(const cplx& t, const Quaternion& q) { return {t * q.s, t * q.x, t * q.y, t * q.z}; }
inline Quaternion operator*(const Quaternion& q, const cplx& t) { return t * q; }
inline Quaternion operator*(double t, const Quaternion& q) { return cplx(t) * q; }
inline Quaternion operator*(const Quaternion& q, double t) { return cplx(t) * q; }

inline bool approx_eq(const Quaternion& p, const Quaternion& q, double tol = 1e-10) {
    return (p - q).max_abs() <= tol;
}

/// Ring isomorphism onto 2x2 complex matrices:
/// i -> ((0,i),(i,0)), j -> ((0,-1),(1,0)), k -> ((i,0),(0,-i)).
inline Complex2x2 phi(const Quaternion& q) {
    const cplx I(0.0, 1.0);
    return {q.s + I * q.z, I * q.x - q.y, I * q.x + q.y, q.s - I * q.z};
}

inline Quaternion phi_inv(const Complex2x2& m) {
    const cplx I(0.0, 1.0);
    return {0.5 * (m.a + m.d), -0.5 * I * (m.b + m.c), 0.5 * (m.c - m.b), -0.5 * I * (m.a - m.d)};
}

inline Quaternion pow(Quaternion q, int k) {
    Quaternion r{1.0};
    for (int i = 0; i < k; ++i) r = r * q;
    return r;
}

std::ostream& operator<<(std::ostream& os, const Quaternion& q);

}  // namespace pfq
