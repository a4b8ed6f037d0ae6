#pragma once

#include <cmath>
#include <complex>
#include <utility>

namespace s3h {

using Complex = std::complex<double>;

/// Real quaternion w + x e1 + y e2 + z e3 with e1^2 = e2^2 = e3^2 = e1 e2 e3 = -1.
/// Doubles as the R^4 vector type for points of the 3-sphere.
struct Quaternion {
    double w = 0, x = 0, y = 0, z = 0;

    constexpr Quaternion() = default;
    constexpr Quaternion(double w_, double x_, double y_, double z_) : w(w_), x(x_), y(y_), z(z_) {}

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

    friend constexpr Quaternion operator+(Quaternion a, const Quaternion& b) { return a += b; }
    friend constexpr Quaternion operator-(Quaternion a, const Quaternion& b) { return a -= b; }
    friend constexpr Quaternion operator-(const Quaternion& a) { return {-a.w, -a.x, -a.y, -a.z}; }
    friend constexpr Quaternion operator*(Quaternion a, double s) { return a *= s; }
    friend constexpr Quaternion operator*(double s, Quaternion a) { return a *= s; }
    friend constexpr Quaternion operator/(Quaternion a, double s) { return a *= (1.0 / s); }

    // Hamilton product.
    friend constexpr Quaternion operator*(const Quaternion& a, const Quaternion& b) {
        return {a.w * b.w - a.x * b.x - a.y * b.y - a.z * b.z,
                a.w * b.x + a.x * b.w + a.y * b.z - a.z * b.y,
                a.w * b.y - a.x * b.z + a.y * b.w + a.z * b.x,
                a.w * b.z + a.x * b.y - a.y * b.x + a.z * b.w};
    }

    static constexpr Quaternion one() { return {1, 0, 0, 0}; }
    static constexpr Quaternion e1() { return {0, 1, 0, 0}; }
    static constexpr Quaternion e2() { return {0, 0, 1, 0}; }
    static constexpr Quaternion e3() { return {0, 0, 0, 1}; }
};

inline constexpr Quaternion qmul(const Quaternion& a, const Quaternion& b) { return a * b; }

/// Conjugation with respect to the three imaginaries: (w,x,y,z) -> (w,-x,-y,-z).
inline constexpr Quaternion star(const Quaternion& q) { return {q.w, -q.x, -q.y, -q.z}; }

/// Euclidean inner product on R^4.
inline constexpr double dot(const Quaternion& a, const Quaternion& b) {
    return a.w * b.w + a.x * b.x + a.y * b.y + a.z * b.z;
}

inline constexpr double norm_sq(const Quaternion& q) { return dot(q, q); }
inline double norm(const Quaternion& q) { return std::sqrt(norm_sq(q)); }
inline Quaternion normalized(const Quaternion& q) { return q / norm(q); }

/// Imaginary quaternion, identified with a Euclidean 3-vector. Kept as its own
/// type so that the split product rule only ever sees genuinely imaginary input.
struct ImQuaternion {
    double x = 0, y = 0, z = 0;

    constexpr ImQuaternion() = default;
    constexpr ImQuaternion(double x_, double y_, double z_) : x(x_), y(y_), z(z_) {}

    constexpr ImQuaternion& operator+=(const ImQuaternion& r) {
        x += r.x; y += r.y; z += r.z;
        return *this;
    }
    constexpr ImQuaternion& operator-=(const ImQuaternion& r) {
        x -= r.x; y -= r.y; z -= r.z;
        return *this;
    }
    constexpr ImQuaternion& operator*=(double s) {
        x *= s; y *= s; z *= s;
        return *this;
    }

    friend constexpr ImQuaternion operator+(ImQuaternion a, const ImQuaternion& b) { return a += b; }
    friend constexpr ImQuaternion operator-(ImQuaternion a, const ImQuaternion& b) { return a -= b; }
    friend constexpr ImQuaternion operator-(const ImQuaternion& a) { return {-a.x, -a.y, -a.z}; }
    friend constexpr ImQuaternion operator*(ImQuaternion a, double s) { return a *= s; }
    friend constexpr ImQuaternion operator*(double s, ImQuaternion a) { return a *= s; }
    friend constexpr ImQuaternion operator/(ImQuaternion a, double s) { return a *= (1.0 / s); }

    static constexpr ImQuaternion e1() { return {1, 0, 0}; }
    static constexpr ImQuaternion e2() { return {0, 1, 0}; }
    static constexpr ImQuaternion e3() { return {0, 0, 1}; }
};

inline constexpr double dot(const ImQuaternion& a, const ImQuaternion& b) {
    return a.x * b.x + a.y * b.y + a.z * b.z;
}

inline constexpr ImQuaternion cross(const ImQuaternion& a, const ImQuaternion& b) {
    return {a.y * b.z - a.z * b.y, a.z * b.x - a.x * b.z, a.x * b.y - a.y * b.x};
}

inline constexpr double norm_sq(const ImQuaternion& a) { return dot(a, a); }
inline double norm(const ImQuaternion& a) { return std::sqrt(norm_sq(a)); }

inline constexpr Quaternion as_quaternion(const ImQuaternion& a) { return {0, a.x, a.y, a.z}; }
inline constexpr ImQuaternion im_part(const Quaternion& q) { return {q.x, q.y, q.z}; }

/// Product of two imaginary quaternions, split as alpha beta = -<a,b> + a x b.
inline constexpr std::pair<double, ImQuaternion> improd_split(const ImQuaternion& a, const ImQuaternion& b) {
    return {-dot(a, b), cross(a, b)};
}

inline constexpr Quaternion operator*(const Quaternion& a, const ImQuaternion& b) {
    return a * as_quaternion(b);
}
inline constexpr Quaternion operator*(const ImQuaternion& a, const Quaternion& b) {
    return as_quaternion(a) * b;
}

/// Complexified quaternion re + i im, an element of H (x) C. The complex unit i
/// commutes with e1, e2, e3 and is distinct from them.
struct CQuaternion {
    Quaternion re, im;

    constexpr CQuaternion() = default;
    constexpr CQuaternion(const Quaternion& re_, const Quaternion& im_) : re(re_), im(im_) {}
    explicit constexpr CQuaternion(const Quaternion& re_) : re(re_), im() {}

    constexpr CQuaternion& operator+=(const CQuaternion& r) {
        re += r.re; im += r.im;
        return *this;
    }
    constexpr CQuaternion& operator-=(const CQuaternion& r) {
        re -= r.re; im -= r.im;
        return *this;
    }

    friend constexpr CQuaternion operator+(CQuaternion a, const CQuaternion& b) { return a += b; }
    friend constexpr CQuaternion operator-(CQuaternion a, const CQuaternion& b) { return a -= b; }
    friend constexpr CQuaternion operator-(const CQuaternion& a) { return {-a.re, -a.im}; }
    friend constexpr CQuaternion operator*(const CQuaternion& a, double s) { return {a.re * s, a.im * s}; }
    friend constexpr CQuaternion operator*(double s, const CQuaternion& a) { return a * s; }
    friend CQuaternion operator*(const Complex& c, const CQuaternion& a) {
        return {a.re * c.real() - a.im * c.imag(), a.re * c.imag() + a.im * c.real()};
    }
    friend CQuaternion operator*(const CQuaternion& a, const Complex& c) { return c * a; }

    // (p1 + i p2)(q1 + i q2) = (p1 q1 - p2 q2) + i (p1 q2 + p2 q1)
    friend constexpr CQuaternion operator*(const CQuaternion& a, const CQuaternion& b) {
        return {a.re * b.re - a.im * b.im, a.re * b.im + a.im * b.re};
    }

    Complex component(int k) const {
        switch (k) {
            case 0: return {re.w, im.w};
            case 1: return {re.x, im.x};
            case 2: return {re.y, im.y};
            default: return {re.z, im.z};
        }
    }
};

/// Conjugation with respect to i only.
inline constexpr CQuaternion bar(const CQuaternion& u) { return {u.re, -u.im}; }
/// Conjugation with respect to e1, e2, e3, extended complex-linearly.
inline constexpr CQuaternion star(const CQuaternion& u) { return {star(u.re), star(u.im)}; }

/// Complex bilinear extension of the Euclidean inner product (not Hermitian).
inline Complex cdot(const CQuaternion& a, const CQuaternion& b) {
    return {dot(a.re, b.re) - dot(a.im, b.im), dot(a.re, b.im) + dot(a.im, b.re)};
}

/// Hermitian squared norm |re|^2 + |im|^2.
inline constexpr double hnorm_sq(const CQuaternion& a) { return norm_sq(a.re) + norm_sq(a.im); }
inline double hnorm(const CQuaternion& a) { return std::sqrt(hnorm_sq(a)); }
inline double norm(const CQuaternion& a) { return hnorm(a); }

inline constexpr CQuaternion times_i(const CQuaternion& a) { return {-a.im, a.re}; }

inline constexpr CQuaternion operator*(const Quaternion& a, const CQuaternion& b) {
    return {a * b.re, a * b.im};
}
inline constexpr CQuaternion operator*(const CQuaternion& a, const Quaternion& b) {
    return {a.re * b, a.im * b};
}

/// Complexified imaginary quaternion (a C^3 vector with the bilinear products).
struct CImQuaternion {
    ImQuaternion re, im;

    constexpr CImQuaternion() = default;
    constexpr CImQuaternion(const ImQuaternion& re_, const ImQuaternion& im_) : re(re_), im(im_) {}
    explicit constexpr CImQuaternion(const ImQuaternion& re_) : re(re_), im() {}

    constexpr CImQuaternion& operator+=(const CImQuaternion& r) {
        re += r.re; im += r.im;
        return *this;
    }
    constexpr CImQuaternion& operator-=(const CImQuaternion& r) {
        re -= r.re; im -= r.im;
        return *this;
    }

    friend constexpr CImQuaternion operator+(CImQuaternion a, const CImQuaternion& b) { return a += b; }
    friend constexpr CImQuaternion operator-(CImQuaternion a, const CImQuaternion& b) { return a -= b; }
    friend constexpr CImQuaternion operator-(const CImQuaternion& a) { return {-a.re, -a.im}; }
    friend constexpr CImQuaternion operator*(const CImQuaternion& a, double s) { return {a.re * s, a.im * s}; }
    friend constexpr CImQuaternion operator*(double s, const CImQuaternion& a) { return a * s; }
    friend CImQuaternion operator*(const Complex& c, const CImQuaternion& a) {
        return {a.re * c.real() - a.im * c.imag(), a.re * c.imag() + a.im * c.real()};
    }
};

inline constexpr CImQuaternion bar(const CImQuaternion& a) { return {a.re, -a.im}; }
inline constexpr CImQuaternion times_i(const CImQuaternion& a) { return {-a.im, a.re}; }

inline Complex cdot(const CImQuaternion& a, const CImQuaternion& b) {
    return {dot(a.re, b.re) - dot(a.im, b.im), dot(a.re, b.im) + dot(a.im, b.re)};
}

/// Complex bilinear extension of the vector product.
inline constexpr CImQuaternion ccross(const CImQuaternion& a, const CImQuaternion& b) {
    return {cross(a.re, b.re) - cross(a.im, b.im), cross(a.re, b.im) + cross(a.im, b.re)};
}

inline constexpr double hnorm_sq(const CImQuaternion& a) { return norm_sq(a.re) + norm_sq(a.im); }
inline double hnorm(const CImQuaternion& a) { return std::sqrt(hnorm_sq(a)); }
inline double norm(const CImQuaternion& a) { return hnorm(a); }

inline constexpr CQuaternion as_cquaternion(const CImQuaternion& a) {
    return {as_quaternion(a.re), as_quaternion(a.im)};
}

inline constexpr CQuaternion operator*(const CQuaternion& a, const CImQuaternion& b) {
    return a * as_cquaternion(b);
}
inline constexpr CQuaternion operator*(const Quaternion& a, const CImQuaternion& b) {
    return CQuaternion(a) * as_cquaternion(b);
}

} // namespace s3h
