#include "s3h/linalg4.hpp"

#include <algorithm>
#include <cmath>

namespace s3h {

Mat4 matmul(const Mat4& A, const Mat4& B) {
    Mat4 C;
    for (int r = 0; r < 4; ++r)
        for (int c = 0; c < 4; ++c) {
            double s = 0;
            for (int k = 0; k < 4; ++k) s += A(r, k) * B(k, c);
            C(r, c) = s;
        }
    return C;
}

Mat4 transpose(const Mat4& A) {
    Mat4 T;
    for (int r = 0; r < 4; ++r)
        for (int c = 0; c < 4; ++c) T(r, c) = A(c, r);
    return T;
}

Quaternion apply(const Mat4& A, const Quaternion& v) {
    const double in[4] = {v.w, v.x, v.y, v.z};
    double out[4];
    for (int r = 0; r < 4; ++r) {
        out[r] = 0;
        for (int c = 0; c < 4; ++c) out[r] += A(r, c) * in[c];
    }
    return {out[0], out[1], out[2], out[3]};
}

namespace {

double det3(double a, double b, double c, double d, double e, double f, double g, double h,
            double i) {
    return a * (e * i - f * h) - b * (d * i - f * g) + c * (d * h - e * g);
}

} // namespace

double det4(const Mat4& A) {
    double d = 0;
    for (int c = 0; c < 4; ++c) {
        double m[9];
        int k = 0;
        for (int r = 1; r < 4; ++r)
            for (int cc = 0; cc < 4; ++cc)
                if (cc != c) m[k++] = A(r, cc);
        const double minor = det3(m[0], m[1], m[2], m[3], m[4], m[5], m[6], m[7], m[8]);
        d += ((c % 2 == 0) ? 1.0 : -1.0) * A(0, c) * minor;
    }
    return d;
}

double det4_columns(const Quaternion& c0, const Quaternion& c1, const Quaternion& c2,
                    const Quaternion& c3) {
    Mat4 M;
    const Quaternion* cols[4] = {&c0, &c1, &c2, &c3};
    for (int c = 0; c < 4; ++c) {
        M(0, c) = cols[c]->w;
        M(1, c) = cols[c]->x;
        M(2, c) = cols[c]->y;
        M(3, c) = cols[c]->z;
    }
    return det4(M);
}

double orthogonality_residual(const Mat4& A) {
    Mat4 G = matmul(transpose(A), A);
    double m = 0;
    for (int r = 0; r < 4; ++r)
        for (int c = 0; c < 4; ++c) m = std::max(m, std::abs(G(r, c) - (r == c ? 1.0 : 0.0)));
    return m;
}

Svd4 svd4(const Mat4& A) {
    Mat4 W = A;                 // columns get rotated in place
    Mat4 V = Mat4::identity();

    auto coldot = [&](int p, int q) {
        double s = 0;
        for (int r = 0; r < 4; ++r) s += W(r, p) * W(r, q);
        return s;
    };

    // Hestenes one-sided Jacobi: orthogonalize column pairs.
    for (int sweep = 0; sweep < 60; ++sweep) {
        double off = 0;
        for (int p = 0; p < 3; ++p) {
            for (int q = p + 1; q < 4; ++q) {
                const double app = coldot(p, p), aqq = coldot(q, q), apq = coldot(p, q);
                off = std::max(off, std::abs(apq));
                if (std::abs(apq) < 1e-300) continue;
                const double tau = (aqq - app) / (2.0 * apq);
                const double t = (tau >= 0 ? 1.0 : -1.0) / (std::abs(tau) + std::sqrt(1.0 + tau * tau));
                const double c = 1.0 / std::sqrt(1.0 + t * t), s = t * c;
                for (int r = 0; r < 4; ++r) {
                    const double wp = W(r, p), wq = W(r, q);
                    W(r, p) = c * wp - s * wq;
                    W(r, q) = s * wp + c * wq;
                    const double vp = V(r, p), vq = V(r, q);
                    V(r, p) = c * vp - s * vq;
                    V(r, q) = s * vp + c * vq;
                }
            }
        }
        if (off < 1e-15) break;
    }

    Svd4 out;
    out.V = V;
    std::array<int, 4> order = {0, 1, 2, 3};
    std::array<double, 4> sigma{};
    for (int c = 0; c < 4; ++c) sigma[c] = std::sqrt(std::max(0.0, coldot(c, c)));
    std::sort(order.begin(), order.end(), [&](int a, int b) { return sigma[a] > sigma[b]; });

    Mat4 U{}, Vs{};
    for (int c = 0; c < 4; ++c) {
        const int src = order[c];
        out.S[c] = sigma[src];
        for (int r = 0; r < 4; ++r) {
            Vs(r, c) = V(r, src);
            U(r, c) = (out.S[c] > 1e-300) ? W(r, src) / out.S[c] : 0.0;
        }
    }
    // complete near-null columns of U to an orthonormal basis
    for (int c = 0; c < 4; ++c) {
        double len = 0;
        for (int r = 0; r < 4; ++r) len += U(r, c) * U(r, c);
        if (len > 0.5) continue;
        for (int axis = 0; axis < 4; ++axis) {
            double col[4] = {0, 0, 0, 0};
            col[axis] = 1;
            for (int prev = 0; prev < 4; ++prev) {
                if (prev == c) continue;
                double proj = 0;
                for (int r = 0; r < 4; ++r) proj += U(r, prev) * col[r];
                for (int r = 0; r < 4; ++r) col[r] -= proj * U(r, prev);
            }
            double nl = std::sqrt(col[0] * col[0] + col[1] * col[1] + col[2] * col[2] + col[3] * col[3]);
            if (nl > 1e-3) {
                for (int r = 0; r < 4; ++r) U(r, c) = col[r] / nl;
                break;
            }
        }
    }
    out.U = U;
    out.V = Vs;
    return out;
}

} // namespace s3h
