#pragma once

#include <array>

#include "s3h/quat.hpp"

namespace s3h {

/// Dense 4x4 real matrix, row-major. Just enough linear algebra for the
/// Procrustes fit and the orientation / rank checks; dimension is fixed and
/// tiny, so everything is direct.
struct Mat4 {
    std::array<double, 16> a{};

    double& operator()(int r, int c) { return a[r * 4 + c]; }
    double operator()(int r, int c) const { return a[r * 4 + c]; }

    static Mat4 identity() {
        Mat4 m;
        for (int i = 0; i < 4; ++i) m(i, i) = 1;
        return m;
    }
};

Mat4 matmul(const Mat4& A, const Mat4& B);
Mat4 transpose(const Mat4& A);
double det4(const Mat4& A);
Quaternion apply(const Mat4& A, const Quaternion& v);

/// Determinant of the 4x4 matrix with the given columns.
double det4_columns(const Quaternion& c0, const Quaternion& c1, const Quaternion& c2,
                    const Quaternion& c3);

/// Max |(A^T A - I)_{ij}|.
double orthogonality_residual(const Mat4& A);

struct Svd4 {
    Mat4 U, V;                        // A = U diag(S) V^T
    std::array<double, 4> S{};        // non-negative, descending
};

/// One-sided Jacobi SVD. Robust for the rank-deficient case; zero singular
/// directions are completed to an orthonormal basis.
Svd4 svd4(const Mat4& A);

} // namespace s3h
