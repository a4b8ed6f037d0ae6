#include "s3h/congruence.hpp"

#include <cmath>

namespace s3h {

O4Fit procrustes_o4(const GridField<Quaternion>& f, const GridField<Quaternion>& g) {
    if (!f.grid.same_as(g.grid)) throw Error("grid-mismatch", "samples live on different grids");
    if (f.grid.size() < 4) throw Error("invalid-argument", "need at least 4 sample points");

    // cross-covariance M = sum g_i f_i^T; the optimal R is U V^T from its SVD
    Mat4 M{};
    for (std::size_t k = 0; k < f.values.size(); ++k) {
        const Quaternion& a = f.values[k];
        const Quaternion& b = g.values[k];
        const double av[4] = {a.w, a.x, a.y, a.z};
        const double bv[4] = {b.w, b.x, b.y, b.z};
        for (int r = 0; r < 4; ++r)
            for (int c = 0; c < 4; ++c) M(r, c) += bv[r] * av[c];
    }
    const Svd4 svd = svd4(M);

    O4Fit fit;
    fit.R = matmul(svd.U, transpose(svd.V));
    fit.singular_values = svd.S;
    fit.rank_deficient = svd.S[3] < 1e-9 * std::max(svd.S[0], 1e-300);
    fit.det_sign = det4(fit.R) >= 0 ? 1 : -1;
    for (std::size_t k = 0; k < f.values.size(); ++k)
        fit.residual = std::max(fit.residual, norm(apply(fit.R, f.values[k]) - g.values[k]));
    return fit;
}

double hyperplane_min_singular_value(const GridField<Quaternion>& f) {
    Mat4 M{};
    for (const Quaternion& q : f.values) {
        const double v[4] = {q.w, q.x, q.y, q.z};
        for (int r = 0; r < 4; ++r)
            for (int c = 0; c < 4; ++c) M(r, c) += v[r] * v[c];
    }
    const Svd4 svd = svd4(M);  // M is PSD; singular values are its eigenvalues
    return std::sqrt(std::max(0.0, svd.S[3]));
}

} // namespace s3h
