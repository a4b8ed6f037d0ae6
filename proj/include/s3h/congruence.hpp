#pragma once

#include "s3h/grid.hpp"
#include "s3h/linalg4.hpp"

namespace s3h {

/// Best orthogonal alignment R g ~ f of two S^3-valued samples, over all of
/// O(4) (both orientation classes). residual is the sup norm of R f - g.
struct O4Fit {
    Mat4 R;
    double residual = 0;
    int det_sign = 1;
    bool rank_deficient = false;
    std::array<double, 4> singular_values{};  // of the cross-covariance
};

O4Fit procrustes_o4(const GridField<Quaternion>& f, const GridField<Quaternion>& g);

/// Smallest singular value of the n x 4 sample matrix; near zero iff the image
/// lies in a proper linear subspace (a great 2-sphere for unit samples).
double hyperplane_min_singular_value(const GridField<Quaternion>& f);

} // namespace s3h
