#pragma once

#include "s3h/grid.hpp"
#include "s3h/residual.hpp"

namespace s3h {

/// Point of S^3 x S^3: a pair of unit quaternions.
struct NKPoint {
    Quaternion p{1, 0, 0, 0}, q{1, 0, 0, 0};
};

/// Tangent vector at an NKPoint: <u, p> = <v, q> = 0.
struct NKTangent {
    Quaternion u, v;
};

/// Complexified tangent (for derivatives in a complex coordinate).
struct CNKTangent {
    CQuaternion u, v;
};

void check_point(const NKPoint& pt, double tol = 1e-9);
void check_tangent(const NKPoint& pt, const NKTangent& t, double tol = 1e-10);

/// Almost complex structure J(U,V) = ((2 p q* V - U), (-2 q p* U + V)) / sqrt 3.
NKTangent nk_j(const NKPoint& pt, const NKTangent& t);
CNKTangent nk_j(const NKPoint& pt, const CNKTangent& t);

/// Almost product structure P(U,V) = (p q* V, q p* U).
NKTangent nk_p(const NKPoint& pt, const NKTangent& t);
CNKTangent nk_p(const NKPoint& pt, const CNKTangent& t);

/// Nearly Kaehler metric g(Z,W) = (<Z,W> + <JZ,JW>) / 2 (complex-bilinear on
/// complexified tangents).
double nk_g(const NKPoint& pt, const NKTangent& a, const NKTangent& b);
Complex nk_g(const NKPoint& pt, const CNKTangent& a, const CNKTangent& b);

/// A map into S^3 x S^3 sampled on a grid.
struct NKMapField {
    Grid grid;
    GridField<Quaternion> p, q;
};

/// g(P psi_z, psi_z) with its dbar residual. When an H-surface holomorphic
/// differential is supplied, also reports the deviation from
/// e^{i pi / 3} <X_z, X_z> (report only; no gate).
GridField<Complex> holo_differential(const NKMapField& psi, ResidualReport* report = nullptr,
                                     const GridField<Complex>* surface_holo = nullptr);

} // namespace s3h
