#include "s3h/nearly_kahler.hpp"

#include <cmath>

namespace s3h {

namespace {

constexpr double kInvSqrt3 = 0.57735026918962576451;
constexpr double kPi = 3.14159265358979323846;

} // namespace

void check_point(const NKPoint& pt, double tol) {
    if (std::abs(norm(pt.p) - 1.0) > tol || std::abs(norm(pt.q) - 1.0) > tol)
        throw Error("not-on-manifold", "point components must be unit quaternions");
}

void check_tangent(const NKPoint& pt, const NKTangent& t, double tol) {
    if (std::abs(dot(t.u, pt.p)) > tol || std::abs(dot(t.v, pt.q)) > tol)
        throw Error("not-tangent", "tangent components must be orthogonal to the base point");
}

NKTangent nk_j(const NKPoint& pt, const NKTangent& t) {
    const Quaternion pq = pt.p * star(pt.q);
    const Quaternion qp = pt.q * star(pt.p);
    return {kInvSqrt3 * (2.0 * (pq * t.v) - t.u), kInvSqrt3 * (t.v - 2.0 * (qp * t.u))};
}

CNKTangent nk_j(const NKPoint& pt, const CNKTangent& t) {
    const Quaternion pq = pt.p * star(pt.q);
    const Quaternion qp = pt.q * star(pt.p);
    return {kInvSqrt3 * ((pq * t.v) * 2.0 - t.u), kInvSqrt3 * (t.v - (qp * t.u) * 2.0)};
}

NKTangent nk_p(const NKPoint& pt, const NKTangent& t) {
    return {pt.p * star(pt.q) * t.v, pt.q * star(pt.p) * t.u};
}

CNKTangent nk_p(const NKPoint& pt, const CNKTangent& t) {
    return {(pt.p * star(pt.q)) * t.v, (pt.q * star(pt.p)) * t.u};
}

double nk_g(const NKPoint& pt, const NKTangent& a, const NKTangent& b) {
    const NKTangent ja = nk_j(pt, a), jb = nk_j(pt, b);
    return 0.5 * (dot(a.u, b.u) + dot(a.v, b.v) + dot(ja.u, jb.u) + dot(ja.v, jb.v));
}

Complex nk_g(const NKPoint& pt, const CNKTangent& a, const CNKTangent& b) {
    const CNKTangent ja = nk_j(pt, a), jb = nk_j(pt, b);
    return 0.5 * (cdot(a.u, b.u) + cdot(a.v, b.v) + cdot(ja.u, jb.u) + cdot(ja.v, jb.v));
}

GridField<Complex> holo_differential(const NKMapField& psi, ResidualReport* report,
                                     const GridField<Complex>* surface_holo) {
    const Grid& g = psi.grid;
    for (std::size_t k = 0; k < g.size(); ++k)
        check_point({psi.p.values[k], psi.q.values[k]});

    auto dp = d_wirtinger(psi.p);
    auto dq = d_wirtinger(psi.q);
    GridField<Complex> out(g);
    for (std::size_t k = 0; k < g.size(); ++k) {
        const NKPoint pt{psi.p.values[k], psi.q.values[k]};
        const CNKTangent psi_z{dp.values[k], dq.values[k]};
        out.values[k] = nk_g(pt, nk_p(pt, psi_z), psi_z);
    }

    if (report) {
        report->grid = g;
        report->add("holo_dbar", dbar_wirtinger(out));
        if (surface_holo) {
            const Complex rot = std::polar(1.0, kPi / 3.0);
            GridField<Complex> gap(g);
            for (std::size_t k = 0; k < g.size(); ++k)
                gap.values[k] = out.values[k] - rot * surface_holo->values[k];
            report->add("acs_correspondence", gap);
        }
    }
    return out;
}

} // namespace s3h
