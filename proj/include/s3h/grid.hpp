#pragma once

#include <algorithm>
#include <cstddef>
#include <vector>

#include "s3h/error.hpp"
#include "s3h/quat.hpp"

namespace s3h {

/// Uniform rectangular parameter grid. Point (i, j) sits at (x0 + i hx, y0 + j hy).
struct Grid {
    double x0 = 0, y0 = 0;
    double hx = 0, hy = 0;
    int nx = 0, ny = 0;

    Grid() = default;
    Grid(double x0_, double y0_, double hx_, double hy_, int nx_, int ny_)
        : x0(x0_), y0(y0_), hx(hx_), hy(hy_), nx(nx_), ny(ny_) {
        if (hx <= 0 || hy <= 0) throw Error("grid-invalid", "step sizes must be positive");
        if (nx < 3 || ny < 3) throw Error("grid-too-small", "need at least 3 points per axis");
    }

    static Grid over(double x0, double x1, double y0, double y1, int nx, int ny) {
        if (nx < 3 || ny < 3) throw Error("grid-too-small", "need at least 3 points per axis");
        return Grid(x0, y0, (x1 - x0) / (nx - 1), (y1 - y0) / (ny - 1), nx, ny);
    }

    double x(int i) const { return x0 + i * hx; }
    double y(int j) const { return y0 + j * hy; }
    double h_max() const { return std::max(hx, hy); }
    std::size_t index(int i, int j) const { return static_cast<std::size_t>(j) * nx + i; }
    std::size_t size() const { return static_cast<std::size_t>(nx) * ny; }

    bool same_as(const Grid& o, double tol = 1e-12) const {
        return nx == o.nx && ny == o.ny && std::abs(x0 - o.x0) < tol && std::abs(y0 - o.y0) < tol &&
               std::abs(hx - o.hx) < tol && std::abs(hy - o.hy) < tol;
    }
};

/// A map sampled on a grid, stored row-major (j outer, i inner).
template <class V>
struct GridField {
    Grid grid;
    std::vector<V> values;

    GridField() = default;
    explicit GridField(const Grid& g) : grid(g), values(g.size()) {}
    GridField(const Grid& g, const V& fill) : grid(g), values(g.size(), fill) {}

    V& at(int i, int j) { return values[grid.index(i, j)]; }
    const V& at(int i, int j) const { return values[grid.index(i, j)]; }

    template <class F>
    static GridField generate(const Grid& g, F&& fn) {
        GridField out(g);
        for (int j = 0; j < g.ny; ++j)
            for (int i = 0; i < g.nx; ++i) out.at(i, j) = fn(g.x(i), g.y(j));
        return out;
    }

    template <class F>
    auto map(F&& fn) const -> GridField<decltype(fn(values[0]))> {
        GridField<decltype(fn(values[0]))> out(grid);
        for (std::size_t k = 0; k < values.size(); ++k) out.values[k] = fn(values[k]);
        return out;
    }
};

inline double norm(double v) { return std::abs(v); }
inline double norm(const Complex& v) { return std::abs(v); }

// --- complexification trait used by the Wirtinger operators ---------------

template <class V>
struct Complexify;

template <>
struct Complexify<double> {
    using type = Complex;
    static Complex embed(double v) { return {v, 0}; }
};
template <>
struct Complexify<Complex> {
    using type = Complex;
    static Complex embed(const Complex& v) { return v; }
};
template <>
struct Complexify<Quaternion> {
    using type = CQuaternion;
    static CQuaternion embed(const Quaternion& v) { return CQuaternion(v); }
};
template <>
struct Complexify<CQuaternion> {
    using type = CQuaternion;
    static CQuaternion embed(const CQuaternion& v) { return v; }
};
template <>
struct Complexify<ImQuaternion> {
    using type = CImQuaternion;
    static CImQuaternion embed(const ImQuaternion& v) { return CImQuaternion(v); }
};
template <>
struct Complexify<CImQuaternion> {
    using type = CImQuaternion;
    static CImQuaternion embed(const CImQuaternion& v) { return v; }
};

inline Complex times_i(const Complex& v) { return {-v.imag(), v.real()}; }

template <class V>
using ComplexifiedT = typename Complexify<V>::type;

// --- finite differences -----------------------------------------------------
//
// Second-order stencils: central in the interior, one-sided at the boundary.

namespace detail {

template <class V>
void require_min_size(const GridField<V>& f) {
    if (f.grid.nx < 3 || f.grid.ny < 3) throw Error("grid-too-small", "derivatives need nx, ny >= 3");
}

} // namespace detail

template <class V>
GridField<V> dx_field(const GridField<V>& f) {
    detail::require_min_size(f);
    const Grid& g = f.grid;
    GridField<V> out(g);
    const double inv2h = 1.0 / (2.0 * g.hx);
    for (int j = 0; j < g.ny; ++j) {
        out.at(0, j) = (-3.0 * f.at(0, j) + 4.0 * f.at(1, j) - f.at(2, j)) * inv2h;
        for (int i = 1; i < g.nx - 1; ++i) out.at(i, j) = (f.at(i + 1, j) - f.at(i - 1, j)) * inv2h;
        out.at(g.nx - 1, j) =
            (3.0 * f.at(g.nx - 1, j) - 4.0 * f.at(g.nx - 2, j) + f.at(g.nx - 3, j)) * inv2h;
    }
    return out;
}

template <class V>
GridField<V> dy_field(const GridField<V>& f) {
    detail::require_min_size(f);
    const Grid& g = f.grid;
    GridField<V> out(g);
    const double inv2h = 1.0 / (2.0 * g.hy);
    for (int i = 0; i < g.nx; ++i) {
        out.at(i, 0) = (-3.0 * f.at(i, 0) + 4.0 * f.at(i, 1) - f.at(i, 2)) * inv2h;
        out.at(i, g.ny - 1) =
            (3.0 * f.at(i, g.ny - 1) - 4.0 * f.at(i, g.ny - 2) + f.at(i, g.ny - 3)) * inv2h;
    }
    for (int j = 1; j < g.ny - 1; ++j)
        for (int i = 0; i < g.nx; ++i) out.at(i, j) = (f.at(i, j + 1) - f.at(i, j - 1)) * inv2h;
    return out;
}

template <class V>
GridField<V> dxx_field(const GridField<V>& f) {
    detail::require_min_size(f);
    const Grid& g = f.grid;
    if (g.nx < 4) throw Error("grid-too-small", "second x-derivative needs nx >= 4");
    GridField<V> out(g);
    const double invh2 = 1.0 / (g.hx * g.hx);
    for (int j = 0; j < g.ny; ++j) {
        out.at(0, j) =
            (2.0 * f.at(0, j) - 5.0 * f.at(1, j) + 4.0 * f.at(2, j) - f.at(3, j)) * invh2;
        for (int i = 1; i < g.nx - 1; ++i)
            out.at(i, j) = (f.at(i + 1, j) - 2.0 * f.at(i, j) + f.at(i - 1, j)) * invh2;
        out.at(g.nx - 1, j) = (2.0 * f.at(g.nx - 1, j) - 5.0 * f.at(g.nx - 2, j) +
                               4.0 * f.at(g.nx - 3, j) - f.at(g.nx - 4, j)) *
                              invh2;
    }
    return out;
}

template <class V>
GridField<V> dyy_field(const GridField<V>& f) {
    detail::require_min_size(f);
    const Grid& g = f.grid;
    if (g.ny < 4) throw Error("grid-too-small", "second y-derivative needs ny >= 4");
    GridField<V> out(g);
    const double invh2 = 1.0 / (g.hy * g.hy);
    for (int i = 0; i < g.nx; ++i) {
        out.at(i, 0) =
            (2.0 * f.at(i, 0) - 5.0 * f.at(i, 1) + 4.0 * f.at(i, 2) - f.at(i, 3)) * invh2;
        out.at(i, g.ny - 1) = (2.0 * f.at(i, g.ny - 1) - 5.0 * f.at(i, g.ny - 2) +
                               4.0 * f.at(i, g.ny - 3) - f.at(i, g.ny - 4)) *
                              invh2;
    }
    for (int j = 1; j < g.ny - 1; ++j)
        for (int i = 0; i < g.nx; ++i)
            out.at(i, j) = (f.at(i, j + 1) - 2.0 * f.at(i, j) + f.at(i, j - 1)) * invh2;
    return out;
}

template <class V>
GridField<V> dxy_field(const GridField<V>& f) {
    return dy_field(dx_field(f));
}

/// d/dz = (d/dx - i d/dy) / 2
template <class V>
GridField<ComplexifiedT<V>> d_wirtinger(const GridField<V>& f) {
    auto fx = dx_field(f);
    auto fy = dy_field(f);
    GridField<ComplexifiedT<V>> out(f.grid);
    for (std::size_t k = 0; k < out.values.size(); ++k)
        out.values[k] = Complexify<V>::embed(fx.values[k]) * 0.5 -
                        times_i(Complexify<V>::embed(fy.values[k]) * 0.5);
    return out;
}

/// d/dzbar = (d/dx + i d/dy) / 2
template <class V>
GridField<ComplexifiedT<V>> dbar_wirtinger(const GridField<V>& f) {
    auto fx = dx_field(f);
    auto fy = dy_field(f);
    GridField<ComplexifiedT<V>> out(f.grid);
    for (std::size_t k = 0; k < out.values.size(); ++k)
        out.values[k] = Complexify<V>::embed(fx.values[k]) * 0.5 +
                        times_i(Complexify<V>::embed(fy.values[k]) * 0.5);
    return out;
}

// --- norms -------------------------------------------------------------------

template <class V>
double sup_norm(const GridField<V>& f) {
    double m = 0;
    for (const V& v : f.values) m = std::max(m, norm(v));
    return m;
}

/// Sup norm over points at least `margin` cells away from the boundary.
/// Residual suites use this to exclude one-sided-stencil noise.
template <class V>
double interior_sup_norm(const GridField<V>& f, int margin = 1) {
    const Grid& g = f.grid;
    double m = 0;
    for (int j = margin; j < g.ny - margin; ++j)
        for (int i = margin; i < g.nx - margin; ++i) m = std::max(m, norm(f.at(i, j)));
    return m;
}

template <class V>
double boundary_sup_norm(const GridField<V>& f, int margin = 1) {
    const Grid& g = f.grid;
    double m = 0;
    for (int j = 0; j < g.ny; ++j)
        for (int i = 0; i < g.nx; ++i)
            if (i < margin || i >= g.nx - margin || j < margin || j >= g.ny - margin)
                m = std::max(m, norm(f.at(i, j)));
    return m;
}

// --- potential integration ---------------------------------------------------

template <class V>
struct PotentialResult {
    GridField<V> field;
    double path_independence = 0;  ///< sup |row-first - column-first|
};

/// Integrate dF/dx = px, dF/dy = py with F(origin) = v0 by the trapezoidal rule,
/// row-first. The column-first integration is kept as a cross-check; their
/// difference reports the failure of integrability.
template <class V>
PotentialResult<V> integrate_potential(const GridField<V>& px, const GridField<V>& py, const V& v0) {
    const Grid& g = px.grid;
    if (!py.grid.same_as(g)) throw Error("grid-mismatch", "px and py live on different grids");

    GridField<V> rowf(g), colf(g);
    // row-first: along the first row in x, then up each column in y
    rowf.at(0, 0) = v0;
    for (int i = 1; i < g.nx; ++i)
        rowf.at(i, 0) = rowf.at(i - 1, 0) + (px.at(i - 1, 0) + px.at(i, 0)) * (0.5 * g.hx);
    for (int i = 0; i < g.nx; ++i)
        for (int j = 1; j < g.ny; ++j)
            rowf.at(i, j) = rowf.at(i, j - 1) + (py.at(i, j - 1) + py.at(i, j)) * (0.5 * g.hy);
    // column-first
    colf.at(0, 0) = v0;
    for (int j = 1; j < g.ny; ++j)
        colf.at(0, j) = colf.at(0, j - 1) + (py.at(0, j - 1) + py.at(0, j)) * (0.5 * g.hy);
    for (int j = 0; j < g.ny; ++j)
        for (int i = 1; i < g.nx; ++i)
            colf.at(i, j) = colf.at(i - 1, j) + (px.at(i - 1, j) + px.at(i, j)) * (0.5 * g.hx);

    double diff = 0;
    for (std::size_t k = 0; k < rowf.values.size(); ++k)
        diff = std::max(diff, norm(rowf.values[k] - colf.values[k]));
    return {std::move(rowf), diff};
}

// --- local cubic interpolation ------------------------------------------------

namespace detail {

// Lagrange weights at parameter s for four equispaced nodes 0, 1, 2, 3.
inline void lagrange4_weights(double s, double w[4]) {
    w[0] = -(s - 1) * (s - 2) * (s - 3) / 6.0;
    w[1] = s * (s - 2) * (s - 3) / 2.0;
    w[2] = -s * (s - 1) * (s - 3) / 2.0;
    w[3] = s * (s - 1) * (s - 2) / 6.0;
}

} // namespace detail

/// Bicubic Lagrange interpolation on a shifted 4x4 stencil. Exact on cubics;
/// the stencil slides inward near the domain edges.
template <class V>
V interp_bicubic(const GridField<V>& f, double x, double y) {
    const Grid& g = f.grid;
    if (g.nx < 4 || g.ny < 4) throw Error("grid-too-small", "bicubic interpolation needs 4x4");
    const double u = (x - g.x0) / g.hx;
    const double v = (y - g.y0) / g.hy;
    const int i0 = std::clamp(static_cast<int>(std::floor(u)) - 1, 0, g.nx - 4);
    const int j0 = std::clamp(static_cast<int>(std::floor(v)) - 1, 0, g.ny - 4);
    double wu[4], wv[4];
    detail::lagrange4_weights(u - i0, wu);
    detail::lagrange4_weights(v - j0, wv);
    V acc{};
    for (int b = 0; b < 4; ++b) {
        V row{};
        for (int a = 0; a < 4; ++a) row += f.at(i0 + a, j0 + b) * wu[a];
        acc += row * wv[b];
    }
    return acc;
}

} // namespace s3h
