#include "s3h/hsurface.hpp"

#include <cmath>

namespace s3h {

GridField<Complex> holo_field(const HSurfaceField& X) {
    auto Xx = dx_field(X.X);
    auto Xy = dy_field(X.X);
    GridField<Complex> out(X.grid);
    for (std::size_t k = 0; k < out.values.size(); ++k) {
        const ImQuaternion& xx = Xx.values[k];
        const ImQuaternion& xy = Xy.values[k];
        out.values[k] =
            Complex(0.25 * (dot(xx, xx) - dot(xy, xy)), -0.5 * dot(xx, xy));
    }
    return out;
}

ResidualReport verify_hsurface(const HSurfaceField& X) {
    const Grid& g = X.grid;
    ResidualReport rep;
    rep.grid = g;

    auto Xx = dx_field(X.X);
    auto Xy = dy_field(X.X);
    auto Xxx = dxx_field(X.X);
    auto Xyy = dyy_field(X.X);
    GridField<ImQuaternion> wente(g);
    for (std::size_t k = 0; k < g.size(); ++k)
        wente.values[k] = Xxx.values[k] + Xyy.values[k] -
                          2.0 * X.H * cross(Xx.values[k], Xy.values[k]);
    rep.add("wente", wente);

    auto holo = holo_field(X);
    rep.add("holomorphy", dbar_wirtinger(holo));
    double min_holo = std::numeric_limits<double>::infinity();
    const int m = ResidualReport::interior_margin;
    for (int j = m; j < g.ny - m; ++j)
        for (int i = m; i < g.nx - m; ++i) min_holo = std::min(min_holo, std::abs(holo.at(i, j)));
    rep.add_value("min_holo_differential", min_holo);
    rep.add_value("H", X.H);
    return rep;
}

HSurfaceField h_from_harmonic(const AdaptedFrameField& frame, ResidualReport* report) {
    const Grid& g = frame.grid;
    // X_x = beta, X_y = -alpha: the orientation for which the integrability
    // relation alpha_y - beta_x = 2 alpha x beta is the H = -1 equation
    GridField<ImQuaternion> px(g), py(g);
    for (std::size_t k = 0; k < g.size(); ++k) {
        px.values[k] = frame.beta.values[k];
        py.values[k] = -frame.alpha.values[k];
    }
    auto pot = integrate_potential(px, py, ImQuaternion{});

    HSurfaceField X;
    X.grid = g;
    X.X = std::move(pot.field);
    X.H = -1.0;
    X.Xx = std::move(px);
    X.Xy = std::move(py);

    if (report) {
        *report = verify_hsurface(X);
        report->add_value("path_independence", pot.path_independence);
        // integrability alpha_x + beta_y = 0 on the source fields
        const FrameDerivatives derivs =
            frame.derivs ? *frame.derivs : fd_derivatives(frame);
        GridField<ImQuaternion> ab2(g);
        for (std::size_t k = 0; k < g.size(); ++k)
            ab2.values[k] = derivs.alpha_x.values[k] + derivs.beta_y.values[k];
        report->add("integrability", ab2);
    }
    return X;
}

AdaptedFrameField harmonic_from_h(const HSurfaceField& X, const Quaternion& f0,
                                  const HarmonicFromHOptions& opts) {
    const Grid& g = X.grid;
    if (std::abs(X.H + 1.0) > 1e-12)
        throw Error("invalid-argument", "the correspondence needs H = -1; dilate first");
    if (std::abs(norm(f0) - 1.0) > 1e-9) throw Error("seed-invalid", "|f0| must be 1");

    ResidualReport rep = verify_hsurface(X);
    const double gate = opts.wente_gate > 0 ? opts.wente_gate : 10.0 * g.h_max() * g.h_max();
    if (rep.interior("wente") > gate)
        throw Error("wente-gate-failed", "Wente residual " + std::to_string(rep.interior("wente")) +
                                             " exceeds " + std::to_string(gate));
    if (rep.values.at("min_holo_differential") < opts.conformal_tol)
        throw Error("conformal-input",
                    "<X_z,X_z> vanishes; the surface is CMC and has no non-conformal partner");

    auto Xx_fd = dx_field(X.X);   // beta = X_x
    auto Xy_fd = dy_field(X.X);   // alpha = -X_y

    // transport f through f_x = f alpha, f_y = f beta along row 0 then columns
    const int sub = std::max(1, opts.substeps);
    GridField<Quaternion> f(g);
    auto step = [&](Quaternion q, double x, double y, double h, bool x_dir) {
        const double hh = h / sub;
        for (int m = 0; m < sub; ++m) {
            const double cx = x_dir ? x + m * hh : x;
            const double cy = x_dir ? y : y + m * hh;
            auto vec = [&](double px_, double py_) {
                return x_dir ? -1.0 * interp_bicubic(Xy_fd, px_, py_)
                             : interp_bicubic(Xx_fd, px_, py_);
            };
            const Quaternion k1 = q * vec(cx, cy);
            const Quaternion k2 = (q + 0.5 * hh * k1) * vec(x_dir ? cx + 0.5 * hh : cx,
                                                            x_dir ? cy : cy + 0.5 * hh);
            const Quaternion k3 = (q + 0.5 * hh * k2) * vec(x_dir ? cx + 0.5 * hh : cx,
                                                            x_dir ? cy : cy + 0.5 * hh);
            const Quaternion k4 =
                (q + hh * k3) * vec(x_dir ? cx + hh : cx, x_dir ? cy : cy + hh);
            q = q + (hh / 6.0) * (k1 + 2.0 * k2 + 2.0 * k3 + k4);
            q = normalized(q);
        }
        return q;
    };

    std::vector<Quaternion> row(g.nx);
    row[0] = f0;
    for (int i = 1; i < g.nx; ++i) row[i] = step(row[i - 1], g.x(i - 1), g.y0, g.hx, true);
    for (int i = 0; i < g.nx; ++i) {
        Quaternion q = row[i];
        f.at(i, 0) = q;
        for (int j = 1; j < g.ny; ++j) {
            q = step(q, g.x(i), g.y(j - 1), g.hy, false);
            f.at(i, j) = q;
        }
    }
    return build_frame(f, opts.build);
}

HSurfaceField h_eps_transform(const HSurfaceField& X, Eps eps, const GridField<double>* phi) {
    const Grid& g = X.grid;
    if (std::abs(X.H + 1.0) > 1e-12)
        throw Error("invalid-argument", "the transform needs H = -1; dilate first");
    const int e = sign(eps);

    GridField<ImQuaternion> Xx = X.Xx ? *X.Xx : dx_field(X.X);
    GridField<ImQuaternion> Xy = X.Xy ? *X.Xy : dy_field(X.X);

    HSurfaceField out;
    out.grid = g;
    out.H = -1.0;
    out.X = GridField<ImQuaternion>(g);
    for (std::size_t k = 0; k < g.size(); ++k) {
        const ImQuaternion& xx = Xx.values[k];
        const ImQuaternion& xy = Xy.values[k];
        // |X_y| = 2 sinh phi in this convention
        const double ph = phi ? phi->values[k] : std::asinh(0.5 * norm(xy));
        const double sech_sq = 1.0 / (std::cosh(ph) * std::cosh(ph));
        out.X.values[k] =
            X.X.values[k] - 0.5 * sech_sq * (e * xx + 0.5 * cross(xx, xy));
    }
    return out;
}

HSurfaceField dilate(const HSurfaceField& X, double lambda) {
    if (lambda == 0.0) throw Error("zero-lambda", "dilation factor must be non-zero");
    HSurfaceField out;
    out.grid = X.grid;
    out.H = X.H / lambda;
    out.X = X.X.map([&](const ImQuaternion& v) { return lambda * v; });
    if (X.Xx) out.Xx = X.Xx->map([&](const ImQuaternion& v) { return lambda * v; });
    if (X.Xy) out.Xy = X.Xy->map([&](const ImQuaternion& v) { return lambda * v; });
    return out;
}

} // namespace s3h
