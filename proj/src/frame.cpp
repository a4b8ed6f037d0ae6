#include "s3h/frame.hpp"

#include <cmath>
#include <limits>

#include "s3h/linalg4.hpp"

namespace s3h {

GridField<Quaternion> AdaptedFrameField::f_x() const {
    return f1.map([](const CQuaternion& v) { return v.re * 2.0; });
}

GridField<Quaternion> AdaptedFrameField::f_y() const {
    return f1.map([](const CQuaternion& v) { return v.im * -2.0; });
}

double AdaptedFrameField::invariant_variation() const {
    const double phi0 = phi.values.front();
    const Complex mu0 = mu.values.front();
    double dev = 0;
    for (std::size_t k = 0; k < phi.values.size(); ++k) {
        dev = std::max(dev, std::abs(phi.values[k] - phi0));
        dev = std::max(dev, std::abs(mu.values[k] - mu0));
    }
    return dev;
}

AdaptedFrameField build_frame(const GridField<Quaternion>& f, const BuildOptions& opts) {
    const Grid& g = f.grid;
    AdaptedFrameField out;
    out.grid = g;
    out.f = f;
    out.alpha_min = opts.alpha_min;

    for (const Quaternion& q : f.values)
        if (std::abs(norm(q) - 1.0) > opts.sphere_tol)
            throw Error("not-on-sphere", "|f| deviates from 1 by more than " +
                                             std::to_string(opts.sphere_tol));

    out.f1 = d_wirtinger(f);

    const double adapted_tol = opts.adapted_tol > 0 ? opts.adapted_tol : 10.0 * g.h_max() * g.h_max();
    {
        GridField<Complex> adapted(g);
        for (std::size_t k = 0; k < adapted.values.size(); ++k)
            adapted.values[k] = cdot(out.f1.values[k], out.f1.values[k]) + 1.0;
        if (interior_sup_norm(adapted, ResidualReport::interior_margin) > adapted_tol)
            throw Error("not-adapted",
                        "<f1,f1> deviates from -1; the sample is not in an adapted coordinate");
    }

    out.alpha = GridField<ImQuaternion>(g);
    out.beta = GridField<ImQuaternion>(g);
    out.phi = GridField<double>(g);
    out.N = GridField<Quaternion>(g);
    auto fx = out.f_x();
    auto fy = out.f_y();
    for (std::size_t k = 0; k < f.values.size(); ++k) {
        const Quaternion fs = star(f.values[k]);
        const ImQuaternion a = im_part(fs * fx.values[k]);
        const ImQuaternion b = im_part(fs * fy.values[k]);
        const double an = norm(a);
        if (an <= opts.alpha_min)
            throw Error("conformal-point", "|alpha| <= alpha_min: the map leaves the open set "
                                           "where the frame is defined");
        out.alpha.values[k] = a;
        out.beta.values[k] = b;
        out.phi.values[k] = std::asinh(0.5 * an);
        const Quaternion n_raw = f.values[k] * cross(a, b);
        Quaternion n = normalized(n_raw);
        if (det4_columns(f.values[k], fx.values[k], fy.values[k], n) < 0) n = -n;
        out.N.values[k] = n;
    }

    auto d_f1 = d_wirtinger(out.f1);
    out.mu = GridField<Complex>(g);
    for (std::size_t k = 0; k < f.values.size(); ++k)
        out.mu.values[k] = cdot(d_f1.values[k], CQuaternion(out.N.values[k]));

    return out;
}

FrameDerivatives fd_derivatives(const AdaptedFrameField& frame) {
    FrameDerivatives d;
    d.d_f1 = d_wirtinger(frame.f1);
    auto fxx = dxx_field(frame.f);
    auto fyy = dyy_field(frame.f);
    d.lap_f = GridField<Quaternion>(frame.grid);
    for (std::size_t k = 0; k < fxx.values.size(); ++k)
        d.lap_f.values[k] = fxx.values[k] + fyy.values[k];
    d.d_N = d_wirtinger(frame.N);
    d.d_phi = d_wirtinger(frame.phi);
    auto pxx = dxx_field(frame.phi);
    auto pyy = dyy_field(frame.phi);
    d.ddbar_phi = GridField<Complex>(frame.grid);
    for (std::size_t k = 0; k < pxx.values.size(); ++k)
        d.ddbar_phi.values[k] = Complex(0.25 * (pxx.values[k] + pyy.values[k]), 0.0);
    d.dbar_mu = dbar_wirtinger(frame.mu);
    d.alpha_x = dx_field(frame.alpha);
    d.alpha_y = dy_field(frame.alpha);
    d.beta_x = dx_field(frame.beta);
    d.beta_y = dy_field(frame.beta);
    return d;
}

ResidualReport verify_frame(const AdaptedFrameField& frame, int margin) {
    const Grid& g = frame.grid;
    const FrameDerivatives derivs = frame.derivs ? *frame.derivs : fd_derivatives(frame);

    ResidualReport rep;
    rep.grid = g;
    rep.margin = margin;

    GridField<double> on_sphere(g), beta_norm(g), axb_norm(g), ab_orth(g);
    GridField<Complex> adapted(g);
    GridField<CQuaternion> harmonic(g), mfeq_f(g), mfeq_f1(g), mfeq_fbar1(g), mfeq_N(g);
    GridField<Complex> gram_f_f(g), gram_f_f1(g), gram_f_fbar1(g), gram_f_N(g), gram_f1_f1(g),
        gram_f1_fbar1(g), gram_f1_N(g), gram_fbar1_fbar1(g), gram_fbar1_N(g), gram_N_N(g);
    GridField<Complex> compat_phi(g), compat_mu(g);
    GridField<ImQuaternion> rf_ax(g), rf_ay(g), rf_bx(g), rf_by(g);

    auto fx = frame.f_x();
    auto fy = frame.f_y();

    double min_det = std::numeric_limits<double>::infinity();
    double sup_mu = 0;

    for (std::size_t k = 0; k < g.size(); ++k) {
        const Quaternion& f = frame.f.values[k];
        const CQuaternion& f1 = frame.f1.values[k];
        const CQuaternion fb1 = bar(f1);
        const Quaternion& N = frame.N.values[k];
        const CQuaternion Nc(N);
        const CQuaternion fc(f);
        const ImQuaternion& a = frame.alpha.values[k];
        const ImQuaternion& b = frame.beta.values[k];
        const double phi = frame.phi.values[k];
        const Complex mu = frame.mu.values[k];
        sup_mu = std::max(sup_mu, std::abs(mu));

        const double ch2 = std::cosh(2 * phi), sh2 = std::sinh(2 * phi);
        const double csch2 = 1.0 / sh2, coth2 = ch2 / sh2;
        const double cth = 1.0 / std::tanh(phi), th = std::tanh(phi);

        on_sphere.values[k] = std::abs(norm(f) - 1.0);
        adapted.values[k] = cdot(f1, f1) + 1.0;

        harmonic.values[k] = CQuaternion(derivs.lap_f.values[k] * 0.25 + hnorm_sq(f1) * f);

        gram_f_f.values[k] = cdot(fc, fc) - 1.0;
        gram_f_f1.values[k] = cdot(fc, f1);
        gram_f_fbar1.values[k] = cdot(fc, fb1);
        gram_f_N.values[k] = cdot(fc, Nc);
        gram_f1_f1.values[k] = cdot(f1, f1) + 1.0;
        gram_f1_fbar1.values[k] = cdot(f1, fb1) - ch2;
        gram_f1_N.values[k] = cdot(f1, Nc);
        gram_fbar1_fbar1.values[k] = cdot(fb1, fb1) + 1.0;
        gram_fbar1_N.values[k] = cdot(fb1, Nc);
        gram_N_N.values[k] = cdot(Nc, Nc) - 1.0;

        // df = f1 in the form f1 = f (alpha - i beta) / 2 tying f1 to the tangency split
        mfeq_f.values[k] = f1 - 0.5 * (f * CImQuaternion(a, -b));

        const Complex dphi = derivs.d_phi.values[k];
        mfeq_f1.values[k] = derivs.d_f1.values[k] -
                            (fc + (2.0 * dphi) * (coth2 * f1 + csch2 * fb1) + mu * Nc);
        mfeq_fbar1.values[k] = CQuaternion(derivs.lap_f.values[k] * 0.25 + ch2 * f);
        mfeq_N.values[k] =
            derivs.d_N.values[k] + (mu * csch2) * (csch2 * f1 + coth2 * fb1);

        compat_phi.values[k] =
            2.0 * derivs.ddbar_phi.values[k] + sh2 - std::norm(mu) * csch2;
        compat_mu.values[k] =
            derivs.dbar_mu.values[k] + 2.0 * std::conj(mu) * dphi * csch2;

        const double phx = 2.0 * dphi.real(), phy = -2.0 * dphi.imag();
        const double mu1 = mu.real(), mu2 = mu.imag();
        const ImQuaternion axb = cross(a, b);
        rf_ax.values[k] = derivs.alpha_x.values[k] -
                          (phx * cth * a - phy * th * b + mu1 * csch2 * axb);
        rf_ay.values[k] = derivs.alpha_y.values[k] -
                          (phy * cth * a + phx * th * b + (1.0 - mu2 * csch2) * axb);
        rf_bx.values[k] = derivs.beta_x.values[k] -
                          (phy * cth * a + phx * th * b - (1.0 + mu2 * csch2) * axb);
        rf_by.values[k] = derivs.beta_y.values[k] -
                          (-phx * cth * a + phy * th * b - mu1 * csch2 * axb);

        ab_orth.values[k] = std::abs(dot(a, b));
        beta_norm.values[k] = std::abs(norm(b) - 2.0 * std::cosh(phi));
        axb_norm.values[k] = std::abs(norm(f * axb) - 2.0 * sh2);

        min_det = std::min(min_det, det4_columns(f, fx.values[k], fy.values[k], N));
    }

    rep.add("on_sphere", on_sphere);
    rep.add("adapted", adapted);
    rep.add("harmonic", harmonic);
    rep.add("gram_f_f", gram_f_f);
    rep.add("gram_f_f1", gram_f_f1);
    rep.add("gram_f_fbar1", gram_f_fbar1);
    rep.add("gram_f_N", gram_f_N);
    rep.add("gram_f1_f1", gram_f1_f1);
    rep.add("gram_f1_fbar1", gram_f1_fbar1);
    rep.add("gram_f1_N", gram_f1_N);
    rep.add("gram_fbar1_fbar1", gram_fbar1_fbar1);
    rep.add("gram_fbar1_N", gram_fbar1_N);
    rep.add("gram_N_N", gram_N_N);
    rep.add("mfeq_f", mfeq_f);
    rep.add("mfeq_f1", mfeq_f1);
    rep.add("mfeq_fbar1", mfeq_fbar1);
    rep.add("mfeq_N", mfeq_N);
    rep.add("compat_phi", compat_phi);
    rep.add("compat_mu", compat_mu);
    rep.add("realform_alpha_x", rf_ax);
    rep.add("realform_alpha_y", rf_ay);
    rep.add("realform_beta_x", rf_bx);
    rep.add("realform_beta_y", rf_by);
    rep.add("alpha_beta_orth", ab_orth);
    rep.add("beta_norm", beta_norm);
    rep.add("axb_norm", axb_norm);
    rep.add_value("orientation_min_det", min_det);
    rep.add_value("sup_mu", sup_mu);
    rep.add_value("invariant_variation", frame.invariant_variation());

    // With mu == 0 the phi compatibility equation is the sinh-Gordon equation.
    if (sup_mu < 1e-6) {
        GridField<Complex> sg(g);
        for (std::size_t k = 0; k < g.size(); ++k)
            sg.values[k] =
                2.0 * derivs.ddbar_phi.values[k] + std::sinh(2.0 * frame.phi.values[k]);
        rep.add("sinh_gordon", sg);
    }
    return rep;
}

double mu_realform_deviation(const AdaptedFrameField& frame) {
    auto fxx = dxx_field(frame.f);
    auto fyy = dyy_field(frame.f);
    auto fxy = dxy_field(frame.f);
    GridField<Complex> dev(frame.grid);
    for (std::size_t k = 0; k < dev.values.size(); ++k) {
        const Quaternion& N = frame.N.values[k];
        const double m1 = 0.25 * dot(fxx.values[k] - fyy.values[k], N);
        const double m2 = -0.5 * dot(fxy.values[k], N);
        dev.values[k] = frame.mu.values[k] - Complex(m1, m2);
    }
    return interior_sup_norm(dev, ResidualReport::interior_margin);
}

} // namespace s3h
