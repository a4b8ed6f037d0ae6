#include "s3h/bonnet.hpp"

#include <cmath>

namespace s3h {

namespace {

void fill_compat_residuals(BonnetData& d) {
    const Grid& g = d.grid;
    auto pxx = dxx_field(d.phi_field);
    auto pyy = dyy_field(d.phi_field);
    auto dphi = d_wirtinger(d.phi_field);
    auto dbmu = dbar_wirtinger(d.mu_field);
    GridField<double> c1(g);
    GridField<Complex> c2(g);
    for (std::size_t k = 0; k < g.size(); ++k) {
        const double phi = d.phi_field.values[k];
        const Complex mu = d.mu_field.values[k];
        const double sh2 = std::sinh(2 * phi);
        c1.values[k] = std::abs(0.5 * (pxx.values[k] + pyy.values[k]) + sh2 - std::norm(mu) / sh2);
        c2.values[k] = dbmu.values[k] + 2.0 * std::conj(mu) * dphi.values[k] / sh2;
    }
    d.compat_phi_residual = interior_sup_norm(c1, ResidualReport::interior_margin);
    d.compat_mu_residual = interior_sup_norm(c2, ResidualReport::interior_margin);
}

} // namespace

BonnetData bonnet_constant(const Grid& g, double phi0, Complex mu0) {
    if (phi0 <= 0) throw Error("invalid-argument", "phi must be positive");
    BonnetData d;
    d.grid = g;
    d.phi = [phi0](double, double) { return phi0; };
    d.phi_x = [](double, double) { return 0.0; };
    d.phi_y = [](double, double) { return 0.0; };
    d.mu = [mu0](double, double) { return mu0; };
    d.phi_field = GridField<double>(g, phi0);
    d.mu_field = GridField<Complex>(g, mu0);
    fill_compat_residuals(d);
    return d;
}

BonnetData bonnet_from_profile(const Grid& g, const SinhGordonProfile& profile, bool along_y) {
    BonnetData d;
    d.grid = g;
    if (along_y) {
        d.phi = [profile](double, double y) { return profile.phi_at(y); };
        d.phi_x = [](double, double) { return 0.0; };
        d.phi_y = [profile](double, double y) { return profile.dphi_at(y); };
    } else {
        d.phi = [profile](double x, double) { return profile.phi_at(x); };
        d.phi_x = [profile](double x, double) { return profile.dphi_at(x); };
        d.phi_y = [](double, double) { return 0.0; };
    }
    d.mu = [](double, double) { return Complex(0, 0); };
    d.phi_field = profile.sample(g, along_y);
    d.mu_field = GridField<Complex>(g, Complex(0, 0));
    fill_compat_residuals(d);
    return d;
}

BonnetData bonnet_from_fields(const GridField<double>& phi, const GridField<Complex>& mu) {
    if (!mu.grid.same_as(phi.grid)) throw Error("grid-mismatch", "phi and mu grids differ");
    for (double p : phi.values)
        if (p <= 0) throw Error("invalid-argument", "phi must be positive everywhere");
    BonnetData d;
    d.grid = phi.grid;
    auto phix = dx_field(phi);
    auto phiy = dy_field(phi);
    d.phi = [phi](double x, double y) { return interp_bicubic(phi, x, y); };
    d.phi_x = [phix](double x, double y) { return interp_bicubic(phix, x, y); };
    d.phi_y = [phiy](double x, double y) { return interp_bicubic(phiy, x, y); };
    d.mu = [mu](double x, double y) { return interp_bicubic(mu, x, y); };
    d.phi_field = phi;
    d.mu_field = mu;
    fill_compat_residuals(d);
    return d;
}

FrameSeed default_seed(const BonnetData& data) {
    const double phi0 = data.phi(data.grid.x0, data.grid.y0);
    FrameSeed s;
    s.f = {1, 0, 0, 0};
    s.alpha = 2.0 * std::sinh(phi0) * ImQuaternion::e1();
    s.beta = 2.0 * std::cosh(phi0) * ImQuaternion::e2();
    return s;
}

namespace {

struct State {
    Quaternion f;
    ImQuaternion a, b;

    State operator+(const State& o) const { return {f + o.f, a + o.a, b + o.b}; }
    State operator*(double s) const { return {f * s, a * s, b * s}; }
};

class Integrator {
public:
    Integrator(const BonnetData& d, const IntegrateOptions& o) : d_(d), o_(o) {}

    double max_renorm_drift = 0;
    double max_orth_drift = 0;

    State rhs(const State& s, double x, double y, bool x_dir) const {
        const double phi = d_.phi(x, y);
        const double phx = d_.phi_x(x, y), phy = d_.phi_y(x, y);
        const Complex mu = d_.mu(x, y);
        const double mu1 = mu.real(), mu2 = mu.imag();
        const double cth = 1.0 / std::tanh(phi), th = std::tanh(phi);
        const double csch2 = 1.0 / std::sinh(2 * phi);
        const ImQuaternion axb = cross(s.a, s.b);
        State out;
        if (x_dir) {
            out.f = s.f * s.a;
            out.a = phx * cth * s.a - phy * th * s.b + mu1 * csch2 * axb;
            out.b = phy * cth * s.a + phx * th * s.b - (1.0 + mu2 * csch2) * axb;
        } else {
            out.f = s.f * s.b;
            out.a = phy * cth * s.a + phx * th * s.b + (1.0 - mu2 * csch2) * axb;
            out.b = -phx * cth * s.a + phy * th * s.b - mu1 * csch2 * axb;
        }
        return out;
    }

    /// One grid step (with substeps) in the given direction, with projection
    /// back onto the constraint set after every substep.
    State step(State s, double x, double y, double h, bool x_dir) {
        const int n = std::max(1, o_.substeps);
        const double hh = h / n;
        for (int m = 0; m < n; ++m) {
            const double cx = x_dir ? x + m * hh : x;
            const double cy = x_dir ? y : y + m * hh;
            const State k1 = rhs(s, cx, cy, x_dir);
            const State k2 = rhs(s + k1 * (0.5 * hh), x_dir ? cx + 0.5 * hh : cx,
                                 x_dir ? cy : cy + 0.5 * hh, x_dir);
            const State k3 = rhs(s + k2 * (0.5 * hh), x_dir ? cx + 0.5 * hh : cx,
                                 x_dir ? cy : cy + 0.5 * hh, x_dir);
            const State k4 =
                rhs(s + k3 * hh, x_dir ? cx + hh : cx, x_dir ? cy : cy + hh, x_dir);
            s = s + (k1 + k2 * 2.0 + k3 * 2.0 + k4) * (hh / 6.0);
            project(s, x_dir ? cx + hh : cx, x_dir ? cy : cy + hh);
        }
        return s;
    }

    void project(State& s, double x, double y) {
        const double drift = std::abs(norm(s.f) - 1.0);
        max_renorm_drift = std::max(max_renorm_drift, drift);
        if (drift > o_.drift_limit)
            throw Error("renormalization-overflow",
                        "|f| drifted by " + std::to_string(drift) + "; reduce the step size");
        s.f = normalized(s.f);
        const double orth = std::abs(dot(s.a, s.b));
        max_orth_drift = std::max(max_orth_drift, orth);
        if (orth > 1e-10) s.b -= (dot(s.a, s.b) / norm_sq(s.a)) * s.a;
        const double phi = d_.phi(x, y);
        s.a = s.a * (2.0 * std::sinh(phi) / norm(s.a));
        s.b = s.b * (2.0 * std::cosh(phi) / norm(s.b));
    }

private:
    const BonnetData& d_;
    const IntegrateOptions& o_;
};

GridField<Quaternion> integrate_grid(const BonnetData& data, const FrameSeed& seed,
                                     const IntegrateOptions& opts, Integrator& integ) {
    const Grid& g = data.grid;
    GridField<Quaternion> out(g);
    State origin{seed.f, seed.alpha, seed.beta};

    if (!opts.column_first) {
        std::vector<State> row(g.nx);
        row[0] = origin;
        for (int i = 1; i < g.nx; ++i)
            row[i] = integ.step(row[i - 1], g.x(i - 1), g.y0, g.hx, true);
        for (int i = 0; i < g.nx; ++i) {
            State s = row[i];
            out.at(i, 0) = s.f;
            for (int j = 1; j < g.ny; ++j) {
                s = integ.step(s, g.x(i), g.y(j - 1), g.hy, false);
                out.at(i, j) = s.f;
            }
        }
    } else {
        std::vector<State> col(g.ny);
        col[0] = origin;
        for (int j = 1; j < g.ny; ++j)
            col[j] = integ.step(col[j - 1], g.x0, g.y(j - 1), g.hy, false);
        for (int j = 0; j < g.ny; ++j) {
            State s = col[j];
            out.at(0, j) = s.f;
            for (int i = 1; i < g.nx; ++i) {
                s = integ.step(s, g.x(i - 1), g.y(j), g.hx, true);
                out.at(i, j) = s.f;
            }
        }
    }
    return out;
}

void check_seed(const BonnetData& data, const FrameSeed& seed, double tol) {
    const double phi0 = data.phi(data.grid.x0, data.grid.y0);
    if (std::abs(norm(seed.f) - 1.0) > tol ||
        std::abs(norm(seed.alpha) - 2.0 * std::sinh(phi0)) > tol ||
        std::abs(norm(seed.beta) - 2.0 * std::cosh(phi0)) > tol ||
        std::abs(dot(seed.alpha, seed.beta)) > tol)
        throw Error("seed-invalid",
                    "seed must satisfy |f| = 1, |alpha| = 2 sinh phi0, |beta| = 2 cosh phi0, "
                    "<alpha, beta> = 0");
}

} // namespace

Reconstruction integrate_frame(const BonnetData& data, const FrameSeed& seed,
                               const IntegrateOptions& opts) {
    check_seed(data, seed, opts.seed_tol);
    if (std::max(data.compat_phi_residual, data.compat_mu_residual) > opts.compat_gate)
        throw Error("compat-gate-failed",
                    "compatibility residuals (" + std::to_string(data.compat_phi_residual) + ", " +
                        std::to_string(data.compat_mu_residual) + ") exceed the gate " +
                        std::to_string(opts.compat_gate));

    Integrator integ(data, opts);
    Reconstruction rec;
    rec.f = integrate_grid(data, seed, opts, integ);
    rec.max_renorm_drift = integ.max_renorm_drift;
    rec.max_orth_drift = integ.max_orth_drift;
    if (opts.build) rec.frame = build_frame(rec.f);
    return rec;
}

double path_independence_check(const BonnetData& data, const FrameSeed& seed,
                               IntegrateOptions opts) {
    opts.build = false;
    opts.column_first = false;
    Integrator integ_r(data, opts);
    auto row_first = integrate_grid(data, seed, opts, integ_r);
    opts.column_first = true;
    Integrator integ_c(data, opts);
    auto col_first = integrate_grid(data, seed, opts, integ_c);
    check_seed(data, seed, opts.seed_tol);
    double diff = 0;
    for (std::size_t k = 0; k < row_first.values.size(); ++k)
        diff = std::max(diff, norm(row_first.values[k] - col_first.values[k]));
    return diff;
}

} // namespace s3h
