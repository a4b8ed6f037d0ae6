#include "s3h/family.hpp"

#include <cmath>

namespace s3h {

namespace {

constexpr double kPi = 3.14159265358979323846;

CliffordParams params_from_rs(double r, double s, double phi) {
    if (phi <= 0) throw Error("invalid-argument", "phi must be positive");
    if (std::abs(r * s) < 1e-14) throw Error("invalid-argument", "r and s must be non-zero");
    double arg = (s * s - r * r) * std::cosh(2 * phi);
    if (std::abs(arg) > 1.0 + 1e-12)
        throw Error("theta-undefined", "(s^2 - r^2) cosh 2phi = " + std::to_string(arg) +
                                           " lies outside [-1, 1]; no torus with these constants");
    arg = std::clamp(arg, -1.0, 1.0);  // the boundary cases are real mu
    CliffordParams p;
    p.r = r;
    p.s = s;
    p.phi = phi;
    p.theta = 0.5 * std::acos(arg);
    p.a = 2.0 / r * std::sinh(phi) * std::cos(p.theta);
    p.b = -2.0 / r * std::cosh(phi) * std::sin(p.theta);
    p.c = 2.0 / s * std::sinh(phi) * std::sin(p.theta);
    p.d = 2.0 / s * std::cosh(phi) * std::cos(p.theta);
    const double rr_ss = r * r - s * s;
    const double sh2 = std::sinh(2 * phi);
    // at the real-mu boundary the discriminant is a roundoff residue whose
    // square root would inject a ~1e-8 spurious imaginary part
    double disc = 1.0 - rr_ss * rr_ss * std::cosh(2 * phi) * std::cosh(2 * phi);
    if (std::abs(disc) < 1e-13) disc = 0.0;
    p.mu = sh2 / (2 * r * s) * Complex(rr_ss * sh2, -std::sqrt(std::max(0.0, disc)));
    p.tau = std::arg(p.mu);
    return p;
}

} // namespace

CliffordParams clifford_params(double r, double phi) {
    if (!(r > 0 && r < 1)) throw Error("invalid-argument", "r must lie in (0, 1)");
    return params_from_rs(r, std::sqrt(1 - r * r), phi);
}

CliffordParams clifford_params_from_mu(double phi, double tau) {
    if (phi <= 0) throw Error("invalid-argument", "phi must be positive");
    const double sh2 = std::sinh(2 * phi);
    const Complex target = sh2 * Complex(std::cos(tau), std::sin(tau));
    // arccot on (0, pi)
    const double rho0 = 0.5 * (kPi / 2 - std::atan(std::cos(tau) / sh2));
    for (int k = 0; k < 4; ++k) {
        const double rho = rho0 + k * kPi / 2;
        const double r = std::cos(rho), s = std::sin(rho);
        if (std::abs(r * s) < 1e-12) continue;
        CliffordParams p = params_from_rs(r, s, phi);
        if (std::abs(p.mu - target) <= 1e-10 * (1.0 + std::abs(target))) {
            p.tau = tau;
            p.k = k;
            return p;
        }
    }
    throw Error("internal", "no branch of rho reproduces the requested mu");
}

Quaternion CliffordMap::value(double x, double y) const {
    const double u = p_.a * x + p_.b * y, v = p_.c * x + p_.d * y;
    return {p_.r * std::cos(u), p_.r * std::sin(u), p_.s * std::cos(v), p_.s * std::sin(v)};
}

Quaternion CliffordMap::d_x(double x, double y) const {
    const double u = p_.a * x + p_.b * y, v = p_.c * x + p_.d * y;
    return {-p_.a * p_.r * std::sin(u), p_.a * p_.r * std::cos(u), -p_.c * p_.s * std::sin(v),
            p_.c * p_.s * std::cos(v)};
}

Quaternion CliffordMap::d_y(double x, double y) const {
    const double u = p_.a * x + p_.b * y, v = p_.c * x + p_.d * y;
    return {-p_.b * p_.r * std::sin(u), p_.b * p_.r * std::cos(u), -p_.d * p_.s * std::sin(v),
            p_.d * p_.s * std::cos(v)};
}

namespace {

// second partials scale the two circle blocks by -k_u and -k_v
Quaternion second_partial(const CliffordParams& p, double ku, double kv, double x, double y) {
    const double u = p.a * x + p.b * y, v = p.c * x + p.d * y;
    return {-ku * p.r * std::cos(u), -ku * p.r * std::sin(u), -kv * p.s * std::cos(v),
            -kv * p.s * std::sin(v)};
}

} // namespace

Quaternion CliffordMap::d_xx(double x, double y) const {
    return second_partial(p_, p_.a * p_.a, p_.c * p_.c, x, y);
}

Quaternion CliffordMap::d_xy(double x, double y) const {
    return second_partial(p_, p_.a * p_.b, p_.c * p_.d, x, y);
}

Quaternion CliffordMap::d_yy(double x, double y) const {
    return second_partial(p_, p_.b * p_.b, p_.d * p_.d, x, y);
}

Quaternion CliffordMap::normal(double x, double y) const {
    const double u = p_.a * x + p_.b * y, v = p_.c * x + p_.d * y;
    return {p_.s * std::cos(u), p_.s * std::sin(u), -p_.r * std::cos(v), -p_.r * std::sin(v)};
}

Quaternion CliffordMap::normal_x(double x, double y) const {
    const double u = p_.a * x + p_.b * y, v = p_.c * x + p_.d * y;
    return {-p_.a * p_.s * std::sin(u), p_.a * p_.s * std::cos(u), p_.c * p_.r * std::sin(v),
            -p_.c * p_.r * std::cos(v)};
}

Quaternion CliffordMap::normal_y(double x, double y) const {
    const double u = p_.a * x + p_.b * y, v = p_.c * x + p_.d * y;
    return {-p_.b * p_.s * std::sin(u), p_.b * p_.s * std::cos(u), p_.d * p_.r * std::sin(v),
            -p_.d * p_.r * std::cos(v)};
}

GridField<Quaternion> CliffordMap::sample(const Grid& g) const {
    return GridField<Quaternion>::generate(g, [&](double x, double y) { return value(x, y); });
}

AdaptedFrameField CliffordMap::sample_frame(const Grid& g) const {
    AdaptedFrameField out;
    out.grid = g;
    out.f = GridField<Quaternion>(g);
    out.f1 = GridField<CQuaternion>(g);
    out.alpha = GridField<ImQuaternion>(g);
    out.beta = GridField<ImQuaternion>(g);
    out.phi = GridField<double>(g);
    out.N = GridField<Quaternion>(g);
    out.mu = GridField<Complex>(g);
    out.analytic = true;

    FrameDerivatives d;
    d.d_f1 = GridField<CQuaternion>(g);
    d.lap_f = GridField<Quaternion>(g);
    d.d_N = GridField<CQuaternion>(g);
    d.d_phi = GridField<Complex>(g, Complex(0, 0));
    d.ddbar_phi = GridField<Complex>(g, Complex(0, 0));
    d.dbar_mu = GridField<Complex>(g, Complex(0, 0));
    d.alpha_x = GridField<ImQuaternion>(g);
    d.alpha_y = GridField<ImQuaternion>(g);
    d.beta_x = GridField<ImQuaternion>(g);
    d.beta_y = GridField<ImQuaternion>(g);

    for (int j = 0; j < g.ny; ++j) {
        for (int i = 0; i < g.nx; ++i) {
            const double x = g.x(i), y = g.y(j);
            const std::size_t k = g.index(i, j);
            const Quaternion f = value(x, y);
            const Quaternion fx = d_x(x, y), fy = d_y(x, y);
            const Quaternion fxx = d_xx(x, y), fxy = d_xy(x, y), fyy = d_yy(x, y);
            const Quaternion fs = star(f);
            const ImQuaternion alpha = im_part(fs * fx);
            const ImQuaternion beta = im_part(fs * fy);
            const Quaternion N = normal(x, y);

            out.f.values[k] = f;
            out.f1.values[k] = CQuaternion(fx * 0.5, fy * -0.5);
            out.alpha.values[k] = alpha;
            out.beta.values[k] = beta;
            out.phi.values[k] = std::asinh(0.5 * norm(alpha));
            out.N.values[k] = N;

            const CQuaternion df1(0.25 * (fxx - fyy), -0.5 * fxy);
            d.d_f1.values[k] = df1;
            d.lap_f.values[k] = fxx + fyy;
            d.d_N.values[k] = CQuaternion(normal_x(x, y) * 0.5, normal_y(x, y) * -0.5);
            d.alpha_x.values[k] = im_part(star(fx) * fx + fs * fxx);
            d.alpha_y.values[k] = im_part(star(fy) * fx + fs * fxy);
            d.beta_x.values[k] = im_part(star(fx) * fy + fs * fxy);
            d.beta_y.values[k] = im_part(star(fy) * fy + fs * fyy);

            out.mu.values[k] = cdot(df1, CQuaternion(N));
        }
    }
    out.derivs = std::move(d);
    return out;
}

SinhGordonProfile::SinhGordonProfile(double phi0, double dphi0, double x_min, double x_max,
                                     int nx, double phi_min)
    : phi0_(phi0), dphi0_(dphi0), x_min_(x_min), x_max_(x_max) {
    if (phi0 <= 0) throw Error("invalid-argument", "phi0 must be positive");
    if (!(x_max > x_min)) throw Error("invalid-argument", "empty x range");
    if (nx < 3) throw Error("grid-too-small", "profile needs nx >= 3");

    dense_h_ = (x_max - x_min) / (static_cast<double>(nx - 1) * 8.0);
    const double left = std::min(0.0, x_min) - 2 * dense_h_;
    const double right = std::max(0.0, x_max) + 2 * dense_h_;
    const int i0 = static_cast<int>(std::ceil((0.0 - left) / dense_h_));
    const int n = i0 + static_cast<int>(std::ceil((right - 0.0) / dense_h_)) + 1;
    dense_x0_ = -i0 * dense_h_;
    phi_.assign(n, 0.0);
    dphi_.assign(n, 0.0);

    auto rhs = [](double p, double dp, double& out_p, double& out_dp) {
        out_p = dp;
        out_dp = -2.0 * std::sinh(2.0 * p);
    };
    auto rk4_step = [&](double& p, double& dp, double h) {
        double k1p, k1d, k2p, k2d, k3p, k3d, k4p, k4d;
        rhs(p, dp, k1p, k1d);
        rhs(p + 0.5 * h * k1p, dp + 0.5 * h * k1d, k2p, k2d);
        rhs(p + 0.5 * h * k2p, dp + 0.5 * h * k2d, k3p, k3d);
        rhs(p + h * k3p, dp + h * k3d, k4p, k4d);
        p += h / 6.0 * (k1p + 2 * k2p + 2 * k3p + k4p);
        dp += h / 6.0 * (k1d + 2 * k2d + 2 * k3d + k4d);
    };

    phi_[i0] = phi0;
    dphi_[i0] = dphi0;
    double p = phi0, dp = dphi0;
    for (int i = i0 + 1; i < n; ++i) {
        rk4_step(p, dp, dense_h_);
        phi_[i] = p;
        dphi_[i] = dp;
    }
    p = phi0;
    dp = dphi0;
    for (int i = i0 - 1; i >= 0; --i) {
        rk4_step(p, dp, -dense_h_);
        phi_[i] = p;
        dphi_[i] = dp;
    }

    const double E0 = energy();
    for (int i = 0; i < n; ++i) {
        const double x = dense_x0_ + i * dense_h_;
        if (x >= x_min - dense_h_ && x <= x_max + dense_h_) {
            if (phi_[i] < phi_min)
                throw Error("profile-hits-zero",
                            "phi drops to " + std::to_string(phi_[i]) + " near x = " +
                                std::to_string(x) + "; shrink the range to one positivity window");
            energy_drift_ = std::max(
                energy_drift_, std::abs(0.5 * dphi_[i] * dphi_[i] + std::cosh(2 * phi_[i]) - E0));
        }
    }
}

double SinhGordonProfile::phi_at(double x) const {
    const double u = (x - dense_x0_) / dense_h_;
    int i = static_cast<int>(std::floor(u));
    i = std::clamp(i, 0, static_cast<int>(phi_.size()) - 2);
    const double t = u - i, h = dense_h_;
    const double h00 = (1 + 2 * t) * (1 - t) * (1 - t), h10 = t * (1 - t) * (1 - t);
    const double h01 = t * t * (3 - 2 * t), h11 = t * t * (t - 1);
    return h00 * phi_[i] + h10 * h * dphi_[i] + h01 * phi_[i + 1] + h11 * h * dphi_[i + 1];
}

double SinhGordonProfile::dphi_at(double x) const {
    const double u = (x - dense_x0_) / dense_h_;
    int i = static_cast<int>(std::floor(u));
    i = std::clamp(i, 0, static_cast<int>(phi_.size()) - 2);
    const double t = u - i, h = dense_h_;
    const double dd0 = -2.0 * std::sinh(2.0 * phi_[i]);
    const double dd1 = -2.0 * std::sinh(2.0 * phi_[i + 1]);
    const double h00 = (1 + 2 * t) * (1 - t) * (1 - t), h10 = t * (1 - t) * (1 - t);
    const double h01 = t * t * (3 - 2 * t), h11 = t * t * (t - 1);
    return h00 * dphi_[i] + h10 * h * dd0 + h01 * dphi_[i + 1] + h11 * h * dd1;
}

GridField<double> SinhGordonProfile::sample(const Grid& g, bool along_y) const {
    return GridField<double>::generate(
        g, [&](double x, double y) { return phi_at(along_y ? y : x); });
}

SinhGordonProfile sinh_gordon_profile(double phi0, double dphi0, double x_min, double x_max,
                                      int nx, double phi_min) {
    return SinhGordonProfile(phi0, dphi0, x_min, x_max, nx, phi_min);
}

} // namespace s3h
