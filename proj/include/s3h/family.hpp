#pragma once

#include "s3h/frame.hpp"

namespace s3h {

/// Constants of the doubly periodic torus family
///   f(x,y) = (r cos(ax+by), r sin(ax+by), s cos(cx+dy), s sin(cx+dy)),
/// the maps with constant phi and mu.
struct CliffordParams {
    double r = 0, s = 0;
    double phi = 0, theta = 0;
    double a = 0, b = 0, c = 0, d = 0;
    Complex mu;
    double tau = 0;   // phase of mu when constructed from one
    int k = 0;        // branch index of the rho solution
};

/// Solve the angle and frequency constants from (r, phi). Requires 0 < r < 1
/// and |(s^2 - r^2) cosh 2phi| <= 1; otherwise throws "theta-undefined".
CliffordParams clifford_params(double r, double phi);

/// Inverse construction: given phi > 0 and a phase tau, find (r, s) so that
/// mu = sinh(2 phi) e^{i tau}. Always solvable; the branch index k is the
/// smallest non-negative one whose round trip reproduces mu.
CliffordParams clifford_params_from_mu(double phi, double tau);

/// The exact torus map with closed-form partials of every order used here.
class CliffordMap {
public:
    explicit CliffordMap(const CliffordParams& p) : p_(p) {}

    const CliffordParams& params() const { return p_; }

    Quaternion value(double x, double y) const;
    Quaternion d_x(double x, double y) const;
    Quaternion d_y(double x, double y) const;
    Quaternion d_xx(double x, double y) const;
    Quaternion d_xy(double x, double y) const;
    Quaternion d_yy(double x, double y) const;
    Quaternion normal(double x, double y) const;
    Quaternion normal_x(double x, double y) const;
    Quaternion normal_y(double x, double y) const;

    /// Sample the map and its frame on a grid with exact derivative fields.
    AdaptedFrameField sample_frame(const Grid& g) const;

    GridField<Quaternion> sample(const Grid& g) const;

private:
    CliffordParams p_;
};

inline CliffordMap clifford_map(const CliffordParams& p) { return CliffordMap(p); }

/// One-dimensional sinh-Gordon profile: phi'' = -2 sinh(2 phi), anchored at
/// x = 0 with phi(0) = phi0, phi'(0) = dphi0, integrated by RK4 on a dense
/// subgrid. Conserves E = phi'^2 / 2 + cosh 2phi.
class SinhGordonProfile {
public:
    SinhGordonProfile(double phi0, double dphi0, double x_min, double x_max, int nx,
                      double phi_min = 1e-3);

    double phi_at(double x) const;
    double dphi_at(double x) const;
    double energy() const { return 0.5 * dphi0_ * dphi0_ + std::cosh(2 * phi0_); }
    double energy_drift() const { return energy_drift_; }
    double x_min() const { return x_min_; }
    double x_max() const { return x_max_; }

    /// phi(x) extended constantly in y (or phi(y) when along_y is set).
    GridField<double> sample(const Grid& g, bool along_y = false) const;

private:
    double phi0_, dphi0_, x_min_, x_max_;
    double dense_h_;
    double dense_x0_;                    // left end of the dense table
    std::vector<double> phi_, dphi_;     // dense nodes, spacing dense_h_
    double energy_drift_ = 0;
};

SinhGordonProfile sinh_gordon_profile(double phi0, double dphi0, double x_min, double x_max,
                                      int nx, double phi_min = 1e-3);

} // namespace s3h
