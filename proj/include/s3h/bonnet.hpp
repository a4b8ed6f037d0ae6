#pragma once

#include <functional>
#include <optional>

#include "s3h/family.hpp"
#include "s3h/frame.hpp"

namespace s3h {

/// Inputs of the frame-integration problem: fields phi > 0 and mu on a grid,
/// evaluable at arbitrary points (closed forms where available, local cubic
/// interpolation for sampled data), plus the compatibility residuals of the
/// sampled fields. Integration refuses to run above the compatibility gate.
struct BonnetData {
    Grid grid;
    std::function<double(double, double)> phi;
    std::function<double(double, double)> phi_x;
    std::function<double(double, double)> phi_y;
    std::function<Complex(double, double)> mu;
    GridField<double> phi_field;
    GridField<Complex> mu_field;
    double compat_phi_residual = 0;
    double compat_mu_residual = 0;
};

BonnetData bonnet_constant(const Grid& g, double phi0, Complex mu0);
BonnetData bonnet_from_profile(const Grid& g, const SinhGordonProfile& profile,
                               bool along_y = false);
BonnetData bonnet_from_fields(const GridField<double>& phi, const GridField<Complex>& mu);

struct FrameSeed {
    Quaternion f{1, 0, 0, 0};
    ImQuaternion alpha;
    ImQuaternion beta;
};

/// Canonical admissible seed at the grid origin: f = 1, alpha = 2 sinh(phi0) e1,
/// beta = 2 cosh(phi0) e2.
FrameSeed default_seed(const BonnetData& data);

struct IntegrateOptions {
    double compat_gate = 1e-4;
    int substeps = 4;              // RK4 sub-intervals per grid cell
    bool column_first = false;     // integrate the first column, then rows
    double drift_limit = 1e-3;     // pre-renormalization |f| drift triggering abort
    double seed_tol = 1e-8;
    bool build = true;             // also extract the frame from the samples
};

struct Reconstruction {
    GridField<Quaternion> f;
    std::optional<AdaptedFrameField> frame;
    double max_renorm_drift = 0;   // max | |f| - 1 | before projection per step
    double max_orth_drift = 0;     // max |<alpha, beta>| before projection
};

/// Integrate f_x = f alpha, f_y = f beta together with the first-order system
/// for alpha and beta by RK4 along the first row, then up the columns.
Reconstruction integrate_frame(const BonnetData& data, const FrameSeed& seed,
                               const IntegrateOptions& opts = {});

/// sup |f_row-first - f_column-first| of the two reconstructions.
double path_independence_check(const BonnetData& data, const FrameSeed& seed,
                               IntegrateOptions opts = {});

} // namespace s3h
