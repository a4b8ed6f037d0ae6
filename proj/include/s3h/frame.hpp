#pragma once

#include <optional>

#include "s3h/grid.hpp"
#include "s3h/residual.hpp"

namespace s3h {

/// Derivative fields a frame verification needs beyond the frame itself.
/// Generators with closed-form partials fill these exactly; otherwise they
/// come from finite differences of the sampled fields.
struct FrameDerivatives {
    GridField<CQuaternion> d_f1;       // d(f1)/dz
    GridField<Quaternion> lap_f;       // f_xx + f_yy; d(fbar1)/dz = lap_f / 4
    GridField<CQuaternion> d_N;        // dN/dz
    GridField<Complex> d_phi;          // dphi/dz
    GridField<Complex> ddbar_phi;      // d dbar phi
    GridField<Complex> dbar_mu;        // dbar mu
    GridField<ImQuaternion> alpha_x, alpha_y, beta_x, beta_y;
};

/// Moving frame {f, f1, fbar1, N} of a non-conformal harmonic map sampled in an
/// adapted coordinate, with the invariants alpha, beta, phi, mu.
/// Immutable after construction.
struct AdaptedFrameField {
    Grid grid;
    GridField<Quaternion> f;           // unit vectors in S^3
    GridField<CQuaternion> f1;         // df/dz
    GridField<ImQuaternion> alpha;     // f_x = f alpha
    GridField<ImQuaternion> beta;      // f_y = f beta
    GridField<double> phi;             // |alpha| = 2 sinh phi
    GridField<Quaternion> N;           // unit normal, {f, f_x, f_y, N} positive
    GridField<Complex> mu;             // <d f1, N>

    bool analytic = false;             // derivatives from closed forms
    std::optional<FrameDerivatives> derivs;
    double alpha_min = 1e-8;

    GridField<Quaternion> f_x() const;
    GridField<Quaternion> f_y() const;

    /// Max deviation of phi and mu from their values at the origin.
    double invariant_variation() const;
};

struct BuildOptions {
    double sphere_tol = 1e-9;
    double adapted_tol = -1;           // < 0: use 10 h^2
    double alpha_min = 1e-8;
};

/// Extract the adapted frame from samples of the map alone, differentiating by
/// second-order stencils. Throws "not-on-sphere", "not-adapted" or
/// "conformal-point" when the preconditions fail.
AdaptedFrameField build_frame(const GridField<Quaternion>& f, const BuildOptions& opts = {});

/// Finite-difference derivative bundle for a frame (used when no closed forms
/// are attached).
FrameDerivatives fd_derivatives(const AdaptedFrameField& frame);

/// Every pointwise identity of the moving frame as an interior/boundary sup:
/// harmonicity, adaptedness, the ten Gram entries, the four dz moving-frame
/// equations, both compatibility equations, and the four real-form equations
/// for alpha_x .. beta_y. When mu vanishes within tolerance the sinh-Gordon
/// reduction is reported as well. `margin` widens the interior ring for data
/// that already went through finite-difference stages.
ResidualReport verify_frame(const AdaptedFrameField& frame,
                            int margin = ResidualReport::interior_margin);

/// Independent extraction of mu from second-difference stencils on f:
/// mu1 = <f_xx - f_yy, N>/4, mu2 = -<f_xy, N>/2. Returns the interior sup of
/// the deviation from the stored mu field.
double mu_realform_deviation(const AdaptedFrameField& frame);

} // namespace s3h
