#pragma once

#include <optional>

#include "s3h/frame.hpp"
#include "s3h/transform.hpp"

namespace s3h {

/// Surface X in R^3 with X_xx + X_yy = 2H X_x x X_y for a constant H.
/// When produced from a frame the exact partials X_x = -beta, X_y = alpha are
/// carried along; residual checks always differentiate X itself.
struct HSurfaceField {
    Grid grid;
    GridField<ImQuaternion> X;
    double H = -1.0;
    std::optional<GridField<ImQuaternion>> Xx, Xy;
};

/// Wente residual for the surface's own H, the holomorphic-differential field
/// <X_z, X_z> with its dbar residual, and the conformality margin min |<X_z,X_z>|.
ResidualReport verify_hsurface(const HSurfaceField& X);

/// <X_z,X_z> from finite differences of X.
GridField<Complex> holo_field(const HSurfaceField& X);

/// X with X_x = beta, X_y = -alpha, X(origin) = 0, H = -1 (trapezoidal
/// integration; the path-independence residual lands in the report).
HSurfaceField h_from_harmonic(const AdaptedFrameField& frame, ResidualReport* report = nullptr);

struct HarmonicFromHOptions {
    double wente_gate = -1;        // < 0: 10 h^2
    double conformal_tol = 1e-3;   // min |<X_z,X_z>| must exceed this
    int substeps = 2;
    BuildOptions build;
};

/// Inverse direction: read alpha = -X_y, beta = X_x off the surface, validate
/// the gates, and transport f through f_x = f alpha, f_y = f beta from the seed.
AdaptedFrameField harmonic_from_h(const HSurfaceField& X, const Quaternion& f0 = {1, 0, 0, 0},
                                  const HarmonicFromHOptions& opts = {});

/// X^e = X - sech^2(phi)/2 (eps X_x + X_x x X_y / 2), the surface whose
/// derivatives are beta^e and -alpha^e; phi is recomputed from
/// |X_y| = 2 sinh phi unless a field is supplied.
HSurfaceField h_eps_transform(const HSurfaceField& X, Eps eps,
                              const GridField<double>* phi = nullptr);

/// X -> lambda X, H -> H / lambda.
HSurfaceField dilate(const HSurfaceField& X, double lambda);

} // namespace s3h
