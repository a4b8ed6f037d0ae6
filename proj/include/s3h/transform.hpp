#pragma once

#include <vector>

#include "s3h/frame.hpp"

namespace s3h {

enum class Eps : int { Plus = 1, Minus = -1 };

inline int sign(Eps e) { return static_cast<int>(e); }
inline Eps opposite(Eps e) { return e == Eps::Plus ? Eps::Minus : Eps::Plus; }

/// alpha^e, beta^e and alpha^e x beta^e expressed pointwise through the source
/// invariants (no differentiation of the transformed map involved).
struct TransformCoeffs {
    GridField<ImQuaternion> alpha_e, beta_e, axb_e;
};

struct TransformPair {
    AdaptedFrameField source;
    Eps eps = Eps::Plus;
    AdaptedFrameField result;         // frame of f^eps
    TransformCoeffs coeffs;
    ResidualReport checks;            // inner products, norms, formula agreement
};

struct TransformOptions {
    /// Tolerance for the agreement of the two closed forms of f^eps
    /// (< 0 selects 1e-9 for analytic input, 10 h^2 for sampled input).
    double formula_tol = -1;
};

TransformCoeffs transform_coeffs(const AdaptedFrameField& frame, Eps eps);

/// Apply the transform. f^eps is evaluated by both closed forms (the complex
/// frame expression and the quaternionic product form) and their agreement is
/// asserted. For sources with constant invariants and closed-form derivatives
/// the transformed frame again carries closed-form derivatives; otherwise it
/// is rebuilt from samples of f^eps by finite differences.
TransformPair eps_transform(const AdaptedFrameField& frame, Eps eps,
                            const TransformOptions& opts = {});

/// sup |(f^+)^- - f| and sup |(f^-)^+ - f|.
ResidualReport involution_check(const AdaptedFrameField& frame,
                                const TransformOptions& opts = {});

/// The maps f^p for p_min <= p <= p_max with f^0 = frame; index p - p_min.
std::vector<AdaptedFrameField> sequence(const AdaptedFrameField& frame, int p_min, int p_max,
                                        const TransformOptions& opts = {});

/// Residuals of the three relations tying (phi, mu) to (phi^e, mu^e).
ResidualReport phimu_relations(const TransformPair& pair);

} // namespace s3h
