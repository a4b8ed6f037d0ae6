#pragma once

#include <random>

#include "s3h/bonnet.hpp"
#include "s3h/family.hpp"

namespace s3h::test {

inline std::mt19937_64& rng() {
    static std::mt19937_64 gen(0x5eed5eed);
    return gen;
}

inline double uniform(double lo, double hi) {
    return std::uniform_real_distribution<double>(lo, hi)(rng());
}

inline Quaternion random_quaternion(double scale = 1.0) {
    return {uniform(-scale, scale), uniform(-scale, scale), uniform(-scale, scale),
            uniform(-scale, scale)};
}

inline Quaternion random_unit_quaternion() {
    Quaternion q = random_quaternion();
    while (norm(q) < 1e-3) q = random_quaternion();
    return normalized(q);
}

inline ImQuaternion random_imquaternion(double scale = 1.0) {
    return {uniform(-scale, scale), uniform(-scale, scale), uniform(-scale, scale)};
}

inline AdaptedFrameField clifford_frame(double r, double phi, const Grid& g) {
    return CliffordMap(clifford_params(r, phi)).sample_frame(g);
}

/// Great-2-sphere scenario: reconstruct the mu = 0 map of a 1-D profile.
inline Reconstruction sinh_gordon_reconstruction(double phi0, double x0, double x1, int nx,
                                                 int ny, double y1, bool along_y = false) {
    const Grid g = along_y ? Grid::over(0.0, y1, x0, x1, ny, nx)
                           : Grid::over(x0, x1, 0.0, y1, nx, ny);
    const auto profile = sinh_gordon_profile(phi0, 0.0, x0, x1, nx);
    const BonnetData data = bonnet_from_profile(g, profile, along_y);
    return integrate_frame(data, default_seed(data));
}

} // namespace s3h::test
