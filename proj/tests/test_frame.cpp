#include "doctest.h"

#include <cmath>

#include "helpers.hpp"
#include "s3h/frame.hpp"

using namespace s3h;
using s3h::test::clifford_frame;

TEST_CASE("frame from samples matches the exact invariants") {
    const Grid g = Grid::over(0, 1, 0, 1, 65, 65);
    const CliffordMap map(clifford_params(1.0 / std::sqrt(2.0), std::asinh(1.0)));
    const AdaptedFrameField fd = build_frame(map.sample(g));
    const double h2 = g.h_max() * g.h_max();

    GridField<double> phi_err(g), mu_err(g);
    for (std::size_t k = 0; k < g.size(); ++k) {
        phi_err.values[k] = std::abs(fd.phi.values[k] - std::asinh(1.0));
        mu_err.values[k] = std::abs(fd.mu.values[k] - Complex(0, -2 * std::sqrt(2.0)));
    }
    CHECK(interior_sup_norm(phi_err, 2) < 10 * h2);
    CHECK(interior_sup_norm(mu_err, 2) < 100 * h2);
    CHECK(mu_realform_deviation(fd) < 100 * h2);

    const ResidualReport rep = verify_frame(fd);
    CHECK(rep.interior("adapted") < 10 * h2);
    CHECK(rep.interior("harmonic") < 100 * h2);
    CHECK(rep.interior("compat_phi") < 200 * h2);
    CHECK(rep.values.at("orientation_min_det") > 0.0);
}

TEST_CASE("finite-difference residuals converge at second order") {
    auto harmonic_residual = [](int n) {
        const Grid g = Grid::over(0, 1, 0, 1, n, n);
        const CliffordMap map(clifford_params(0.6, 0.7));
        const ResidualReport rep = verify_frame(build_frame(map.sample(g)));
        return rep.interior("harmonic");
    };
    const double r1 = harmonic_residual(49), r2 = harmonic_residual(97);
    CHECK(r1 / r2 > 3.0);
    CHECK(r1 / r2 < 5.0);
}

TEST_CASE("build preconditions") {
    const Grid g = Grid::over(0, 1, 0, 1, 17, 17);
    const CliffordMap map(clifford_params(0.6, 0.7));

    SUBCASE("not on the sphere") {
        auto f = map.sample(g);
        for (auto& q : f.values) q = 1.1 * q;
        CHECK_THROWS_WITH_AS(build_frame(f), doctest::Contains("not-on-sphere"), Error);
    }
    SUBCASE("wrong coordinate normalization") {
        // sampling at half scale makes <f1,f1> = -1/4, not -1
        auto f = GridField<Quaternion>::generate(
            g, [&](double x, double y) { return map.value(0.5 * x, 0.5 * y); });
        CHECK_THROWS_WITH_AS(build_frame(f), doctest::Contains("not-adapted"), Error);
    }
    SUBCASE("conformal point threshold") {
        BuildOptions opts;
        opts.alpha_min = 10.0;  // above |alpha| = 2 sinh phi
        CHECK_THROWS_WITH_AS(build_frame(map.sample(g), opts),
                             doctest::Contains("conformal-point"), Error);
    }
}

TEST_CASE("a mu perturbation shows up linearly in the frame equation") {
    const Grid g = Grid::over(0, 1, 0, 1, 33, 33);
    AdaptedFrameField frame = clifford_frame(1.0 / std::sqrt(2.0), std::asinh(1.0), g);
    const double base = verify_frame(frame).interior("mfeq_f1");
    for (auto& m : frame.mu.values) m += 0.1;
    const double bumped = verify_frame(frame).interior("mfeq_f1");
    CHECK(bumped == doctest::Approx(0.1 + base).epsilon(1e-3));
}

TEST_CASE("constant phi with mu = 0 is reported against the sinh-Gordon reduction") {
    const Grid g = Grid::over(0, 1, 0, 1, 17, 17);
    AdaptedFrameField frame = clifford_frame(1.0 / std::sqrt(2.0), std::asinh(1.0), g);
    for (auto& m : frame.mu.values) m = 0.0;
    const ResidualReport rep = verify_frame(frame);
    // constants never solve the sinh-Gordon equation: residual = sinh 2phi
    CHECK(rep.interior("sinh_gordon") ==
          doctest::Approx(std::sinh(2 * std::asinh(1.0))).epsilon(1e-10));
}

TEST_CASE("analytic and finite-difference verification agree on the same map") {
    const Grid g = Grid::over(0, 1, 0, 1, 65, 65);
    const CliffordMap map(clifford_params(0.6, 0.7));
    const AdaptedFrameField exact = map.sample_frame(g);
    const AdaptedFrameField fd = build_frame(map.sample(g));
    GridField<double> dphi(g);
    GridField<Complex> dmu(g);
    for (std::size_t k = 0; k < g.size(); ++k) {
        dphi.values[k] = exact.phi.values[k] - fd.phi.values[k];
        dmu.values[k] = exact.mu.values[k] - fd.mu.values[k];
    }
    const double h2 = g.h_max() * g.h_max();
    CHECK(interior_sup_norm(dphi, 2) < 10 * h2);
    CHECK(interior_sup_norm(dmu, 2) < 100 * h2);
}
