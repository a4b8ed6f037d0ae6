#include "doctest.h"

#include <cmath>

#include "helpers.hpp"
#include "s3h/congruence.hpp"
#include "s3h/transform.hpp"

using namespace s3h;
using s3h::test::clifford_frame;
using s3h::test::sinh_gordon_reconstruction;

namespace {
const double kAsinh1 = std::asinh(1.0);
const double kInvSqrt2 = 1.0 / std::sqrt(2.0);
}

TEST_CASE("square torus transform keeps phi and mu") {
    const Grid g = Grid::over(0, 1, 0, 1, 33, 33);
    const AdaptedFrameField frame = clifford_frame(kInvSqrt2, kAsinh1, g);
    const TransformPair pair = eps_transform(frame, Eps::Plus);

    CHECK(pair.checks.values.at("formula_agreement") < 1e-12);
    for (std::size_t k = 0; k < g.size(); ++k) {
        CHECK(std::abs(pair.result.phi.values[k] - kAsinh1) < 1e-12);
        CHECK(std::abs(pair.result.mu.values[k] - frame.mu.values[k]) < 1e-10);
    }
    const ResidualReport rep = verify_frame(pair.result);
    for (const auto& [name, r] : rep.residuals) {
        INFO(name);
        CHECK(r.interior_sup < 1e-10);
    }
}

TEST_CASE("transform identities on a rectangular torus") {
    const Grid g = Grid::over(0, 1, 0, 1, 33, 33);
    const AdaptedFrameField frame = clifford_frame(0.6, 0.7, g);
    for (Eps eps : {Eps::Plus, Eps::Minus}) {
        const TransformPair pair = eps_transform(frame, eps);
        for (const auto& [name, r] : pair.checks.residuals) {
            INFO(name);
            CHECK(r.interior_sup < 1e-10);
        }
        const ResidualReport relations = phimu_relations(pair);
        CHECK(relations.interior("phimu1") < 1e-10);
        CHECK(relations.interior("phimu1b") < 1e-10);
        CHECK(relations.interior("phimu2") < 1e-10);
    }
}

TEST_CASE("transforms are mutual inverses") {
    const Grid g = Grid::over(0, 1, 0, 1, 33, 33);

    SUBCASE("closed forms") {
        const AdaptedFrameField frame = clifford_frame(0.6, 0.7, g);
        const ResidualReport rep = involution_check(frame);
        CHECK(rep.interior("involution_plus_minus") < 1e-9);
        CHECK(rep.interior("involution_minus_plus") < 1e-9);
    }

    SUBCASE("sampled input converges at second order") {
        auto residual = [](int n) {
            const Grid gg = Grid::over(0, 1, 0, 1, n, n);
            const CliffordMap map(clifford_params(0.6, 0.7));
            const AdaptedFrameField fd = build_frame(map.sample(gg));
            return involution_check(fd).interior("involution_plus_minus");
        };
        const double r1 = residual(49), r2 = residual(97);
        CHECK(r1 / r2 > 3.0);
        CHECK(r1 / r2 < 5.0);
    }
}

TEST_CASE("coefficients match derivatives of the transformed map") {
    // the consistency contract: (f^e)* dx f^e = alpha^e, (f^e)* dy f^e = beta^e
    auto coefficient_gap = [](const AdaptedFrameField& fd, Eps eps) {
        const TransformPair pair = eps_transform(fd, eps);
        auto fex = dx_field(pair.result.f);
        auto fey = dy_field(pair.result.f);
        GridField<ImQuaternion> ga(fd.grid), gb(fd.grid);
        for (std::size_t k = 0; k < fd.grid.size(); ++k) {
            const Quaternion fs = star(pair.result.f.values[k]);
            ga.values[k] = im_part(fs * fex.values[k]) - pair.coeffs.alpha_e.values[k];
            gb.values[k] = im_part(fs * fey.values[k]) - pair.coeffs.beta_e.values[k];
        }
        return std::max(interior_sup_norm(ga, 2), interior_sup_norm(gb, 2));
    };

    SUBCASE("torus data") {
        const Grid g = Grid::over(0, 1, 0, 1, 65, 65);
        const CliffordMap map(clifford_params(0.6, 0.7));
        const AdaptedFrameField fd = build_frame(map.sample(g));
        CHECK(coefficient_gap(fd, Eps::Plus) < 10 * g.h_max() * g.h_max());
        CHECK(coefficient_gap(fd, Eps::Minus) < 10 * g.h_max() * g.h_max());
    }
    SUBCASE("profile data, phi varying in x") {
        const auto rec = sinh_gordon_reconstruction(0.5, 0.05, 0.35, 97, 65, 0.2);
        const double h2 = rec.frame->grid.h_max() * rec.frame->grid.h_max();
        CHECK(coefficient_gap(*rec.frame, Eps::Plus) < 20 * h2);
    }
    SUBCASE("profile data, phi varying in y") {
        const auto rec = sinh_gordon_reconstruction(0.5, 0.05, 0.35, 97, 65, 0.2, true);
        const double h2 = rec.frame->grid.h_max() * rec.frame->grid.h_max();
        CHECK(coefficient_gap(*rec.frame, Eps::Plus) < 20 * h2);
        CHECK(coefficient_gap(*rec.frame, Eps::Minus) < 20 * h2);
    }
}

TEST_CASE("sequences") {
    const Grid g = Grid::over(0, 1, 0, 1, 17, 17);
    const AdaptedFrameField frame = clifford_frame(0.6, 0.7, g);

    SUBCASE("trivial range returns the input") {
        const auto seq = sequence(frame, 0, 0);
        REQUIRE(seq.size() == 1);
        for (std::size_t k = 0; k < g.size(); ++k)
            CHECK(norm(seq[0].f.values[k] - frame.f.values[k]) == 0.0);
    }
    SUBCASE("torus members stay pairwise congruent") {
        const auto seq = sequence(frame, -2, 2);
        REQUIRE(seq.size() == 5);
        for (std::size_t i = 0; i + 1 < seq.size(); ++i) {
            const O4Fit fit = procrustes_o4(seq[i].f, seq[i + 1].f);
            CHECK(fit.residual < 1e-6);
        }
    }
    SUBCASE("invalid range") {
        CHECK_THROWS_AS(sequence(frame, 1, 2), Error);
    }
}

TEST_CASE("degenerate transform is refused") {
    // mu = 0 with dphi != 0 brings phi^e under any generous threshold
    auto rec = sinh_gordon_reconstruction(0.5, 0.05, 0.35, 49, 33, 0.15);
    AdaptedFrameField frame = *rec.frame;
    frame.alpha_min = 1.0;
    CHECK_THROWS_WITH_AS(eps_transform(frame, Eps::Plus),
                         doctest::Contains("transform-degenerate"), Error);
}

TEST_CASE("phimu relations separate the constant and non-constant cases") {
    SUBCASE("constant phi: result equals source invariants") {
        const Grid g = Grid::over(0, 1, 0, 1, 25, 25);
        const AdaptedFrameField frame = clifford_frame(kInvSqrt2, kAsinh1, g);
        const TransformPair pair = eps_transform(frame, Eps::Plus);
        GridField<double> gap(g);
        for (std::size_t k = 0; k < g.size(); ++k)
            gap.values[k] = std::abs(pair.result.phi.values[k] - frame.phi.values[k]) +
                            std::abs(pair.result.mu.values[k] - frame.mu.values[k]);
        CHECK(sup_norm(gap) < 1e-10);
    }
    SUBCASE("non-constant phi: pretending f^e = f breaks the third relation") {
        auto rec = sinh_gordon_reconstruction(0.5, 0.05, 0.35, 65, 49, 0.2);
        TransformPair fake;
        fake.source = *rec.frame;
        fake.result = *rec.frame;
        fake.eps = Eps::Plus;
        const ResidualReport rep = phimu_relations(fake);
        // residual should sit near sup |4 dphi tanh phi| > 0
        auto dphi = d_wirtinger(rec.frame->phi);
        GridField<double> expected(rec.frame->grid);
        for (std::size_t k = 0; k < expected.values.size(); ++k)
            expected.values[k] = 4.0 * std::abs(dphi.values[k]) *
                                 std::tanh(rec.frame->phi.values[k]);
        const double target = interior_sup_norm(expected, 2);
        CHECK(rep.interior("phimu2") > 0.5 * target);
        CHECK(rep.interior("phimu2") > 0.01);
    }
    SUBCASE("transformed invariants differ on non-constant data") {
        auto rec = sinh_gordon_reconstruction(0.5, 0.05, 0.35, 65, 49, 0.2);
        const TransformPair pair = eps_transform(*rec.frame, Eps::Plus);
        GridField<double> gap(rec.frame->grid);
        for (std::size_t k = 0; k < gap.values.size(); ++k)
            gap.values[k] = std::abs(pair.result.phi.values[k] - pair.source.phi.values[k]);
        CHECK(interior_sup_norm(gap, 2) > 0.05);
    }
}
