#include "doctest.h"

#include <cmath>

#include "s3h/csv.hpp"
#include "s3h/grid.hpp"

using namespace s3h;

TEST_CASE("wirtinger derivatives on polynomials") {
    const Grid g = Grid::over(-1, 1, -1, 1, 21, 21);
    auto z = GridField<Complex>::generate(g, [](double x, double y) { return Complex(x, y); });
    auto dz = d_wirtinger(z);
    auto dbz = dbar_wirtinger(z);
    for (int j = 1; j < g.ny - 1; ++j)
        for (int i = 1; i < g.nx - 1; ++i) {
            CHECK(std::abs(dz.at(i, j) - 1.0) < 1e-13);
            CHECK(std::abs(dbz.at(i, j)) < 1e-13);
        }

    auto z2 = GridField<Complex>::generate(
        g, [](double x, double y) { return Complex(x, y) * Complex(x, y); });
    auto dz2 = d_wirtinger(z2);
    for (int j = 1; j < g.ny - 1; ++j)
        for (int i = 1; i < g.nx - 1; ++i)
            CHECK(std::abs(dz2.at(i, j) - 2.0 * Complex(g.x(i), g.y(j))) < 1e-12);
}

TEST_CASE("wirtinger second-order convergence") {
    auto residual = [](int n) {
        const Grid g = Grid::over(0, 1, 0, 1, n, n);
        auto f = GridField<double>::generate(g, [](double x, double) { return std::sin(3 * x); });
        auto d = d_wirtinger(f);
        GridField<Complex> err(g);
        for (int j = 0; j < g.ny; ++j)
            for (int i = 0; i < g.nx; ++i)
                err.at(i, j) = d.at(i, j) - 0.5 * 3 * std::cos(3 * g.x(i));
        return interior_sup_norm(err, 1);
    };
    const double r1 = residual(33), r2 = residual(65);
    CHECK(r1 / r2 > 3.5);
    CHECK(r1 / r2 < 4.5);
}

TEST_CASE("mixed derivatives commute and conjugate") {
    const Grid g = Grid::over(0, 1, 0, 1, 41, 41);
    auto f = GridField<double>::generate(
        g, [](double x, double y) { return std::sin(2 * x) * std::cos(y) + x * y; });
    auto a = d_wirtinger(dbar_wirtinger(f));
    auto b = dbar_wirtinger(d_wirtinger(f));
    GridField<Complex> diff(g);
    for (std::size_t k = 0; k < diff.values.size(); ++k)
        diff.values[k] = a.values[k] - b.values[k];
    CHECK(interior_sup_norm(diff, 2) < 1e-10);

    auto d = d_wirtinger(f);
    auto db = dbar_wirtinger(f);
    for (std::size_t k = 0; k < d.values.size(); ++k)
        CHECK(std::abs(db.values[k] - std::conj(d.values[k])) < 1e-14);
}

TEST_CASE("potential integration") {
    const Grid g = Grid::over(0.5, 1.5, -0.25, 0.75, 33, 29);

    SUBCASE("constant field") {
        GridField<double> px(g, 1.0), py(g, 0.0);
        auto res = integrate_potential(px, py, 0.0);
        CHECK(res.path_independence < 1e-14);
        for (int j = 0; j < g.ny; ++j)
            for (int i = 0; i < g.nx; ++i)
                CHECK(std::abs(res.field.at(i, j) - (g.x(i) - g.x0)) < 1e-13);
    }

    SUBCASE("non-integrable input reports the curl") {
        auto px = GridField<double>::generate(g, [](double, double y) { return y; });
        GridField<double> py(g, 0.0);
        auto res = integrate_potential(px, py, 0.0);
        const double area = (g.nx - 1) * g.hx * (g.ny - 1) * g.hy;
        CHECK(res.path_independence == doctest::Approx(area).epsilon(1e-10));
    }

    SUBCASE("round trip against derivatives") {
        auto px = GridField<double>::generate(
            g, [](double x, double y) { return std::cos(x) * std::cos(y); });
        auto py = GridField<double>::generate(
            g, [](double x, double y) { return -std::sin(x) * std::sin(y); });
        auto res = integrate_potential(px, py, std::sin(g.x0) * std::cos(g.y0));
        CHECK(res.path_independence < 5e-4);
        auto fx = dx_field(res.field);
        GridField<double> err(g);
        for (std::size_t k = 0; k < err.values.size(); ++k)
            err.values[k] = fx.values[k] - px.values[k];
        CHECK(interior_sup_norm(err, 2) < 10 * g.h_max() * g.h_max());
    }
}

TEST_CASE("norm helpers") {
    const Grid g = Grid::over(0, 1, 0, 1, 5, 5);
    GridField<double> f(g, 3.0);
    CHECK(sup_norm(f) == 3.0);
    f.at(0, 0) = 5.0;
    CHECK(sup_norm(f) == 5.0);
    CHECK(interior_sup_norm(f, 1) == 3.0);
    GridField<double> zero(g, 0.0);
    CHECK(sup_norm(zero) == 0.0);
}

TEST_CASE("grid validation") {
    CHECK_THROWS_WITH_AS(Grid::over(0, 1, 0, 1, 2, 5), doctest::Contains("grid-too-small"),
                         Error);
    CHECK_THROWS_AS(Grid(0, 0, -0.1, 0.1, 5, 5), Error);
}

TEST_CASE("bicubic interpolation reproduces cubics") {
    const Grid g = Grid::over(0, 1, 0, 1, 17, 17);
    auto f = GridField<double>::generate(
        g, [](double x, double y) { return x * x * x - 2 * x * y + y * y; });
    for (int t = 0; t < 50; ++t) {
        const double x = 0.15 + 0.7 * t / 50.0, y = 0.2 + 0.6 * (t * 7 % 50) / 50.0;
        const double exact = x * x * x - 2 * x * y + y * y;
        CHECK(std::abs(interp_bicubic(f, x, y) - exact) < 1e-12);
    }
}
