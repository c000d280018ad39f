#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>

#include "affine/core_algebra.hpp"
#include "affine/invariants.hpp"
#include "affine/moduli_map.hpp"
#include "affine/sampling.hpp"

using namespace affine;

namespace {

// independent oracle: crossings from the closed-form parameter solve of
// 4u^2 +- 4u + (2 - y) = 0 with u = t^2
RegionLabel solve_oracle(const PlanePoint& p) {
    int minus_right = 0, plus_left = 0;
    if (p.y >= 1.0) {
        const double r = std::sqrt(p.y - 1.0);
        for (const double u : {(1.0 + r) / 2.0, (1.0 - r) / 2.0})
            if (u > 1e-12 && 2.0 - 4.0 * u - 1.0 / u > p.x) ++minus_right;
        const double up = (-1.0 + r) / 2.0;
        if (up > 1e-12 && 2.0 + 4.0 * up + 1.0 / up < p.x) ++plus_left;
    }
    if (minus_right % 2 == 1) return RegionLabel::D20;
    if (plus_left % 2 == 1) return RegionLabel::D02;
    return RegionLabel::D11;
}

}  // namespace

TEST_CASE("sigma closed values") {
    const PlanePoint cusp = sigma(CurveSign::Minus, 1.0 / std::sqrt(2.0));
    CHECK(cusp.x == -2.0);  // exact with the factored evaluation order
    CHECK(cusp.y == 1.0);

    const PlanePoint p1 = sigma(CurveSign::Plus, 1.0);
    CHECK(p1.x == 7.0);
    CHECK(p1.y == 10.0);

    const PlanePoint p2 = sigma(CurveSign::Plus, 0.5);
    CHECK(p2.x == 7.0);
    CHECK(p2.y == 3.25);

    CHECK_THROWS_AS(sigma(CurveSign::Plus, 0.0), std::invalid_argument);
    CHECK_THROWS_AS(sigma(CurveSign::Minus, -1.0), std::invalid_argument);
}

TEST_CASE("sigma_- has a stationary point exactly at the cusp parameter") {
    const double tc = 1.0 / std::sqrt(2.0);
    const double xp = -8.0 * tc + 2.0 / (tc * tc * tc);
    const double yp = 16.0 * tc * tc * tc - 8.0 * tc;
    CHECK(std::abs(xp) < 1e-12);
    CHECK(std::abs(yp) < 1e-12);
    for (const double h : {1e-4, 1e-5}) {
        const PlanePoint f = sigma(CurveSign::Minus, tc + h);
        const PlanePoint b = sigma(CurveSign::Minus, tc - h);
        CHECK(std::abs((f.x - b.x) / (2 * h)) < 1e-3 * h / 1e-5);
        CHECK(std::abs((f.y - b.y) / (2 * h)) < 1e-3 * h / 1e-5);
    }
}

TEST_CASE("classification of landmark points") {
    CHECK(classify_point({-2.0, 1.0}) == RegionLabel::Cusp);
    CHECK(classify_point({-2.0 + 1e-10, 1.0}) == RegionLabel::Cusp);  // within tol
    CHECK(classify_point({0.0, 1e6}) == RegionLabel::D11);
    CHECK(classify_point({0.0, 0.0}) == RegionLabel::D11);
    CHECK(classify_point({-10.0, 5.0}) == RegionLabel::D20);
    CHECK(classify_point({-3.0, 1.5}) == RegionLabel::D20);
    CHECK(classify_point({20.0, 5.0}) == RegionLabel::D02);
    CHECK(classify_point({8.0, 4.0}) == RegionLabel::D02);
    // just below the cusp height everything is in the middle region
    CHECK(classify_point({-10.0, 0.5}) == RegionLabel::D11);
    // on-curve points with a loose tolerance pick up boundary labels
    CHECK(classify_point(sigma(CurveSign::Plus, 1.0), 1e-6) == RegionLabel::BoundarySigmaPlus);
    CHECK(classify_point(sigma(CurveSign::Minus, 1.3), 1e-6) == RegionLabel::BoundarySigmaMinus);
    const double nan = std::nan("");
    CHECK(classify_point({nan, 0.0}) == RegionLabel::Outside);
}

TEST_CASE("classifier agrees with the parameter-solve oracle") {
    Sampler s(401);
    for (int n = 0; n < 2000; ++n) {
        const PlanePoint p{s.uniform(-25, 25), s.uniform(-3, 30)};
        const RegionLabel got = classify_point(p, 1e-9);
        if (got == RegionLabel::BoundarySigmaMinus || got == RegionLabel::BoundarySigmaPlus ||
            got == RegionLabel::Cusp)
            continue;
        CHECK(got == solve_oracle(p));
    }
}

TEST_CASE("classification is stable under grid refinement") {
    Sampler s(402);
    for (int n = 0; n < 500; ++n) {
        const PlanePoint p{s.uniform(-10, 10), s.uniform(0, 10)};
        CHECK(classify_point(p, 1e-8, 2048) == classify_point(p, 1e-8, 20480));
    }
}

TEST_CASE("theta image lands in the region matching the signature") {
    Sampler s(403);
    struct Case {
        Signature sig;
        RegionLabel region;
    };
    for (const Case cs : {Case{{2, 0, false}, RegionLabel::D20},
                          Case{{1, 1, false}, RegionLabel::D11},
                          Case{{0, 2, false}, RegionLabel::D02}}) {
        for (int n = 0; n < 150; ++n) {
            const Christoffel g = random_christoffel_with_signature(s, true, cs.sig);
            const auto th = theta_invariants(g);
            const RegionLabel lb = classify_point({th.first, th.second}, 1e-6);
            const bool ok = lb == cs.region || lb == RegionLabel::BoundarySigmaMinus ||
                            lb == RegionLabel::BoundarySigmaPlus || lb == RegionLabel::Cusp;
            CHECK(ok);
        }
    }
}

TEST_CASE("emit_curve consistency with sigma") {
    const auto pts = emit_curve(CurveSign::Minus, 0.5, 0.9, 3);
    REQUIRE(pts.size() == 3);
    const PlanePoint lo = sigma(CurveSign::Minus, 0.5);
    const PlanePoint hi = sigma(CurveSign::Minus, 0.9);
    CHECK(pts.front().t == 0.5);
    CHECK(pts.front().x == lo.x);
    CHECK(pts.front().y == lo.y);
    CHECK(pts.back().t == 0.9);
    CHECK(pts.back().x == hi.x);
    CHECK(pts.back().y == hi.y);
    for (std::size_t i = 1; i < pts.size(); ++i) CHECK(pts[i].t > pts[i - 1].t);

    const auto many = emit_curve(CurveSign::Plus, 1.0, 2.0, 100);
    CHECK(many.size() == 100);
    for (const auto& p : many) CHECK(p.y >= 10.0);  // y is increasing, y(1) = 10

    CHECK_THROWS_AS(emit_curve(CurveSign::Plus, 0.0, 1.0, 10), std::invalid_argument);
    CHECK_THROWS_AS(emit_curve(CurveSign::Plus, 2.0, 1.0, 10), std::invalid_argument);
    CHECK_THROWS_AS(emit_curve(CurveSign::Plus, 1.0, 2.0, 1), std::invalid_argument);
}

TEST_CASE("region grid covers all three regions over the standard window") {
    const auto grid = region_grid({-10.0, 10.0, 0.0, 10.0}, 41);
    REQUIRE(grid.size() == 41u * 41u);
    bool d20 = false, d11 = false, d02 = false;
    for (const auto& p : grid) {
        d20 |= p.label == RegionLabel::D20;
        d11 |= p.label == RegionLabel::D11;
        d02 |= p.label == RegionLabel::D02;
    }
    CHECK(d20);
    CHECK(d11);
    CHECK(d02);

    // interior sample just above the cusp ray belongs to the left wedge
    CHECK(classify_point({-3.0, 1.5}) == RegionLabel::D20);

    // stability: doubling the resolution relabels no lattice point of the
    // coarse grid
    const auto fine = region_grid({-10.0, 10.0, 0.0, 10.0}, 81);
    for (int iy = 0; iy < 41; ++iy)
        for (int ix = 0; ix < 41; ++ix)
            CHECK(grid[iy * 41 + ix].label == fine[(2 * iy) * 81 + 2 * ix].label);

    CHECK_THROWS_AS(region_grid({0, 1, 0, 1}, 1), std::invalid_argument);
    CHECK_THROWS_AS(region_grid({1, 0, 0, 1}, 8), std::invalid_argument);
}

TEST_CASE("region label names") {
    CHECK(to_string(RegionLabel::D20) == "D20");
    CHECK(to_string(RegionLabel::BoundarySigmaMinus) == "BoundarySigmaMinus");
    CHECK(to_string(RegionLabel::Cusp) == "Cusp");
    CHECK(to_string(RegionLabel::Outside) == "Outside");
}
