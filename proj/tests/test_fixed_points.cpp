#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>

#include "affine/core_algebra.hpp"
#include "affine/fixed_points.hpp"
#include "affine/group_action.hpp"
#include "affine/sampling.hpp"

using namespace affine;

TEST_CASE("reflection basics") {
    const GroupElement T = reflection_T();
    CHECK(T(0, 0) == -1.0);
    CHECK(T(1, 1) == 1.0);
    CHECK(T.det() == -1.0);
    const GroupElement T2 = T * T;
    CHECK(T2(0, 0) == 1.0);
    CHECK(T2(0, 1) == 0.0);
    CHECK(T2(1, 0) == 0.0);
    CHECK(T2(1, 1) == 1.0);
}

TEST_CASE("fixed family pattern and T-fixedness") {
    const Christoffel g = fixed_family({1.0, 0.0, 0.0, 1.0});
    int nonzero = 0;
    for (int i = 0; i < 2; ++i)
        for (int j = 0; j < 2; ++j)
            for (int k = 0; k < 2; ++k)
                if (g(i, j, k) != 0.0) ++nonzero;
    CHECK(nonzero == 2);

    Sampler s(501);
    for (int n = 0; n < 500; ++n) {
        const FixedPointParams p{s.uniform(-4, 4), s.uniform(-4, 4), s.uniform(-4, 4),
                                 s.uniform(-4, 4)};
        const Christoffel f = fixed_family(p);
        CHECK(distance(act(reflection_T(), f), f) == 0.0);
        // torsion-free exactly when the two middle slots agree
        CHECK(f.torsion_free(0.0) == (p.b == p.c));
    }
}

TEST_CASE("closed-form Ricci of the family, exact on integer tuples") {
    Sampler s(502);
    for (int n = 0; n < 10000; ++n) {
        const FixedPointParams p{std::floor(s.uniform(-9, 10)), std::floor(s.uniform(-9, 10)),
                                 std::floor(s.uniform(-9, 10)), std::floor(s.uniform(-9, 10))};
        const BilinearForm2 got = ricci(fixed_family(p));
        CHECK(got(0, 0) == p.a * (p.d - p.c));
        CHECK(got(1, 1) == p.b * (p.d - p.c));
        CHECK(got(0, 1) == 0.0);
        CHECK(got(1, 0) == 0.0);
        const BilinearForm2 closed = fixed_family_ricci(p);
        CHECK(got(0, 0) == closed(0, 0));
        CHECK(got(1, 1) == closed(1, 1));
    }
}

TEST_CASE("structure group membership") {
    CHECK(g0_member(GroupElement::diagonal(2.0, 3.0)));
    CHECK(g0_member(GroupElement::diagonal(-1.0, -2.0)));  // det = 2 > 0
    CHECK_FALSE(g0_member(GroupElement::diagonal(-1.0, 2.0)));
    CHECK_FALSE(g0_member(GroupElement::rotation(std::numbers::pi / 4)));
}

TEST_CASE("structure group preserves the fixed pattern") {
    Sampler s(503);
    for (int n = 0; n < 300; ++n) {
        const FixedPointParams p{s.uniform(-3, 3), s.uniform(-3, 3), s.uniform(-3, 3),
                                 s.uniform(-3, 3)};
        double d1 = s.uniform(0.3, 2.0), d2 = s.uniform(0.3, 2.0);
        if (s.uniform(0, 1) < 0.5) {
            d1 = -d1;
            d2 = -d2;
        }
        const Christoffel moved = act(GroupElement::diagonal(d1, d2), fixed_family(p));
        CHECK(moved(0, 0, 0) == 0.0);
        CHECK(moved(0, 1, 1) == 0.0);
        CHECK(moved(1, 0, 1) == 0.0);
        CHECK(moved(1, 1, 0) == 0.0);
    }
}

TEST_CASE("twisted action intertwines through the reflection") {
    Sampler s(504);
    const GroupElement T = reflection_T();
    for (int n = 0; n < 300; ++n) {
        const Christoffel g = random_christoffel(s, false);
        const GroupElement h = random_group_element(s, true);
        const Christoffel lhs = act(T, act(h, g));
        const Christoffel rhs = act(T * h * T.inverse(), act(T, g));
        CHECK(distance(lhs, rhs) < 1e-12 * std::max(1.0, rhs.max_abs()));
    }
}

TEST_CASE("boundary component counts") {
    const BoundaryComponents pos = boundary_components(Signature{0, 2, false});
    CHECK(pos.count == 1);
    REQUIRE(pos.patterns.size() == 2);
    // positive definite forces a, b and d-b to share one sign
    for (const SignPattern& p : pos.patterns) {
        CHECK(p.sign_a == p.sign_b);
        CHECK(p.sign_a == p.sign_d_minus_b);
    }

    const BoundaryComponents ind = boundary_components(Signature{1, 1, false});
    CHECK(ind.count == 2);
    CHECK(ind.patterns.size() == 4);
    for (const SignPattern& p : ind.patterns) CHECK(p.sign_a != p.sign_b);

    const BoundaryComponents neg = boundary_components(Signature{2, 0, false});
    CHECK(neg.count == 1);
    CHECK(neg.patterns.size() == 2);

    CHECK_THROWS_AS(boundary_components(Signature{0, 0, true}), std::invalid_argument);
}

TEST_CASE("orthant census is exhaustive and matches direct signatures") {
    // every orthant representative lands in the class the census assigned
    int total = 0;
    for (const Signature sig :
         {Signature{2, 0, false}, Signature{1, 1, false}, Signature{0, 2, false}}) {
        const BoundaryComponents bc = boundary_components(sig);
        total += static_cast<int>(bc.patterns.size());
        for (const SignPattern& p : bc.patterns) {
            const double b = p.sign_b * 1.0;
            const double d = b + p.sign_d_minus_b * 1.0;
            const Christoffel g = fixed_family({p.sign_a * 1.0, b, b, d});
            CHECK(signature(ricci_symmetric(g)) == sig);
        }
    }
    CHECK(total == 8);
}

TEST_CASE("pattern rendering") {
    const BoundaryComponents pos = boundary_components(Signature{0, 2, false});
    CHECK(to_string(pos.patterns.front()) == "a>0, b>0, d>b");
}
