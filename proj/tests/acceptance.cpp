// End-to-end acceptance run.  Each numbered check prints one [PASS]/[FAIL]
// line; the binary exits nonzero when any check fails.  Always-on: nothing
// here is compiled out in Release.

#include <chrono>
#include <cmath>
#include <complex>
#include <cstdlib>
#include <iostream>
#include <numbers>
#include <string>
#include <vector>

#include "affine/core_algebra.hpp"
#include "affine/fixed_points.hpp"
#include "affine/group_action.hpp"
#include "affine/invariants.hpp"
#include "affine/moduli_map.hpp"
#include "affine/orbifold.hpp"
#include "affine/sampling.hpp"

using namespace affine;
using Clock = std::chrono::steady_clock;

namespace {

int g_failures = 0;
Clock::time_point g_start;

void begin(const char* /*name*/) { g_start = Clock::now(); }

double elapsed_s() {
    return std::chrono::duration<double>(Clock::now() - g_start).count();
}

void report(const char* name, bool ok, const std::string& detail = "") {
    std::cout << (ok ? "[PASS] " : "[FAIL] ") << name;
    if (!detail.empty()) std::cout << "  (" << detail << ")";
    std::cout << "  [" << elapsed_s() << " s]\n";
    if (!ok) ++g_failures;
}

#define REQUIRE_OR_FAIL(cond, name, msg)            \
    do {                                            \
        if (!(cond)) {                              \
            report(name, false, msg);               \
            return;                                 \
        }                                           \
    } while (0)

constexpr double kPi = std::numbers::pi;

bool rho_full_rank(const Christoffel& g) {
    const BilinearForm2 r = ricci(g);
    const double n = r.max_abs();
    return std::abs(r.det()) > 1e-6 * n * n;
}

// 1. normalized exceptional structure: rho_s = diag(-1,-1), signature (2,0)
void criterion_1() {
    begin("1");
    const Christoffel g = (1.0 / std::sqrt(2.0)) * gamma0();
    const BilinearForm2 rs = ricci_symmetric(g);
    REQUIRE_OR_FAIL(std::abs(rs(0, 0) + 1.0) <= 1e-12 && std::abs(rs(1, 1) + 1.0) <= 1e-12 &&
                        std::abs(rs(0, 1)) <= 1e-12,
                    "1 normalized-exceptional-ricci", "rho_s misses diag(-1,-1)");
    REQUIRE_OR_FAIL((signature(rs) == Signature{2, 0, false}), "1 normalized-exceptional-ricci",
                    "signature is not (2,0)");
    report("1 normalized-exceptional-ricci", true);
}

// 2. cusp reproduction: theta(gamma0) = (-2,1), sigma_-(1/sqrt2) = (-2,1)
//    exactly, chi(gamma0) = 0
void criterion_2() {
    begin("2");
    const auto th = theta_invariants(gamma0());
    REQUIRE_OR_FAIL(std::abs(th.first + 2.0) <= 1e-12 && std::abs(th.second - 1.0) <= 1e-12,
                    "2 cusp-reproduction", "theta(gamma0) != (-2, 1)");
    const PlanePoint cusp = sigma(CurveSign::Minus, 1.0 / std::sqrt(2.0));
    REQUIRE_OR_FAIL(cusp.x == -2.0 && cusp.y == 1.0, "2 cusp-reproduction",
                    "sigma_-(1/sqrt 2) is not exactly (-2, 1)");
    REQUIRE_OR_FAIL(std::abs(chi(gamma0())) <= 1e-12, "2 cusp-reproduction",
                    "chi(gamma0) != 0");
    report("2 cusp-reproduction", true);
}

// 3. invariance: theta under GL and chi under GL+ drift < 1e-8 over 1000
//    seeded samples
void criterion_3() {
    begin("3");
    Sampler s(42);
    double worst = 0.0;
    for (int n = 0; n < 1000; ++n) {
        Christoffel g = random_christoffel(s, true);
        while (!rho_full_rank(g)) g = random_christoffel(s, true);
        const GroupElement h_full = random_group_element(s, false);
        const GroupElement h_plus = random_group_element(s, true);
        const auto t0 = theta_invariants(g);
        const auto t1 = theta_invariants(act(h_full, g));
        const double c0 = chi(g);
        const double c1 = chi(act(h_plus, g));
        const double drift = std::max(
            {std::abs(t1.first - t0.first) / std::max(1.0, std::abs(t0.first)),
             std::abs(t1.second - t0.second) / std::max(1.0, std::abs(t0.second)),
             std::abs(c1 - c0) / std::max(1.0, std::abs(c0))});
        worst = std::max(worst, drift);
        REQUIRE_OR_FAIL(drift < 1e-8, "3 invariance-suite",
                        "drift " + std::to_string(drift) + " at sample " + std::to_string(n));
    }
    const double t = elapsed_s();
    REQUIRE_OR_FAIL(t < 10.0, "3 invariance-suite", "runtime over 10 s");
    report("3 invariance-suite", true, "worst drift " + std::to_string(worst));
}

// 4. diagonal weight law, slot by slot, 1000 samples
void criterion_4() {
    begin("4");
    Sampler s(43);
    for (int n = 0; n < 1000; ++n) {
        const Christoffel g = random_christoffel(s, false);
        double a = s.uniform(0.5, 2.0);
        if (s.uniform(0, 1) < 0.5) a = -a;
        const Christoffel ga = act(GroupElement::diagonal(a, 1.0 / a), g);
        for (int i = 0; i < 2; ++i)
            for (int j = 0; j < 2; ++j)
                for (int k = 0; k < 2; ++k) {
                    const double want =
                        std::pow(a, weight_exponent(i + 1, j + 1, k + 1)) * g(i, j, k);
                    REQUIRE_OR_FAIL(
                        std::abs(ga(i, j, k) - want) <= 1e-12 * std::max(1.0, std::abs(want)),
                        "4 weight-law-suite", "slot mismatch at sample " + std::to_string(n));
                }
    }
    REQUIRE_OR_FAIL(elapsed_s() < 1.0, "4 weight-law-suite", "runtime over 1 s");
    report("4 weight-law-suite", true);
}

// 5. fixed-family Ricci closed form, exact on 10^4 integer tuples.
//    The closed form is diag(a(d-c), b(d-c)); the printed version of the
//    second entry in the source text has the factor reversed, which its own
//    general Ricci formula contradicts.
void criterion_5() {
    begin("5");
    Sampler s(44);
    for (int n = 0; n < 10000; ++n) {
        const FixedPointParams p{std::floor(s.uniform(-9, 10)), std::floor(s.uniform(-9, 10)),
                                 std::floor(s.uniform(-9, 10)), std::floor(s.uniform(-9, 10))};
        const BilinearForm2 got = ricci(fixed_family(p));
        const bool ok = got(0, 0) == p.a * (p.d - p.c) && got(1, 1) == p.b * (p.d - p.c) &&
                        got(0, 1) == 0.0 && got(1, 0) == 0.0;
        REQUIRE_OR_FAIL(ok, "5 fixed-family-ricci-oracle",
                        "mismatch at tuple " + std::to_string(n));
    }
    REQUIRE_OR_FAIL(elapsed_s() < 5.0, "5 fixed-family-ricci-oracle", "runtime over 5 s");
    report("5 fixed-family-ricci-oracle", true, "10000 integer tuples exact");
}

// 6. boundary component counts 1 / 2 / 1
void criterion_6() {
    begin("6");
    const int c02 = boundary_components(Signature{0, 2, false}).count;
    const int c11 = boundary_components(Signature{1, 1, false}).count;
    const int c20 = boundary_components(Signature{2, 0, false}).count;
    REQUIRE_OR_FAIL(c02 == 1 && c11 == 2 && c20 == 1, "6 boundary-components",
                    "got (" + std::to_string(c02) + "," + std::to_string(c11) + "," +
                        std::to_string(c20) + ") for (0,2)/(1,1)/(2,0)");
    report("6 boundary-components", true, "counts 1/2/1");
}

// 7. region-signature consistency: 500 samples per class, zero violations
void criterion_7() {
    begin("7");
    Sampler s(45);
    struct Case {
        Signature sig;
        RegionLabel region;
    };
    const Case cases[] = {{{2, 0, false}, RegionLabel::D20},
                          {{1, 1, false}, RegionLabel::D11},
                          {{0, 2, false}, RegionLabel::D02}};
    for (const Case& cs : cases) {
        for (int n = 0; n < 500; ++n) {
            Christoffel g = random_christoffel_with_signature(s, true, cs.sig);
            while (!rho_full_rank(g)) g = random_christoffel_with_signature(s, true, cs.sig);
            const auto th = theta_invariants(g);
            const RegionLabel lb = classify_point({th.first, th.second}, 1e-6);
            const bool ok = lb == cs.region || lb == RegionLabel::BoundarySigmaMinus ||
                            lb == RegionLabel::BoundarySigmaPlus || lb == RegionLabel::Cusp;
            REQUIRE_OR_FAIL(ok, "7 region-signature-consistency",
                            "sample of signature (" + std::to_string(cs.sig.p) + "," +
                                std::to_string(cs.sig.q) + ") landed in " + to_string(lb));
        }
    }
    const double t = elapsed_s();
    REQUIRE_OR_FAIL(t < 30.0, "7 region-signature-consistency", "runtime over 30 s");
    report("7 region-signature-consistency", true, "1500 samples, zero violations");
}

// 8. Z3 isotropy and slice equivariance, including the six S3 identities
void criterion_8() {
    begin("8");
    const GroupElement r = z3_rotation();
    REQUIRE_OR_FAIL(distance(act(r, gamma0()), gamma0()) <= 1e-14, "8 isotropy-and-orbifold",
                    "rotation by 2pi/3 does not fix gamma0 to 1e-14");
    const GroupElement r3 = r * r * r;
    double dev = 0.0;
    for (int i = 0; i < 2; ++i)
        for (int j = 0; j < 2; ++j)
            dev = std::max(dev, std::abs(r3(i, j) - (i == j ? 1.0 : 0.0)));
    REQUIRE_OR_FAIL(dev <= 1e-14, "8 isotropy-and-orbifold", "T_lambda^3 != id");

    Sampler s(46);
    const Complex lambda = std::polar(1.0, 2.0 * kPi / 3.0);
    const GroupElement C = conjugation_reflection();
    for (int n = 0; n < 1000; ++n) {
        const Complex a1{s.uniform(-2, 2), s.uniform(-2, 2)};
        const Complex a2{s.uniform(-2, 2), s.uniform(-2, 2)};
        REQUIRE_OR_FAIL(z3_equivariance_residual(a1, a2) < 1e-12, "8 isotropy-and-orbifold",
                        "Z3 equivariance residual over 1e-12");
        REQUIRE_OR_FAIL(conjugation_equivariance_residual(a1, a2) < 1e-12,
                        "8 isotropy-and-orbifold", "conjugation residual over 1e-12");
    }
    for (int n = 0; n < 50; ++n) {
        const Complex a1{s.uniform(-2, 2), s.uniform(-2, 2)};
        const Complex a2{s.uniform(-2, 2), s.uniform(-2, 2)};
        for (int j = 0; j < 3; ++j)
            for (int k = 0; k < 2; ++k) {
                GroupElement g = GroupElement::identity();
                for (int t = 0; t < j; ++t) g = r * g;
                if (k == 1) g = g * C;
                Complex b1 = a1, b2 = a2;
                if (k == 1) {
                    b1 = std::conj(b1);
                    b2 = std::conj(b2);
                }
                for (int t = 0; t < j; ++t) {
                    b1 *= lambda;
                    b2 *= lambda;
                }
                REQUIRE_OR_FAIL(distance(act(g, slice_W(a1, a2)), slice_W(b1, b2)) < 1e-12,
                                "8 isotropy-and-orbifold", "an S3 identity fails");
            }
    }
    const double t = elapsed_s();
    REQUIRE_OR_FAIL(t < 5.0, "8 isotropy-and-orbifold", "runtime over 5 s");
    report("8 isotropy-and-orbifold", true);
}

// 9. closed-form orbit tangents against central finite differences
void criterion_9() {
    begin("9");
    const Christoffel base = slice_base();
    auto curve = [&](Complex b1, Complex b2, double t) {
        return complexify(act(complex_group_element(1.0 + t * b1, t * b2), base));
    };
    Sampler s(47);
    std::vector<std::pair<Complex, Complex>> dirs = {
        {Complex(1, 0), Complex(0, 0)},
        {Complex(0, 1), Complex(0, 0)},
        {Complex(0, 0), Complex(1, 0)},
        {Complex(0, 0), Complex(0, 1)},
    };
    for (int n = 0; n < 30; ++n)
        dirs.push_back({Complex(s.uniform(-1, 1), s.uniform(-1, 1)),
                        Complex(s.uniform(-1, 1), s.uniform(-1, 1))});
    for (const auto& [b1, b2] : dirs) {
        const ComplexChristoffel want = orbit_tangent(b1, b2);
        auto fd_err = [&](double h) {
            const ComplexChristoffel f = curve(b1, b2, h);
            const ComplexChristoffel b = curve(b1, b2, -h);
            double e = 0.0;
            for (int slot = 0; slot < 4; ++slot)
                e = std::max(e, std::abs((f[slot] - b[slot]) / (2.0 * h) - want[slot]));
            return e;
        };
        const double e1 = fd_err(1e-3);
        const double e2 = fd_err(1e-4);
        REQUIRE_OR_FAIL(e1 < 1e-4, "9 tangent-vector-check", "finite difference far off");
        if (e2 > 1e-12) {
            const double order = std::log10(e1 / e2);
            REQUIRE_OR_FAIL(order >= 1.9, "9 tangent-vector-check",
                            "observed order " + std::to_string(order));
        }
    }
    REQUIRE_OR_FAIL(elapsed_s() < 1.0, "9 tangent-vector-check", "runtime over 1 s");
    report("9 tangent-vector-check", true);
}

// 10. orbit-equivalence round trips, invariant-separated rejections, and the
//     rank-8 transversality of the orbit-plus-slice tangent map
void criterion_10() {
    begin("10");
    Sampler s(48);
    for (int n = 0; n < 1000; ++n) {
        const Christoffel g = random_christoffel(s, false);
        const GroupElement h = random_group_element(s, true);
        const Christoffel g2 = act(h, g);
        const OrbitDecision d = orbit_equivalent(g, g2, GroupClass::GLPlus, 1e-8);
        REQUIRE_OR_FAIL(d.equivalent && d.witness.has_value() && d.residual < 1e-8,
                        "10 orbit-equivalence", "round trip failed at sample " +
                                                     std::to_string(n));
    }
    int rejected = 0;
    while (rejected < 200) {
        const Christoffel a = random_christoffel(s, true);
        const Christoffel b = random_christoffel(s, true);
        if (!rho_full_rank(a) || !rho_full_rank(b)) continue;
        if (!(signature(ricci_symmetric(a)) == signature(ricci_symmetric(b)))) continue;
        const auto ta = theta_invariants(a);
        const auto tb = theta_invariants(b);
        const double sep =
            std::max(std::abs(ta.first - tb.first) / std::max(1.0, std::abs(ta.first)),
                     std::abs(ta.second - tb.second) / std::max(1.0, std::abs(ta.second)));
        if (sep < 1e-3) continue;
        const OrbitDecision d = orbit_equivalent(a, b, GroupClass::GLPlus, 1e-8);
        REQUIRE_OR_FAIL(!d.equivalent, "10 orbit-equivalence",
                        "separated pair declared equivalent");
        ++rejected;
    }
    REQUIRE_OR_FAIL(orbit_slice_rank(1e-8) == 8, "10 orbit-equivalence",
                    "orbit-plus-slice tangent map is rank deficient");
    report("10 orbit-equivalence", true, "1000 round trips, 200 rejections, rank 8");
}

}  // namespace

int main() {
    std::cout << "acceptance run\n==============\n";
    criterion_1();
    criterion_2();
    criterion_3();
    criterion_4();
    criterion_5();
    criterion_6();
    criterion_7();
    criterion_8();
    criterion_9();
    criterion_10();
    std::cout << "==============\n";
    if (g_failures == 0) {
        std::cout << "all criteria passed\n";
        return EXIT_SUCCESS;
    }
    std::cout << g_failures << " criteria FAILED\n";
    return EXIT_FAILURE;
}
