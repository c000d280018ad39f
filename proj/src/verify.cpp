#include "affine/verify.hpp"

#include <cmath>
#include <complex>
#include <functional>
#include <numbers>
#include <sstream>
#include <stdexcept>

#include "affine/core_algebra.hpp"
#include "affine/fixed_points.hpp"
#include "affine/group_action.hpp"
#include "affine/invariants.hpp"
#include "affine/moduli_map.hpp"
#include "affine/orbifold.hpp"
#include "affine/sampling.hpp"

namespace affine {

namespace {

constexpr double kPi = std::numbers::pi;

std::uint64_t fnv1a(const std::string& s) {
    std::uint64_t h = 1469598103934665603ull;
    for (const char c : s) {
        h ^= static_cast<unsigned char>(c);
        h *= 1099511628211ull;
    }
    return h;
}

std::string show(const Christoffel& g) {
    std::ostringstream os;
    os.precision(17);
    os << "[";
    for (int i = 0; i < 2; ++i)
        for (int j = 0; j < 2; ++j)
            for (int k = 0; k < 2; ++k)
                os << g(i, j, k) << ((i == 1 && j == 1 && k == 1) ? "]" : ", ");
    return os.str();
}

std::string show(const GroupElement& g) {
    std::ostringstream os;
    os.precision(17);
    os << "[[" << g(0, 0) << ", " << g(0, 1) << "], [" << g(1, 0) << ", " << g(1, 1) << "]]";
    return os.str();
}

// Integer-entry structure; small integer tensor algebra is exact in doubles.
Christoffel random_integer_christoffel(Sampler& s, bool torsion_free, int lo = -9,
                                       int hi = 9) {
    Christoffel g;
    auto draw = [&] { return std::floor(s.uniform(lo, hi + 1)); };
    for (int i = 0; i < 2; ++i)
        for (int j = 0; j < 2; ++j)
            for (int k = 0; k < 2; ++k) g(i, j, k) = draw();
    if (torsion_free) {
        g(1, 0, 0) = g(0, 1, 0);
        g(1, 0, 1) = g(0, 1, 1);
    }
    return g;
}

class Suite {
public:
    Suite(std::string name, int samples, std::uint64_t seed)
        : name_(std::move(name)), samples_(samples), seed_(seed) {}

    // Runs `body` with a property-local sampler; any thrown exception or call
    // to Check::fail marks the property failed with the falsifying detail.
    void property(const std::string& pname,
                  const std::function<void(Sampler&, struct Check&)>& body);

    std::vector<PropertyResult> take() { return std::move(results_); }

    int samples() const { return samples_; }

private:
    std::string name_;
    int samples_;
    std::uint64_t seed_;
    std::vector<PropertyResult> results_;
};

struct Check {
    bool ok = true;
    std::string detail;

    void fail(const std::string& d) {
        if (ok) {
            ok = false;
            detail = d;
        }
    }
    void require(bool cond, const std::string& d) {
        if (!cond) fail(d);
    }
    void note(const std::string& d) {
        if (ok && detail.empty()) detail = d;
    }
};

void Suite::property(const std::string& pname,
                     const std::function<void(Sampler&, Check&)>& body) {
    Sampler s(seed_ ^ fnv1a(name_ + "/" + pname));
    Check c;
    try {
        body(s, c);
    } catch (const std::exception& e) {
        c.fail(std::string("exception: ") + e.what());
    }
    results_.push_back({name_, pname, c.ok, c.detail});
}

double rel_err(double got, double want) {
    return std::abs(got - want) / std::max(1.0, std::abs(want));
}

// ---------------------------------------------------------------------------

std::vector<PropertyResult> suite_core(int samples, std::uint64_t seed) {
    Suite su("core", samples, seed);

    su.property("curvature-antisymmetry", [&](Sampler& s, Check& c) {
        for (int n = 0; n < su.samples(); ++n) {
            const Christoffel g = random_christoffel(s, false);
            const CurvatureTensor R = curvature(g);
            for (int i = 0; i < 2; ++i)
                for (int j = 0; j < 2; ++j)
                    for (int k = 0; k < 2; ++k)
                        for (int l = 0; l < 2; ++l)
                            if (R(i, j, k, l) != -R(j, i, k, l))
                                return c.fail("R not exactly antisymmetric at " + show(g));
        }
    });

    su.property("ricci-matches-curvature-contraction", [&](Sampler& s, Check& c) {
        for (int n = 0; n < su.samples(); ++n) {
            const Christoffel g = random_integer_christoffel(s, false);
            const BilinearForm2 rho = ricci(g);
            const CurvatureTensor R = curvature(g);
            for (int j = 0; j < 2; ++j)
                for (int k = 0; k < 2; ++k) {
                    const double tr = R(0, j, k, 0) + R(1, j, k, 1);
                    if (tr != rho(j, k))
                        return c.fail("trace path differs at integer sample " + show(g));
                }
        }
    });

    su.property("ricci-quadratic-homogeneity", [&](Sampler& s, Check& c) {
        for (int n = 0; n < su.samples(); ++n) {
            const Christoffel g = random_integer_christoffel(s, false, -5, 5);
            const double scl = std::floor(s.uniform(1.0, 4.0)) * (s.uniform(0, 1) < 0.5 ? -1 : 1);
            const BilinearForm2 lhs = ricci(scl * g);
            const BilinearForm2 rhs = ricci(g);
            for (int j = 0; j < 2; ++j)
                for (int k = 0; k < 2; ++k)
                    if (lhs(j, k) != scl * scl * rhs(j, k))
                        return c.fail("ricci(s*G) != s^2 ricci(G) at " + show(g));
        }
    });

    su.property("ricci-symmetric-exact", [&](Sampler& s, Check& c) {
        for (int n = 0; n < su.samples(); ++n) {
            const Christoffel g = random_christoffel(s, false);
            const BilinearForm2 rs = ricci_symmetric(g);
            if (rs(0, 1) != rs(1, 0)) return c.fail("rho_s not exactly symmetric");
            const BilinearForm2 rho = ricci(g);
            for (int j = 0; j < 2; ++j)
                for (int k = 0; k < 2; ++k)
                    if (std::abs(rs(j, k) - 0.5 * (rho(j, k) + rho(k, j))) > 1e-15)
                        return c.fail("rho_s != (rho + rho^T)/2 at " + show(g));
        }
    });

    su.property("signature-convention-and-sylvester", [&](Sampler& s, Check& c) {
        c.require(signature(BilinearForm2::diag(-1, -1)) == Signature{2, 0, false},
                  "diag(-1,-1) must have signature (2,0)");
        c.require(signature(BilinearForm2::diag(1, -1)) == Signature{1, 1, false},
                  "diag(1,-1) must have signature (1,1)");
        c.require(signature(BilinearForm2{{{{0, 1}, {1, 0}}}}) == Signature{1, 1, false},
                  "[[0,1],[1,0]] must have signature (1,1)");
        for (int n = 0; n < su.samples(); ++n) {
            const Christoffel g = random_christoffel(s, false);
            const BilinearForm2 b = ricci_symmetric(g);
            const GroupElement a = random_group_element(s, false);
            if (!(signature(congruence(a, b)) == signature(b)))
                return c.fail("signature not congruence-invariant at " + show(g));
        }
    });

    return su.take();
}

std::vector<PropertyResult> suite_action(int samples, std::uint64_t seed) {
    Suite su("action", samples, seed);

    su.property("act-identity", [&](Sampler& s, Check& c) {
        for (int n = 0; n < su.samples(); ++n) {
            const Christoffel g = random_christoffel(s, false);
            if (distance(act(GroupElement::identity(), g), g) != 0.0)
                return c.fail("act(id, G) != G at " + show(g));
        }
    });

    su.property("act-composition", [&](Sampler& s, Check& c) {
        for (int n = 0; n < su.samples(); ++n) {
            const Christoffel g = random_christoffel(s, false);
            const GroupElement g1 = random_group_element(s, false);
            const GroupElement g2 = random_group_element(s, false);
            const Christoffel lhs = act(g1, act(g2, g));
            const Christoffel rhs = act(g1 * g2, g);
            if (distance(lhs, rhs) > 1e-12 * std::max(1.0, rhs.max_abs()))
                return c.fail("composition law violated at " + show(g));
        }
    });

    su.property("ricci-naturality", [&](Sampler& s, Check& c) {
        for (int n = 0; n < su.samples(); ++n) {
            const Christoffel g = random_christoffel(s, false);
            const GroupElement h = random_group_element(s, false);
            const BilinearForm2 lhs = ricci(act(h, g));
            const BilinearForm2 rhs = congruence(h, ricci(g));
            if (distance(lhs, rhs) > 1e-12 * std::max(1.0, rhs.max_abs()))
                return c.fail("ricci(act(h,G)) != h rho h^T at " + show(g));
        }
    });

    su.property("torsion-free-preserved", [&](Sampler& s, Check& c) {
        for (int n = 0; n < su.samples(); ++n) {
            const Christoffel g = random_christoffel(s, true);
            const GroupElement h = random_group_element(s, false);
            if (!act(h, g).torsion_free(1e-12))
                return c.fail("action broke torsion-freeness at " + show(g));
        }
    });

    su.property("signature-act-invariant", [&](Sampler& s, Check& c) {
        for (int n = 0; n < su.samples(); ++n) {
            const Christoffel g = random_christoffel(s, false);
            const GroupElement h = random_group_element(s, false);
            if (!(signature(ricci_symmetric(act(h, g))) == signature(ricci_symmetric(g))))
                return c.fail("signature drifted under action at " + show(g));
        }
    });

    su.property("diagonal-weight-law", [&](Sampler& s, Check& c) {
        for (int n = 0; n < su.samples(); ++n) {
            const Christoffel g = random_christoffel(s, false);
            double a = s.uniform(0.5, 2.0);
            if (s.uniform(0, 1) < 0.5) a = -a;
            const Christoffel ga = act(GroupElement::diagonal(a, 1.0 / a), g);
            for (int i = 0; i < 2; ++i)
                for (int j = 0; j < 2; ++j)
                    for (int k = 0; k < 2; ++k) {
                        const int e = weight_exponent(i + 1, j + 1, k + 1);
                        const double want = std::pow(a, e) * g(i, j, k);
                        if (std::abs(ga(i, j, k) - want) > 1e-12 * std::max(1.0, std::abs(want)))
                            return c.fail("weight law violated at " + show(g));
                    }
        }
    });

    su.property("normalize-ricci-residual", [&](Sampler& s, Check& c) {
        double worst = 0.0;
        for (int n = 0; n < su.samples(); ++n) {
            const Christoffel g = random_christoffel(s, false);
            const Signature sig = signature(ricci_symmetric(g));
            const BilinearForm2 target = standard_form(sig);
            const GroupElement h = normalize_ricci(g, target);
            if (h.det() <= 0.0) return c.fail("normalizer left GL+ at " + show(g));
            const double res = distance(ricci_symmetric(act(h, g)), target);
            worst = std::max(worst, res);
            if (res > 1e-10) return c.fail("normalization residual " + std::to_string(res) +
                                           " at " + show(g));
        }
        std::ostringstream os;
        os << "worst residual " << worst;
        c.note(os.str());
    });

    su.property("orbit-roundtrip", [&](Sampler& s, Check& c) {
        for (int n = 0; n < su.samples(); ++n) {
            const Christoffel g = random_christoffel(s, false);
            const GroupElement h = random_group_element(s, true);
            const Christoffel g2 = act(h, g);
            const OrbitDecision d = orbit_equivalent(g, g2, GroupClass::GLPlus, 1e-8);
            if (!d.equivalent || d.residual > 1e-8)
                return c.fail("roundtrip not recovered at " + show(g) + " via " + show(h));
            const OrbitDecision back = orbit_equivalent(g2, g, GroupClass::GLPlus, 1e-8);
            if (!back.equivalent) return c.fail("roundtrip not symmetric at " + show(g));
        }
    });

    su.property("orbit-reflexive", [&](Sampler& s, Check& c) {
        for (int n = 0; n < std::max(1, su.samples() / 10); ++n) {
            const Christoffel g = random_christoffel(s, false);
            if (!orbit_equivalent(g, g).equivalent)
                return c.fail("structure not equivalent to itself at " + show(g));
        }
    });

    su.property("isotropy-on-exceptional-orbit", [&](Sampler& s, Check& c) {
        const int count = std::max(1, su.samples() / 20);
        for (int n = 0; n < count; ++n) {
            const Christoffel g = random_exceptional(s);
            const IsotropyResult r = isotropy_nontrivial(g, 1e-8);
            if (!r.nontrivial) return c.fail("missing Z3 isotropy at " + show(g));
            if (distance(act(*r.witness, g), g) > 1e-8 * g.max_abs())
                return c.fail("isotropy witness does not fix the structure");
        }
    });

    su.property("isotropy-trivial-off-orbit", [&](Sampler& s, Check& c) {
        const int per_class = std::max(1, su.samples() / 2);
        for (const Signature sig : {Signature{2, 0, false}, Signature{1, 1, false},
                                    Signature{0, 2, false}}) {
            for (int n = 0; n < per_class; ++n) {
                const Christoffel g = random_christoffel_with_signature(s, false, sig);
                if (isotropy_nontrivial(g, 1e-8).nontrivial)
                    return c.fail("unexpected isotropy at " + show(g));
            }
        }
    });

    su.property("exceptional-orbit-membership", [&](Sampler& s, Check& c) {
        c.require(in_exceptional_orbit(gamma0()), "gamma0 must lie on its own orbit");
        const int count = std::max(1, su.samples() / 10);
        for (int n = 0; n < count; ++n) {
            const Christoffel g = random_exceptional(s);
            if (!in_exceptional_orbit(g)) return c.fail("orbit point rejected: " + show(g));
        }
        for (int n = 0; n < count; ++n) {
            Christoffel g = random_christoffel(s, false);
            if (g.torsion_free(1e-9)) g(0, 1, 0) += 0.5;  // force torsion
            if (ricci_symmetric(g).det() == 0.0) continue;
            if (in_exceptional_orbit(g))
                return c.fail("structure with torsion accepted: " + show(g));
        }
    });

    return su.take();
}

std::vector<PropertyResult> suite_invariants(int samples, std::uint64_t seed) {
    Suite su("invariants", samples, seed);

    auto full_rank_rho = [](const Christoffel& g) {
        const BilinearForm2 r = ricci(g);
        const double n = r.max_abs();
        return std::abs(r.det()) > kDegeneracyTol * n * n;
    };

    su.property("scale-invariance", [&](Sampler& s, Check& c) {
        for (int n = 0; n < su.samples(); ++n) {
            const Christoffel g = random_christoffel(s, true);
            if (!full_rank_rho(g)) continue;
            double scl = s.uniform(0.2, 3.0);
            if (s.uniform(0, 1) < 0.5) scl = -scl;
            const InvariantVector a = xi_invariants(g);
            const InvariantVector b = xi_invariants(scl * g);
            if (rel_err(b.psi3, a.psi3) > 1e-10 || rel_err(b.Psi3, a.Psi3) > 1e-10 ||
                rel_err(b.chi, a.chi) > 1e-10)
                return c.fail("invariants not scale invariant at " + show(g));
        }
    });

    su.property("theta-full-group-invariance", [&](Sampler& s, Check& c) {
        double worst = 0.0;
        for (int n = 0; n < su.samples(); ++n) {
            const Christoffel g = random_christoffel(s, true);
            if (!full_rank_rho(g)) continue;
            const GroupElement h = random_group_element(s, false);
            const auto t0 = theta_invariants(g);
            const auto t1 = theta_invariants(act(h, g));
            const double drift = std::max(rel_err(t1.first, t0.first),
                                          rel_err(t1.second, t0.second));
            worst = std::max(worst, drift);
            if (drift > 1e-8)
                return c.fail("theta drift " + std::to_string(drift) + " at " + show(g) +
                              " via " + show(h));
        }
        std::ostringstream os;
        os << "worst drift " << worst;
        c.note(os.str());
    });

    su.property("chi-oriented-invariance", [&](Sampler& s, Check& c) {
        double worst = 0.0;
        for (int n = 0; n < su.samples(); ++n) {
            const Christoffel g = random_christoffel(s, true);
            if (!full_rank_rho(g)) continue;
            const GroupElement h = random_group_element(s, true);
            const double d = rel_err(chi(act(h, g)), chi(g));
            worst = std::max(worst, d);
            if (d > 1e-8)
                return c.fail("chi drift " + std::to_string(d) + " at " + show(g));
        }
        std::ostringstream os;
        os << "worst drift " << worst;
        c.note(os.str());
    });

    su.property("contraction-two-path", [&](Sampler& s, Check& c) {
        for (int n = 0; n < su.samples(); ++n) {
            const Christoffel g = random_christoffel(s, true);
            if (!full_rank_rho(g)) continue;
            // second path: Ricci from the curvature trace, inverse by adjugate,
            // contractions in transposed loop order
            const CurvatureTensor R = curvature(g);
            BilinearForm2 rho;
            for (int j = 0; j < 2; ++j)
                for (int k = 0; k < 2; ++k) rho(j, k) = R(0, j, k, 0) + R(1, j, k, 1);
            const double det = rho.det();
            BilinearForm2 inv;
            inv(0, 0) = rho(1, 1) / det;
            inv(1, 1) = rho(0, 0) / det;
            inv(0, 1) = -rho(0, 1) / det;
            inv(1, 0) = -rho(1, 0) / det;
            BilinearForm2 r3;
            for (int j = 1; j >= 0; --j)
                for (int i = 1; i >= 0; --i) {
                    double acc = 0.0;
                    for (int l = 0; l < 2; ++l)
                        for (int k = 0; k < 2; ++k) acc += g(i, k, l) * g(j, l, k);
                    r3(i, j) = acc;
                }
            double p_naive = 0.0;
            for (int j = 1; j >= 0; --j)
                for (int i = 1; i >= 0; --i) p_naive += inv(i, j) * r3(i, j);
            const double P_naive = r3.det() / det;
            double w0 = 0.0, w1 = 0.0;
            for (int k = 0; k < 2; ++k)
                for (int j = 0; j < 2; ++j)
                    for (int i = 0; i < 2; ++i) {
                        w0 += inv(i, j) * g(i, j, k) * r3(k, 0);
                        w1 += inv(i, j) * g(i, j, k) * r3(k, 1);
                    }
            const double v0 = g(0, 0, 0) + g(0, 1, 1);
            const double v1 = g(1, 0, 0) + g(1, 1, 1);
            const double chi_naive =
                (v0 * w1 - v1 * w0) * std::sqrt(std::abs(det)) / det;
            if (rel_err(psi3(g), p_naive) > 1e-12 || rel_err(Psi3(g), P_naive) > 1e-12 ||
                rel_err(chi(g), chi_naive) > 1e-12)
                return c.fail("two evaluation paths disagree at " + show(g));
        }
    });

    su.property("injectivity-evidence", [&](Sampler& s, Check& c) {
        const int per_class = std::max(2, su.samples() / 5);
        for (const Signature sig : {Signature{2, 0, false}, Signature{1, 1, false},
                                    Signature{0, 2, false}}) {
            Christoffel prev;
            bool have_prev = false;
            for (int n = 0; n < per_class; ++n) {
                const Christoffel g = random_christoffel_with_signature(s, true, sig);
                if (!full_rank_rho(g)) continue;
                if (have_prev) {
                    const OrbitDecision d = orbit_equivalent(prev, g, GroupClass::GL, 1e-8);
                    const auto ta = theta_invariants(prev);
                    const auto tb = theta_invariants(g);
                    const double sep =
                        std::max(rel_err(tb.first, ta.first), rel_err(tb.second, ta.second));
                    if (!d.equivalent && sep <= 1e-6)
                        return c.fail("inequivalent pair with matching theta at " + show(g));
                }
                prev = g;
                have_prev = true;
            }
        }
    });

    su.property("chi-orientation-behaviour", [&](Sampler& s, Check& c) {
        // informational: empirically chi appears to flip sign under
        // orientation-reversing changes; measured, not asserted
        double worst = 0.0;
        const int count = std::max(1, su.samples() / 10);
        for (int n = 0; n < count; ++n) {
            const Christoffel g = random_christoffel(s, true);
            if (!full_rank_rho(g)) continue;
            GroupElement h = random_group_element(s, false);
            if (h.det() > 0) std::swap(h.a[0], h.a[1]);
            worst = std::max(worst, rel_err(chi(act(h, g)), -chi(g)));
        }
        std::ostringstream os;
        os << "max |chi(hG) - (-chi(G))| rel = " << worst << " (reported only)";
        c.note(os.str());
    });

    return su.take();
}

std::vector<PropertyResult> suite_map(int samples, std::uint64_t seed) {
    Suite su("map", samples, seed);

    su.property("cusp-values", [&](Sampler&, Check& c) {
        const PlanePoint p = sigma(CurveSign::Minus, 1.0 / std::sqrt(2.0));
        c.require(p.x == -2.0 && p.y == 1.0, "sigma_-(1/sqrt 2) must be exactly (-2, 1)");
        const auto th = theta_invariants(gamma0());
        c.require(std::abs(th.first + 2.0) < 1e-12 && std::abs(th.second - 1.0) < 1e-12,
                  "theta(gamma0) must be (-2, 1)");
        c.require(std::abs(chi(gamma0())) < 1e-12, "chi(gamma0) must vanish");
    });

    su.property("cusp-derivative-vanishes", [&](Sampler&, Check& c) {
        const double tc = 1.0 / std::sqrt(2.0);
        // closed form: x' = -8t + 2 t^-3, y' = 16 t^3 - 8 t
        const double xp = -8.0 * tc + 2.0 / (tc * tc * tc);
        const double yp = 16.0 * tc * tc * tc - 8.0 * tc;
        c.require(std::abs(xp) < 1e-12 && std::abs(yp) < 1e-12,
                  "closed-form sigma_- derivative must vanish at the cusp");
        const double h = 1e-5;
        const PlanePoint f = sigma(CurveSign::Minus, tc + h);
        const PlanePoint b = sigma(CurveSign::Minus, tc - h);
        c.require(std::abs((f.x - b.x) / (2 * h)) < 1e-6 &&
                      std::abs((f.y - b.y) / (2 * h)) < 1e-6,
                  "finite-difference sigma_- derivative must vanish at the cusp");
    });

    su.property("region-signature-consistency", [&](Sampler& s, Check& c) {
        const int per_class = std::max(1, su.samples() / 2);
        struct Case {
            Signature sig;
            RegionLabel region;
            RegionLabel boundary;
        };
        const Case cases[] = {
            {{2, 0, false}, RegionLabel::D20, RegionLabel::BoundarySigmaMinus},
            {{1, 1, false}, RegionLabel::D11, RegionLabel::BoundarySigmaMinus},
            {{0, 2, false}, RegionLabel::D02, RegionLabel::BoundarySigmaPlus},
        };
        for (const Case& cs : cases) {
            for (int n = 0; n < per_class; ++n) {
                const Christoffel g = random_christoffel_with_signature(s, true, cs.sig);
                const auto th = theta_invariants(g);
                const RegionLabel lb = classify_point({th.first, th.second}, 1e-6);
                const bool ok = lb == cs.region || lb == cs.boundary || lb == RegionLabel::Cusp ||
                                (cs.sig.p == 1 && lb == RegionLabel::BoundarySigmaPlus);
                if (!ok)
                    return c.fail("theta landed in " + to_string(lb) + " for signature (" +
                                  std::to_string(cs.sig.p) + "," + std::to_string(cs.sig.q) +
                                  ") at " + show(g));
            }
        }
    });

    su.property("classify-refinement-stability", [&](Sampler& s, Check& c) {
        const int probes = std::max(1, su.samples());
        for (int n = 0; n < probes; ++n) {
            const PlanePoint p{s.uniform(-10, 10), s.uniform(0, 10)};
            if (classify_point(p, 1e-8, 2048) != classify_point(p, 1e-8, 20480)) {
                std::ostringstream os;
                os << "label changed under refinement at (" << p.x << ", " << p.y << ")";
                return c.fail(os.str());
            }
        }
    });

    su.property("classify-against-parameter-solve", [&](Sampler& s, Check& c) {
        // independent oracle: closed-form solve of 4u^2 +- 4u + (2 - y) = 0
        auto oracle = [](const PlanePoint& p) {
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
        };
        for (int n = 0; n < su.samples(); ++n) {
            const PlanePoint p{s.uniform(-30, 30), s.uniform(-5, 40)};
            const RegionLabel got = classify_point(p, 1e-9);
            if (got == RegionLabel::Cusp || got == RegionLabel::BoundarySigmaMinus ||
                got == RegionLabel::BoundarySigmaPlus)
                continue;  // oracle has no tolerance band
            if (got != oracle(p)) {
                std::ostringstream os;
                os << "ray parity disagrees with parameter solve at (" << p.x << ", " << p.y
                   << ")";
                return c.fail(os.str());
            }
        }
    });

    su.property("curve-sampling-consistency", [&](Sampler&, Check& c) {
        const auto pts = emit_curve(CurveSign::Plus, 0.25, 4.0, 101);
        c.require(static_cast<int>(pts.size()) == 101, "sample count");
        const PlanePoint lo = sigma(CurveSign::Plus, 0.25);
        const PlanePoint hi = sigma(CurveSign::Plus, 4.0);
        c.require(pts.front().x == lo.x && pts.front().y == lo.y, "left endpoint mismatch");
        c.require(pts.back().x == hi.x && pts.back().y == hi.y, "right endpoint mismatch");
        for (std::size_t i = 1; i < pts.size(); ++i)
            if (!(pts[i].t > pts[i - 1].t)) return c.fail("parameters not increasing");
    });

    return su.take();
}

std::vector<PropertyResult> suite_fixed(int samples, std::uint64_t seed) {
    Suite su("fixed", samples, seed);

    su.property("reflection-basics", [&](Sampler&, Check& c) {
        const GroupElement T = reflection_T();
        c.require(T.det() == -1.0, "det T must be -1");
        const GroupElement T2 = T * T;
        c.require(T2(0, 0) == 1.0 && T2(1, 1) == 1.0 && T2(0, 1) == 0.0 && T2(1, 0) == 0.0,
                  "T^2 must be the identity");
    });

    su.property("family-is-T-fixed", [&](Sampler& s, Check& c) {
        for (int n = 0; n < su.samples(); ++n) {
            const FixedPointParams p{s.uniform(-3, 3), s.uniform(-3, 3), s.uniform(-3, 3),
                                     s.uniform(-3, 3)};
            const Christoffel g = fixed_family(p);
            if (distance(act(reflection_T(), g), g) != 0.0)
                return c.fail("family point moved by T at " + show(g));
        }
    });

    su.property("closed-form-ricci-exact", [&](Sampler& s, Check& c) {
        for (int n = 0; n < su.samples(); ++n) {
            const FixedPointParams p{std::floor(s.uniform(-9, 10)), std::floor(s.uniform(-9, 10)),
                                     std::floor(s.uniform(-9, 10)), std::floor(s.uniform(-9, 10))};
            const BilinearForm2 got = ricci(fixed_family(p));
            const BilinearForm2 want = fixed_family_ricci(p);
            if (got(0, 0) != want(0, 0) || got(1, 1) != want(1, 1) || got(0, 1) != 0.0 ||
                got(1, 0) != 0.0) {
                std::ostringstream os;
                os << "closed form mismatch at (a,b,c,d)=(" << p.a << "," << p.b << "," << p.c
                   << "," << p.d << ")";
                return c.fail(os.str());
            }
        }
    });

    su.property("structure-group-closure", [&](Sampler& s, Check& c) {
        for (int n = 0; n < su.samples(); ++n) {
            const FixedPointParams p{s.uniform(-3, 3), s.uniform(-3, 3), s.uniform(-3, 3),
                                     s.uniform(-3, 3)};
            double d1 = s.uniform(0.2, 2.0), d2 = s.uniform(0.2, 2.0);
            if (s.uniform(0, 1) < 0.5) {
                d1 = -d1;
                d2 = -d2;
            }
            const GroupElement g = GroupElement::diagonal(d1, d2);
            if (!g0_member(g)) return c.fail("diagonal with det>0 rejected from G0");
            const Christoffel moved = act(g, fixed_family(p));
            if (moved(0, 0, 0) != 0.0 || moved(0, 1, 1) != 0.0 || moved(1, 0, 1) != 0.0 ||
                moved(1, 1, 0) != 0.0)
                return c.fail("G0 action left the fixed pattern at " + show(moved));
        }
        c.require(!g0_member(GroupElement::rotation(kPi / 4)), "rotation must not be in G0");
        c.require(!g0_member(GroupElement::diagonal(1.0, -1.0)), "det<0 must not be in G0");
    });

    su.property("orthant-census", [&](Sampler&, Check& c) {
        const auto neg = boundary_components(Signature{2, 0, false});
        const auto ind = boundary_components(Signature{1, 1, false});
        const auto pos = boundary_components(Signature{0, 2, false});
        c.require(pos.count == 1 && pos.patterns.size() == 2, "(0,2) must give 1 from 2");
        c.require(ind.count == 2 && ind.patterns.size() == 4, "(1,1) must give 2 from 4");
        c.require(neg.count == 1 && neg.patterns.size() == 2, "(2,0) must give 1 from 2");
        c.require(pos.patterns.size() + ind.patterns.size() + neg.patterns.size() == 8,
                  "the 8 orthants must all carry a nondegenerate signature");
    });

    su.property("twisted-action-intertwines", [&](Sampler& s, Check& c) {
        const GroupElement T = reflection_T();
        for (int n = 0; n < su.samples(); ++n) {
            const Christoffel g = random_christoffel(s, false);
            const GroupElement h = random_group_element(s, true);
            const Christoffel lhs = act(T, act(h, g));
            const Christoffel rhs = act(T * h * T.inverse(), act(T, g));
            if (distance(lhs, rhs) > 1e-12 * std::max(1.0, rhs.max_abs()))
                return c.fail("intertwining identity violated at " + show(g));
        }
    });

    return su.take();
}

std::vector<PropertyResult> suite_orbifold(int samples, std::uint64_t seed) {
    Suite su("orbifold", samples, seed);

    su.property("complexify-roundtrip", [&](Sampler& s, Check& c) {
        for (int n = 0; n < su.samples(); ++n) {
            const Christoffel g = random_christoffel(s, false);
            if (distance(realify(complexify(g)), g) > 1e-14 * std::max(1.0, g.max_abs()))
                return c.fail("roundtrip drift at " + show(g));
        }
    });

    su.property("exceptional-complex-coordinates", [&](Sampler&, Check& c) {
        const ComplexChristoffel a = complexify(gamma0());
        c.require(std::abs(a[0]) < 1e-15 && std::abs(a[2]) < 1e-15 && std::abs(a[3]) < 1e-15,
                  "gamma0 must have only the 11^2 slot");
        c.require(std::abs(a[1] - Complex(-2.0, 0.0)) < 1e-15,
                  "gamma0 slot 11^2 must be -2");
        c.require(distance(slice_base(), -0.5 * gamma0()) < 1e-15,
                  "slice base must be -gamma0/2");
    });

    su.property("z3-isotropy", [&](Sampler&, Check& c) {
        const GroupElement r = z3_rotation();
        c.require(distance(act(r, gamma0()), gamma0()) <= 1e-14,
                  "rotation by 2pi/3 must fix gamma0");
        const GroupElement r3 = r * r * r;
        const GroupElement id = GroupElement::identity();
        double dev = 0.0;
        for (int i = 0; i < 2; ++i)
            for (int j = 0; j < 2; ++j) dev = std::max(dev, std::abs(r3(i, j) - id(i, j)));
        c.require(dev <= 1e-15, "cube of the rotation must be the identity");
    });

    su.property("rotation-weight-table", [&](Sampler& s, Check& c) {
        for (int n = 0; n < su.samples(); ++n) {
            const Christoffel g = random_christoffel(s, false);
            const double theta = s.uniform(0, 2 * kPi);
            const ComplexChristoffel a = complexify(g);
            const ComplexChristoffel b = complexify(act(GroupElement::rotation(theta), g));
            for (int slot = 0; slot < 4; ++slot) {
                const Complex want = std::polar(1.0, kAlphaWeight[slot] * theta) * a[slot];
                if (std::abs(b[slot] - want) > 1e-12 * std::max(1.0, std::abs(want)))
                    return c.fail("rotation weight violated at " + show(g));
            }
        }
    });

    su.property("z3-slice-equivariance", [&](Sampler& s, Check& c) {
        double worst = z3_equivariance_residual(0.0, 0.0);
        for (int n = 0; n < su.samples(); ++n) {
            const Complex a1{s.uniform(-2, 2), s.uniform(-2, 2)};
            const Complex a2{s.uniform(-2, 2), s.uniform(-2, 2)};
            worst = std::max(worst, z3_equivariance_residual(a1, a2));
        }
        std::ostringstream os;
        os << "worst residual " << worst;
        c.require(worst < 1e-12, os.str());
        c.note(os.str());
    });

    su.property("conjugation-slice-equivariance", [&](Sampler& s, Check& c) {
        double worst = 0.0;
        for (int n = 0; n < su.samples(); ++n) {
            const Complex a1{s.uniform(-2, 2), s.uniform(-2, 2)};
            const Complex a2{s.uniform(-2, 2), s.uniform(-2, 2)};
            worst = std::max(worst, conjugation_equivariance_residual(a1, a2));
        }
        std::ostringstream os;
        os << "worst residual " << worst;
        c.require(worst < 1e-12, os.str());
        c.note(os.str());
    });

    su.property("s3-slice-equivariance", [&](Sampler& s, Check& c) {
        const Complex lambda = std::polar(1.0, 2 * kPi / 3);
        const GroupElement R = z3_rotation();
        const GroupElement C = conjugation_reflection();
        double worst = 0.0;
        const int count = std::max(1, su.samples() / 6);
        for (int n = 0; n < count; ++n) {
            const Complex a1{s.uniform(-2, 2), s.uniform(-2, 2)};
            const Complex a2{s.uniform(-2, 2), s.uniform(-2, 2)};
            for (int j = 0; j < 3; ++j)
                for (int k = 0; k < 2; ++k) {
                    GroupElement g = GroupElement::identity();
                    for (int t = 0; t < j; ++t) g = R * g;
                    if (k) g = g * C;
                    Complex b1 = a1, b2 = a2;
                    if (k) {
                        b1 = std::conj(b1);
                        b2 = std::conj(b2);
                    }
                    for (int t = 0; t < j; ++t) {
                        b1 *= lambda;
                        b2 *= lambda;
                    }
                    const double res =
                        distance(act(g, slice_W(a1, a2)), slice_W(b1, b2));
                    worst = std::max(worst, res);
                }
        }
        std::ostringstream os;
        os << "worst residual over the 6 elements " << worst;
        c.require(worst < 1e-12, os.str());
        c.note(os.str());
    });

    su.property("tangent-finite-difference", [&](Sampler& s, Check& c) {
        const Christoffel base = slice_base();
        auto curve = [&](Complex b1, Complex b2, double t) {
            return complexify(act(complex_group_element(1.0 + t * b1, t * b2), base));
        };
        const int count = std::max(2, su.samples() / 100);
        for (int n = 0; n < count; ++n) {
            const Complex b1{s.uniform(-1, 1), s.uniform(-1, 1)};
            const Complex b2{s.uniform(-1, 1), s.uniform(-1, 1)};
            const ComplexChristoffel want = orbit_tangent(b1, b2);
            auto fd_err = [&](double h) {
                const ComplexChristoffel f = curve(b1, b2, h);
                const ComplexChristoffel b = curve(b1, b2, -h);
                double e = 0.0;
                for (int slot = 0; slot < 4; ++slot)
                    e = std::max(e, std::abs((f[slot] - b[slot]) / (2 * h) - want[slot]));
                return e;
            };
            const double e1 = fd_err(1e-3);
            const double e2 = fd_err(1e-4);
            if (e2 > 1e-12) {
                const double order = std::log10(e1 / e2);
                if (order < 1.9) {
                    std::ostringstream os;
                    os << "observed order " << order << " for beta1=(" << b1.real() << ","
                       << b1.imag() << ") beta2=(" << b2.real() << "," << b2.imag() << ")";
                    return c.fail(os.str());
                }
            }
        }
    });

    su.property("orbit-slice-transversality", [&](Sampler&, Check& c) {
        const int rank = orbit_slice_rank(1e-8);
        c.require(rank == 8, "combined tangent matrix has rank " + std::to_string(rank));
    });

    su.property("base-point-on-exceptional-orbit", [&](Sampler&, Check& c) {
        const OrbitDecision d = orbit_equivalent(slice_base(), gamma0());
        c.require(d.equivalent, "slice base point must be orbit-equivalent to gamma0");
    });

    su.property("complex-representation", [&](Sampler& s, Check& c) {
        const GroupElement id = complex_group_element(1.0, 0.0);
        c.require(distance(act(id, gamma0()), gamma0()) == 0.0, "T_{1,0} must be the identity");
        for (int n = 0; n < su.samples(); ++n) {
            Complex b1{s.uniform(-2, 2), s.uniform(-2, 2)};
            Complex b2{s.uniform(-2, 2), s.uniform(-2, 2)};
            if (std::norm(b1) <= std::norm(b2) + 0.1) continue;
            const GroupElement g = complex_group_element(b1, b2);
            const double want = std::norm(b1) - std::norm(b2);
            if (std::abs(g.det() - want) > 1e-12 * std::max(1.0, want))
                return c.fail("determinant formula violated");
        }
        const double th = 1.2345;
        const GroupElement rot = complex_group_element(std::polar(1.0, th), 0.0);
        const GroupElement want = GroupElement::rotation(th);
        double dev = 0.0;
        for (int i = 0; i < 2; ++i)
            for (int j = 0; j < 2; ++j) dev = std::max(dev, std::abs(rot(i, j) - want(i, j)));
        c.require(dev <= 1e-15, "unit beta1 must act as a rotation");
    });

    su.property("torsion-free-slice", [&](Sampler& s, Check& c) {
        for (int n = 0; n < su.samples(); ++n) {
            const Complex a{s.uniform(-2, 2), s.uniform(-2, 2)};
            const Christoffel g = slice_Z(a);
            if (torsion(g).max_abs() > 1e-15)
                return c.fail("slice_Z produced torsion at alpha=(" +
                              std::to_string(a.real()) + "," + std::to_string(a.imag()) + ")");
            const Christoffel w = slice_W(a, a);
            if (distance(g, w) != 0.0) return c.fail("slice_Z must equal slice_W(a, a)");
        }
    });

    return su.take();
}

}  // namespace

const std::vector<std::string>& suite_names() {
    static const std::vector<std::string> names = {"core",  "action",   "invariants",
                                                   "map",   "fixed",    "orbifold"};
    return names;
}

std::vector<PropertyResult> run_suite(const std::string& suite, int samples,
                                      std::uint64_t seed) {
    if (suite == "core") return suite_core(samples, seed);
    if (suite == "action") return suite_action(samples, seed);
    if (suite == "invariants") return suite_invariants(samples, seed);
    if (suite == "map") return suite_map(samples, seed);
    if (suite == "fixed") return suite_fixed(samples, seed);
    if (suite == "orbifold") return suite_orbifold(samples, seed);
    throw std::invalid_argument("unknown suite: " + suite);
}

std::vector<PropertyResult> run_all_suites(int samples, std::uint64_t seed) {
    std::vector<PropertyResult> all;
    for (const std::string& name : suite_names()) {
        auto part = run_suite(name, samples, seed);
        all.insert(all.end(), part.begin(), part.end());
    }
    return all;
}

}  // namespace affine
