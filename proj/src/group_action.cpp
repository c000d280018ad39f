#include "affine/group_action.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

#include "affine/invariants.hpp"
#include "affine/orbifold.hpp"

namespace affine {

namespace {

constexpr double kPi = std::numbers::pi;

// Relative floor under which the candidate-ratio enumeration would divide by
// noise; below it the theta/a grid fallback takes over.
constexpr double kRatioFloor = 1e-6;

double safe_scale(double s) { return std::max(s, 1e-300); }

// One signature-aware Gram-Schmidt step: h with h S h^T = standard_form(sig),
// det h > 0.  S must be symmetric nondegenerate of the given signature.
GroupElement gram_schmidt_step(const BilinearForm2& S, const Signature& sig) {
    GroupElement h;
    if (sig.definite()) {
        // diagonalize against e1, then the S-orthogonal complement
        const double s00 = S(0, 0);
        const double r0 = 1.0 / std::sqrt(std::abs(s00));
        const double proj = S(0, 1) / s00;
        const double val = S(1, 1) - S(0, 1) * proj;
        const double r1 = 1.0 / std::sqrt(std::abs(val));
        h(0, 0) = r0;
        h(0, 1) = 0.0;
        h(1, 0) = -proj * r1;
        h(1, 1) = r1;
        return h;  // det = r0*r1 > 0
    }
    // signature (1,1): hyperbolic basis u, w with S(u,u)=S(w,w)=0, S(u,w)=1
    const double mean = 0.5 * (S(0, 0) + S(1, 1));
    const double diff = 0.5 * (S(0, 0) - S(1, 1));
    const double rad = std::hypot(diff, S(0, 1));
    const double l1 = mean + rad;  // > 0
    const double l2 = mean - rad;  // < 0
    // eigenvector for l1, taking the better-conditioned expression
    double vx = S(0, 1), vy = l1 - S(0, 0);
    const double wx = l1 - S(1, 1), wy = S(0, 1);
    if (wx * wx + wy * wy > vx * vx + vy * vy) {
        vx = wx;
        vy = wy;
    }
    double n = std::hypot(vx, vy);
    if (n == 0.0) {
        vx = 1.0;
        vy = 0.0;
       n = 1.0;
    }
    const double q1x = vx / n, q1y = vy / n;
    const double q2x = -q1y, q2y = q1x;  // det(q1,q2) = +1
    const double a1 = 1.0 / std::sqrt(l1), a2 = 1.0 / std::sqrt(-l2);
    // rows u = (q1/sqrt(l1) + q2/sqrt(-l2))/2 and w = q1/sqrt(l1) - q2/sqrt(-l2)
    h(0, 0) = 0.5 * (a1 * q1x + a2 * q2x);
    h(0, 1) = 0.5 * (a1 * q1y + a2 * q2y);
    h(1, 0) = a1 * q1x - a2 * q2x;
    h(1, 1) = a1 * q1y - a2 * q2y;
    if (h.det() < 0.0) std::swap(h.a[0], h.a[1]);  // Gram matrix is swap-invariant
    return h;
}

struct Normalized {
    GroupElement h;
    Christoffel gamma;
};

// Verify a residual-isometry candidate g0 acting between normalized
// structures, then pull it back to the originals.
std::optional<OrbitDecision> try_candidate(const GroupElement& g0, const Normalized& n1,
                                           const Normalized& n2, const Christoffel& gamma1,
                                           const Christoffel& gamma2, double tol) {
    const double norm_scale = safe_scale(n2.gamma.max_abs());
    if (distance(act(g0, n1.gamma), n2.gamma) > tol * norm_scale) return std::nullopt;
    const GroupElement w = n2.h.inverse() * g0 * n1.h;
    const double res = distance(act(w, gamma1), gamma2) / safe_scale(gamma2.max_abs());
    if (res > tol) return std::nullopt;
    OrbitDecision d;
    d.equivalent = true;
    d.status = OrbitStatus::Equivalent;
    d.witness = w;
    d.residual = res;
    return d;
}

OrbitDecision decide_glplus(const Christoffel& gamma1, const Christoffel& gamma2,
                            const Signature& sig, double tol) {
    const BilinearForm2 target = standard_form(sig);
    const Normalized n1{normalize_ricci(gamma1, target), {}};
    const Normalized n2{normalize_ricci(gamma2, target), {}};
    Normalized m1{n1.h, act(n1.h, gamma1)};
    Normalized m2{n2.h, act(n2.h, gamma2)};

    OrbitDecision fail;
    fail.status = OrbitStatus::NotEquivalent;

    if (sig.definite()) {
        const ComplexChristoffel a = complexify(m1.gamma);
        const ComplexChristoffel b = complexify(m2.gamma);
        const double scale = std::max(a.max_abs(), b.max_abs());
        int s_best = 0;
        for (int s = 1; s < 4; ++s)
            if (std::abs(a[s]) > std::abs(a[s_best])) s_best = s;

        if (std::abs(a[s_best]) > kRatioFloor * scale) {
            // rotations preserve each |slot|; a modulus mismatch is definitive
            const Complex ratio = b[s_best] / a[s_best];
            if (std::abs(std::abs(ratio) - 1.0) > 1e3 * tol) return fail;
            const int eps = kAlphaWeight[s_best];
            const double phase = std::arg(ratio);
            for (int mwind = 0; mwind < std::abs(eps); ++mwind) {
                const double theta = (phase + 2.0 * kPi * mwind) / eps;
                if (auto d = try_candidate(GroupElement::rotation(theta), m1, m2, gamma1,
                                           gamma2, tol))
                    return *d;
            }
            return fail;
        }
        // all slots in the noise floor: sweep rotations and report honestly
        for (int i = 0; i < 10000; ++i) {
            const double theta = 2.0 * kPi * i / 10000.0;
            if (auto d =
                    try_candidate(GroupElement::rotation(theta), m1, m2, gamma1, gamma2, tol))
                return *d;
        }
        fail.status = OrbitStatus::Inconclusive;
        return fail;
    }

    // signature (1,1): residual stabilizer is diag(a, 1/a), a != 0
    double best = 0.0;
    int bi = 0, bj = 0, bk = 0;
    for (int i = 0; i < 2; ++i)
        for (int j = 0; j < 2; ++j)
            for (int k = 0; k < 2; ++k)
                if (std::abs(m1.gamma(i, j, k)) > best) {
                    best = std::abs(m1.gamma(i, j, k));
                    bi = i;
                    bj = j;
                    bk = k;
                }
    const double scale = std::max(m1.gamma.max_abs(), m2.gamma.max_abs());
    if (best > kRatioFloor * scale) {
        const double ratio = m2.gamma(bi, bj, bk) / m1.gamma(bi, bj, bk);
        if (ratio == 0.0 || !std::isfinite(ratio)) return fail;
        const int eps = weight_exponent(bi + 1, bj + 1, bk + 1);
        // odd powers are bijective on the reals: exactly one candidate
        const double aval = (ratio < 0.0 ? -1.0 : 1.0) *
                            std::pow(std::abs(ratio), 1.0 / static_cast<double>(eps));
        if (auto d = try_candidate(GroupElement::diagonal(aval, 1.0 / aval), m1, m2, gamma1,
                                   gamma2, tol))
            return *d;
        return fail;
    }
    for (int i = 0; i < 10000; ++i) {
        const double loga = -3.0 + 6.0 * i / 9999.0;
        const double aval = std::pow(10.0, loga);
        for (const double s : {aval, -aval})
            if (auto d = try_candidate(GroupElement::diagonal(s, 1.0 / s), m1, m2, gamma1,
                                       gamma2, tol))
                return *d;
    }
    fail.status = OrbitStatus::Inconclusive;
    return fail;
}

}  // namespace

double GroupElement::max_abs() const {
    double m = 0.0;
    for (const auto& row : a)
        for (double v : row) m = std::max(m, std::abs(v));
    return m;
}

GroupElement GroupElement::inverse() const {
    const double d = det();
    const double scale = max_abs();
    if (std::abs(d) <= 1e-12 * scale * scale)
        throw std::invalid_argument("GroupElement: matrix is numerically singular");
    return {{{{a[1][1] / d, -a[0][1] / d}, {-a[1][0] / d, a[0][0] / d}}}};
}

GroupElement GroupElement::transpose() const {
    return {{{{a[0][0], a[1][0]}, {a[0][1], a[1][1]}}}};
}

GroupElement GroupElement::rotation(double theta) {
    const double c = std::cos(theta), s = std::sin(theta);
    return {{{{c, -s}, {s, c}}}};
}

GroupElement operator*(const GroupElement& l, const GroupElement& r) {
    GroupElement out;
    for (int i = 0; i < 2; ++i)
        for (int j = 0; j < 2; ++j)
            out(i, j) = l(i, 0) * r(0, j) + l(i, 1) * r(1, j);
    return out;
}

int weight_exponent(int i, int j, int k) {
    if (i < 1 || i > 2 || j < 1 || j > 2 || k < 1 || k > 2)
        throw std::invalid_argument("weight_exponent: indices must be 1 or 2");
    const auto d1 = [](int x) { return x == 1 ? 1 : -1; };
    return d1(i) + d1(j) - d1(k);
}

Christoffel act(const GroupElement& g, const Christoffel& gamma) {
    const GroupElement inv = g.inverse();  // throws on singular input
    Christoffel out;
    for (int i = 0; i < 2; ++i)
        for (int j = 0; j < 2; ++j)
            for (int k = 0; k < 2; ++k) {
                double acc = 0.0;
                for (int a = 0; a < 2; ++a)
                    for (int b = 0; b < 2; ++b)
                        for (int c = 0; c < 2; ++c)
                            acc += g(i, a) * g(j, b) * inv(c, k) * gamma(a, b, c);
                out(i, j, k) = acc;
            }
    return out;
}

BilinearForm2 congruence(const GroupElement& g, const BilinearForm2& b) {
    BilinearForm2 out;
    for (int i = 0; i < 2; ++i)
        for (int j = 0; j < 2; ++j) {
            double acc = 0.0;
            for (int p = 0; p < 2; ++p)
                for (int q = 0; q < 2; ++q) acc += g(i, p) * g(j, q) * b(p, q);
            out(i, j) = acc;
        }
    return out;
}

BilinearForm2 standard_form(const Signature& sig) {
    if (sig.degenerate) throw std::invalid_argument("standard_form: degenerate signature");
    if (sig.p == 2) return BilinearForm2::diag(-1.0, -1.0);
    if (sig.q == 2) return BilinearForm2::diag(1.0, 1.0);
    return {{{{0.0, 1.0}, {1.0, 0.0}}}};
}

GroupElement normalize_ricci(const Christoffel& gamma, const BilinearForm2& target) {
    BilinearForm2 S = ricci_symmetric(gamma);
    const Signature sig = signature(S);
    if (sig.degenerate)
        throw std::invalid_argument("normalize_ricci: rho_s is degenerate");
    if (distance(target, standard_form(sig)) != 0.0)
        throw std::invalid_argument(
            "normalize_ricci: target does not match the rho_s signature class");

    GroupElement h = GroupElement::identity();
    // One Gram-Schmidt step lands near the target; repeating from the already
    // normalized form polishes ill-conditioned inputs down to roundoff.
    for (int iter = 0; iter < 4; ++iter) {
        h = gram_schmidt_step(S, sig) * h;
        S = ricci_symmetric(act(h, gamma));
        if (distance(S, target) <= 1e-14) break;
    }
    return h;
}

IsotropyResult isotropy_nontrivial(const Christoffel& gamma, double tol) {
    const BilinearForm2 S = ricci_symmetric(gamma);
    const Signature sig = signature(S);
    if (sig.degenerate)
        throw std::invalid_argument("isotropy_nontrivial: rho_s is degenerate");

    const GroupElement h = normalize_ricci(gamma, standard_form(sig));
    const Christoffel gn = act(h, gamma);
    const double scale = safe_scale(gn.max_abs());
    const double orig_scale = safe_scale(gamma.max_abs());

    IsotropyResult res;
    if (sig.definite()) {
        // a fixing rotation must satisfy exp(i*eps*theta) = 1 on every nonzero
        // complexified slot; with eps odd and |eps| <= 3 only third roots of
        // unity can appear
        for (const double theta : {2.0 * kPi / 3.0, 4.0 * kPi / 3.0}) {
            const GroupElement r = GroupElement::rotation(theta);
            if (distance(act(r, gn), gn) <= tol * scale) {
                const GroupElement w = h.inverse() * r * h;
                if (distance(act(w, gamma), gamma) <= tol * orig_scale) {
                    res.nontrivial = true;
                    res.witness = w;
                    return res;
                }
            }
        }
        return res;
    }
    // signature (1,1): a^eps = 1 with eps odd has the real solutions +-1 only
    const GroupElement minus = GroupElement::diagonal(-1.0, -1.0);
    if (distance(act(minus, gn), gn) <= tol * scale) {
        const GroupElement w = h.inverse() * minus * h;
        if (distance(act(w, gamma), gamma) <= tol * orig_scale) {
            res.nontrivial = true;
            res.witness = w;
        }
    }
    return res;
}

bool in_exceptional_orbit(const Christoffel& gamma, double tol) {
    if (torsion(gamma).max_abs() > tol * safe_scale(gamma.max_abs())) return false;
    const BilinearForm2 S = ricci_symmetric(gamma);
    const Signature sig = signature(S);
    if (sig.degenerate || sig.p != 2) return false;
    return isotropy_nontrivial(gamma, tol).nontrivial;
}

std::string to_string(OrbitStatus s) {
    switch (s) {
        case OrbitStatus::Equivalent: return "equivalent";
        case OrbitStatus::SignatureMismatch: return "signature-mismatch";
        case OrbitStatus::InvariantSeparation: return "invariant-separation";
        case OrbitStatus::NotEquivalent: return "not-equivalent";
        case OrbitStatus::Inconclusive: return "inconclusive";
    }
    return "unknown";
}

OrbitDecision orbit_equivalent(const Christoffel& gamma1, const Christoffel& gamma2,
                               GroupClass group, double tol) {
    const BilinearForm2 s1 = ricci_symmetric(gamma1);
    const BilinearForm2 s2 = ricci_symmetric(gamma2);
    const Signature sig1 = signature(s1);
    const Signature sig2 = signature(s2);
    if (sig1.degenerate || sig2.degenerate)
        throw std::invalid_argument("orbit_equivalent: rho_s is degenerate");

    if (!(sig1 == sig2)) {
        OrbitDecision d;
        d.status = OrbitStatus::SignatureMismatch;
        return d;
    }

    // quick sound rejection: (psi3, Psi3) is constant on full GL orbits of
    // torsion-free rank-2 structures, so a clear separation is a "no"
    if (gamma1.torsion_free(1e-12) && gamma2.torsion_free(1e-12)) {
        const BilinearForm2 r1 = ricci(gamma1);
        const BilinearForm2 r2 = ricci(gamma2);
        const auto full_rank = [](const BilinearForm2& r) {
            const double n = r.max_abs();
            return std::abs(r.det()) > kDegeneracyTol * n * n;
        };
        if (full_rank(r1) && full_rank(r2)) {
            const auto t1 = theta_invariants(gamma1);
            const auto t2 = theta_invariants(gamma2);
            const double sep = std::max(
                std::abs(t1.first - t2.first) / std::max(1.0, std::abs(t1.first)),
                std::abs(t1.second - t2.second) / std::max(1.0, std::abs(t1.second)));
            if (sep > 1e-6) {
                OrbitDecision d;
                d.status = OrbitStatus::InvariantSeparation;
                return d;
            }
        }
    }

    if (group == GroupClass::GLPlus) return decide_glplus(gamma1, gamma2, sig1, tol);

    OrbitDecision plus = decide_glplus(gamma1, gamma2, sig1, tol);
    if (plus.equivalent) return plus;
    const GroupElement T = GroupElement::diagonal(-1.0, 1.0);
    OrbitDecision mirrored = decide_glplus(gamma1, act(T, gamma2), sig1, tol);
    if (mirrored.equivalent) {
        OrbitDecision d;
        d.equivalent = true;
        d.status = OrbitStatus::Equivalent;
        d.witness = T * (*mirrored.witness);
        d.residual = distance(act(*d.witness, gamma1), gamma2) / safe_scale(gamma2.max_abs());
        return d;
    }
    if (plus.status == OrbitStatus::Inconclusive || mirrored.status == OrbitStatus::Inconclusive)
        plus.status = OrbitStatus::Inconclusive;
    return plus;
}

}  // namespace affine
