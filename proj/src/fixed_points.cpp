#include "affine/fixed_points.hpp"

#include <cmath>
#include <stdexcept>

namespace affine {

GroupElement reflection_T() { return GroupElement::diagonal(-1.0, 1.0); }

Christoffel fixed_family(const FixedPointParams& p) {
    Christoffel g;
    g(0, 0, 1) = p.a;
    g(0, 1, 0) = p.b;
    g(1, 0, 0) = p.c;
    g(1, 1, 1) = p.d;
    return g;
}

BilinearForm2 fixed_family_ricci(const FixedPointParams& p) {
    return BilinearForm2::diag(p.a * (p.d - p.c), p.b * (p.d - p.c));
}

bool g0_member(const GroupElement& g, double tol) {
    const double scale = std::max(1.0, g.max_abs());
    if (std::abs(g(0, 1)) > tol * scale || std::abs(g(1, 0)) > tol * scale) return false;
    return g.det() > 0.0;
}

std::string to_string(const SignPattern& p) {
    auto cmp = [](int s) { return s > 0 ? ">0" : "<0"; };
    return std::string("a") + cmp(p.sign_a) + ", b" + cmp(p.sign_b) +
           (p.sign_d_minus_b > 0 ? ", d>b" : ", d<b");
}

BoundaryComponents boundary_components(const Signature& sig) {
    if (sig.degenerate || sig.p + sig.q != 2)
        throw std::invalid_argument("boundary_components: signature must be nondegenerate");

    BoundaryComponents out;
    // rho = diag(a(d-b), b(d-b)) on the torsion-free slice; each open orthant
    // in (sign a, sign b, sign(d-b)) is convex, hence one component
    for (const int sa : {1, -1})
        for (const int sb : {1, -1})
            for (const int sd : {1, -1}) {
                const int e1 = sa * sd;  // sign of a(d-b)
                const int e2 = sb * sd;  // sign of b(d-b)
                Signature got;
                got.p = (e1 < 0) + (e2 < 0);
                got.q = (e1 > 0) + (e2 > 0);
                if (got == sig) out.patterns.push_back({sa, sb, sd});
            }
    // the two arc components of the diagonal structure group identify
    // patterns in pairs
    out.count = static_cast<int>(out.patterns.size()) / 2;
    return out;
}

}  // namespace affine
