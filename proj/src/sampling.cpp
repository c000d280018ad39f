#include "affine/sampling.hpp"

#include <cmath>

namespace affine {

namespace {
constexpr double kSampleRejectTol = 1e-6;

bool acceptable(const Christoffel& g) {
    const BilinearForm2 s = ricci_symmetric(g);
    const double n = s.max_abs();
    return n > 0.0 && std::abs(s.det()) > kSampleRejectTol * n * n;
}
}  // namespace

Christoffel random_christoffel(Sampler& s, bool torsion_free) {
    for (;;) {
        Christoffel g;
        g(0, 0, 0) = s.uniform(-2.0, 2.0);
        g(0, 0, 1) = s.uniform(-2.0, 2.0);
        g(0, 1, 0) = s.uniform(-2.0, 2.0);
        g(0, 1, 1) = s.uniform(-2.0, 2.0);
        if (torsion_free) {
            g(1, 0, 0) = g(0, 1, 0);
            g(1, 0, 1) = g(0, 1, 1);
        } else {
            g(1, 0, 0) = s.uniform(-2.0, 2.0);
            g(1, 0, 1) = s.uniform(-2.0, 2.0);
        }
        g(1, 1, 0) = s.uniform(-2.0, 2.0);
        g(1, 1, 1) = s.uniform(-2.0, 2.0);
        if (acceptable(g)) return g;
    }
}

Christoffel random_christoffel_with_signature(Sampler& s, bool torsion_free,
                                              const Signature& sig) {
    for (;;) {
        Christoffel g = random_christoffel(s, torsion_free);
        if (signature(ricci_symmetric(g)) == sig) return g;
    }
}

GroupElement random_group_element(Sampler& s, bool plus_only) {
    for (;;) {
        GroupElement g;
        for (int i = 0; i < 2; ++i)
            for (int j = 0; j < 2; ++j) g(i, j) = s.uniform(-2.0, 2.0);
        const double d = g.det();
        if (plus_only ? d >= 0.5 : std::abs(d) >= 0.5) return g;
    }
}

Christoffel random_exceptional(Sampler& s) {
    return act(random_group_element(s, true), gamma0());
}

}  // namespace affine
