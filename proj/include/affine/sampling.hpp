#pragma once

#include <cstdint>
#include <random>

#include "affine/core_algebra.hpp"
#include "affine/group_action.hpp"

namespace affine {

/// Deterministic sample source shared by the verification suites and tests.
///
/// Reproducibility contract: the stream is mt19937_64 (fully specified by the
/// C++ standard) and every real is drawn as
///     u = (next() >> 11) * 2^-53        in [0, 1)
/// then scaled to the requested interval, so identical seeds replay the same
/// samples on any conforming implementation.
class Sampler {
public:
    explicit Sampler(std::uint64_t seed) : rng_(seed) {}

    double uniform(double lo, double hi) {
        const double u = static_cast<double>(rng_() >> 11) * 0x1.0p-53;
        return lo + u * (hi - lo);
    }

    std::uint64_t raw() { return rng_(); }

private:
    std::mt19937_64 rng_;
};

/// Structure with entries uniform in [-2, 2], rejecting samples whose rho_s
/// is degenerate at the 1e-6 relative determinant level.  When torsion_free
/// is set only the six symmetric slots are drawn.
Christoffel random_christoffel(Sampler& s, bool torsion_free);

/// As above, additionally rejecting until signature(rho_s) matches.
Christoffel random_christoffel_with_signature(Sampler& s, bool torsion_free,
                                              const Signature& sig);

/// Invertible matrix with entries uniform in [-2, 2] and |det| >= 0.5
/// (det >= 0.5 when plus_only).
GroupElement random_group_element(Sampler& s, bool plus_only);

/// A random point of the exceptional orbit: act(g, gamma0()) for random
/// g in GL+.
Christoffel random_exceptional(Sampler& s);

}  // namespace affine
