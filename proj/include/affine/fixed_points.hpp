#pragma once

#include <string>
#include <vector>

#include "affine/core_algebra.hpp"
#include "affine/group_action.hpp"

namespace affine {

/// The four free coefficients of a structure fixed by the reflection
/// diag(-1,1): exactly the slots with an even number of 1-indices survive,
///   G_11^2 = a, G_12^1 = b, G_21^1 = c, G_22^2 = d,
/// all other slots vanish.  Torsion free iff b == c.
struct FixedPointParams {
    double a = 0.0;
    double b = 0.0;
    double c = 0.0;
    double d = 0.0;
};

/// The order-2 reflection diag(-1, 1) with determinant -1.
GroupElement reflection_T();

/// The structure with the T-fixed slot pattern above.  Its Ricci tensor is
/// diagonal in closed form: ricci = diag(a(d-c), b(d-c)).
Christoffel fixed_family(const FixedPointParams& p);

/// Closed-form Ricci of the fixed family, for exact cross-checks against the
/// general contraction.
BilinearForm2 fixed_family_ricci(const FixedPointParams& p);

/// Structure group of the fixed locus: g in GL+ commuting with the
/// reflection, i.e. diagonal with positive determinant.  Off-diagonal entries
/// are compared against tol * max_abs(g).
bool g0_member(const GroupElement& g, double tol = 1e-12);

/// One open orthant of the torsion-free fixed slice (c = b) in the
/// coordinates (sign a, sign b, sign(d - b)); each entry is +1 or -1.
struct SignPattern {
    int sign_a = 0;
    int sign_b = 0;
    int sign_d_minus_b = 0;
};

std::string to_string(const SignPattern& p);

struct BoundaryComponents {
    int count = 0;  ///< boundary components: orthant components / 2
    std::vector<SignPattern> patterns;
};

/// Enumerates the open sign-pattern components of the torsion-free fixed
/// slice whose Ricci tensor diag(a(d-b), b(d-b)) has the requested
/// nondegenerate signature, and halves the component count (the structure
/// group has two arc components that identify patterns in pairs).
/// Requested signature must be one of (2,0), (1,1), (0,2).
BoundaryComponents boundary_components(const Signature& sig);

}  // namespace affine
