#pragma once

#include <optional>
#include <string>

#include "affine/core_algebra.hpp"

namespace affine {

/// An invertible 2x2 real matrix acting on structures by change of basis.
/// Row i holds the coordinates of the i-th new basis vector, so composition
/// of actions is the ordinary matrix product: act(g1, act(g2, G)) equals
/// act(g1 * g2, G).
struct GroupElement {
    std::array<std::array<double, 2>, 2> a{};

    double operator()(int i, int j) const { return a[i][j]; }
    double& operator()(int i, int j) { return a[i][j]; }

    double det() const { return a[0][0] * a[1][1] - a[0][1] * a[1][0]; }
    int orientation() const { return det() < 0.0 ? -1 : 1; }
    double max_abs() const;

    GroupElement inverse() const;
    GroupElement transpose() const;

    static GroupElement identity() { return {{{{1.0, 0.0}, {0.0, 1.0}}}}; }
    static GroupElement diagonal(double d1, double d2) { return {{{{d1, 0.0}, {0.0, d2}}}}; }
    /// Rotation sending e1 to cos(t) e1 - sin(t) e2; multiplies the
    /// complexified slot of weight eps by exp(i eps t).
    static GroupElement rotation(double theta);

    friend GroupElement operator*(const GroupElement& l, const GroupElement& r);
};

/// Weight of slot (i,j,k) under diag(a, 1/a):
/// eps_ijk = d1i - d2i + d1j - d2j - d1k + d2k, an odd integer in {+-1, +-3}.
/// Indices are the classical 1-based ones ({1,2}); throws otherwise.
int weight_exponent(int i, int j, int k);

/// Change-of-basis action (g G)_ij^k = g_i^a g_j^b (g^-1)_c^k G_ab^c.
/// Diagonal g = diag(a, 1/a) multiplies slot (i,j,k) by a^eps_ijk.
/// Throws std::invalid_argument if g is numerically singular.
Christoffel act(const GroupElement& g, const Christoffel& gamma);

/// Congruence transform b -> g b g^T; how any natural bilinear form on the
/// structure (rho, rho_s, rho^3) moves under act.
BilinearForm2 congruence(const GroupElement& g, const BilinearForm2& b);

/// Standard representative of a nondegenerate signature class:
/// (2,0) -> diag(-1,-1), (0,2) -> diag(1,1), (1,1) -> [[0,1],[1,0]].
BilinearForm2 standard_form(const Signature& sig);

/// Builds h in GL+ with rho_s(act(h, gamma)) = target via signature-aware
/// Gram-Schmidt, then polishes the residual to roundoff.  The target must be
/// the standard form matching signature(rho_s(gamma)); degenerate rho_s or a
/// signature mismatch throws.
GroupElement normalize_ricci(const Christoffel& gamma, const BilinearForm2& target);

struct IsotropyResult {
    bool nontrivial = false;
    std::optional<GroupElement> witness;  ///< a fixing element != id when nontrivial
};

/// Detects g != id in GL+ with act(g, gamma) = gamma within tol (relative).
/// After normalizing rho_s, the residual freedom is the isometry group of the
/// standard form; candidates are read off from component ratios and verified
/// by direct action.  Requires nondegenerate rho_s.
IsotropyResult isotropy_nontrivial(const Christoffel& gamma, double tol = 1e-8);

/// Membership in the exceptional orbit: torsion free within tol, rho_s of
/// signature (2,0), and nontrivial isotropy.  Degenerate rho_s returns false.
bool in_exceptional_orbit(const Christoffel& gamma, double tol = 1e-8);

enum class GroupClass { GLPlus, GL };

enum class OrbitStatus {
    Equivalent,           ///< verified witness found
    SignatureMismatch,    ///< rho_s signatures differ; definitively inequivalent
    InvariantSeparation,  ///< torsion-free pair separated by (psi3, Psi3)
    NotEquivalent,        ///< candidate enumeration exhausted without a match
    Inconclusive,         ///< only the grid fallback was exercised
};

struct OrbitDecision {
    bool equivalent = false;
    OrbitStatus status = OrbitStatus::NotEquivalent;
    std::optional<GroupElement> witness;
    double residual = 0.0;  ///< relative action residual of the witness
};

std::string to_string(OrbitStatus s);

/// Decides whether some g in the chosen group carries gamma1 to gamma2 within
/// tol (relative residual).  Both rho_s must be nondegenerate.  True answers
/// come with a verified witness; false answers are definitive whenever the
/// residual-isometry candidate set is provably exhaustive, and Inconclusive
/// is reported in the rare case only the grid fallback could be used.
OrbitDecision orbit_equivalent(const Christoffel& gamma1, const Christoffel& gamma2,
                               GroupClass group = GroupClass::GLPlus, double tol = 1e-8);

}  // namespace affine
