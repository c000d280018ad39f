#pragma once

#include <utility>

#include "affine/core_algebra.hpp"

namespace affine {

/// The complete oriented invariant (psi3, Psi3, chi) of a torsion-free
/// structure with rank-2 Ricci tensor.  (psi3, Psi3) alone classifies
/// unoriented structures; chi separates the two orientations and flips sign
/// under orientation-reversing basis changes.
struct InvariantVector {
    double psi3 = 0.0;
    double Psi3 = 0.0;
    double chi = 0.0;
};

/// rho3_ij = Gamma_ik^l Gamma_jl^k.  Defined for every structure.
BilinearForm2 rho3(const Christoffel& g);

/// psi3 = rho^{ij} rho3_ij, the rho-trace of rho3 (rho^{ij} is the matrix
/// inverse of the Ricci tensor).  Scale invariant and constant on GL orbits.
///
/// Requires a torsion-free structure with rank-2 rho; throws std::domain_error
/// otherwise.  Passing allow_torsion = true skips the torsion gate and
/// evaluates the same contraction with no orbit-invariance guarantee.
double psi3(const Christoffel& g, bool allow_torsion = false);

/// Psi3 = det(rho3) / det(rho).  Same preconditions as psi3.
double Psi3(const Christoffel& g, bool allow_torsion = false);

/// chi = <omega, dvol>_rho for the 2-form
///   omega = Gamma_ab^b Gamma_ij^k rho3_kl rho^{ij} dx^a /\ dx^l
/// with dvol = sqrt(|det rho|) dx^1 /\ dx^2 and the rho-induced pairing
/// <dx^1 /\ dx^2, dx^1 /\ dx^2> = 1/det(rho).  Constant on GL+ orbits.
/// Same preconditions as psi3; the orientation is the standard one.
double chi(const Christoffel& g, bool allow_torsion = false);

/// (psi3, Psi3): the unoriented classifying pair.
std::pair<double, double> theta_invariants(const Christoffel& g, bool allow_torsion = false);

/// (psi3, Psi3, chi): the oriented classifying triple.
InvariantVector xi_invariants(const Christoffel& g, bool allow_torsion = false);

}  // namespace affine
