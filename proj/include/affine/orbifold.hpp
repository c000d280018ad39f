#pragma once

#include <complex>

#include "affine/core_algebra.hpp"
#include "affine/group_action.hpp"

namespace affine {

using Complex = std::complex<double>;

/// Structure coefficients in the complex frame f1 = e1 + i e2, f2 = e1 - i e2
/// (dual frame f^1 = (e^1 - i e^2)/2, f^2 = (e^1 + i e^2)/2).  For a real
/// structure the frame coefficients at index-swapped slots are conjugate, so
/// the four entries
///     alpha = (G~_11^1, G~_11^2, G~_12^1, G~_12^2)
/// determine everything: G~_22^2 = conj(alpha[0]), G~_22^1 = conj(alpha[1]),
/// G~_21^2 = conj(alpha[2]), G~_21^1 = conj(alpha[3]).
struct ComplexChristoffel {
    std::array<Complex, 4> alpha{};

    Complex operator[](int s) const { return alpha[s]; }
    Complex& operator[](int s) { return alpha[s]; }

    double max_abs() const;
};

double distance(const ComplexChristoffel& a, const ComplexChristoffel& b);

/// Weights of the four alpha slots under rotation(theta): slot s of the
/// complexification is multiplied by exp(i * kAlphaWeight[s] * theta).
inline constexpr int kAlphaWeight[4] = {1, 3, -1, 1};

/// Coordinates of the transversal slices; the torsion-free slice sets
/// alpha1 == alpha2.
struct SliceCoords {
    Complex alpha1{};
    Complex alpha2{};
};

ComplexChristoffel complexify(const Christoffel& g);
Christoffel realify(const ComplexChristoffel& c);

/// The real matrix acting on the complex frame by
///   f1 -> beta1 f1 + beta2 f2,   f2 -> conj(beta2) f1 + conj(beta1) f2.
/// Lies in GL+ iff |beta1|^2 - |beta2|^2 > 0 (that value is its determinant);
/// anything else throws.
GroupElement complex_group_element(Complex beta1, Complex beta2);

/// Generator of the Z3 isotropy of the exceptional structure: rotation by
/// 2pi/3, i.e. complex_group_element(exp(2 pi i/3), 0).
GroupElement z3_rotation();

/// diag(1,-1): swaps f1 and f2, conjugating every complexified slot.
/// Orientation reversing; together with z3_rotation it generates a group of
/// order 6 isomorphic to S3.
GroupElement conjugation_reflection();

/// Base point of the transversal slices, realify((0,1,0,0)); a scalar
/// multiple of gamma0() lying on the same orbit.
Christoffel slice_base();

/// Derivative at t = 0 of t -> complexify(act(T_{1 + t beta1, t beta2},
/// slice_base())).  Closed form:
///   slot 11^1: -conj(beta2)      slot 11^2: 2 beta1 - conj(beta1)
///   slot 12^1:  beta2            slot 12^2:  conj(beta2)
ComplexChristoffel orbit_tangent(Complex beta1, Complex beta2);

/// Transversal slice in the full structure space: complexified slots
/// (0, 1, conj(alpha2), alpha1).
Christoffel slice_W(Complex alpha1, Complex alpha2);

/// Torsion-free slice, slice_W(alpha, alpha).
Christoffel slice_Z(Complex alpha);

/// || act(z3_rotation(), slice_W(a1,a2)) - slice_W(lambda a1, lambda a2) ||
/// for lambda = exp(2 pi i/3); zero up to roundoff for every (a1, a2).
double z3_equivariance_residual(Complex alpha1, Complex alpha2);

/// || act(diag(1,-1), slice_W(a1,a2)) - slice_W(conj a1, conj a2) ||.
double conjugation_equivariance_residual(Complex alpha1, Complex alpha2);

/// Rank of the 8x8 real matrix of the four orbit-tangent directions plus the
/// four slice directions at the base point; 8 means the slice is transverse
/// to the orbit.  Pivot threshold is relative to the largest entry.
int orbit_slice_rank(double threshold = 1e-8);

}  // namespace affine
