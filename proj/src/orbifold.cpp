#include "affine/orbifold.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

namespace affine {

namespace {

constexpr double kPi = std::numbers::pi;

// Frame matrix of (2.b): rows are f1, f2 in the e-basis, and its inverse.
const Complex kF[2][2] = {{{1.0, 0.0}, {0.0, 1.0}}, {{1.0, 0.0}, {0.0, -1.0}}};
const Complex kFinv[2][2] = {{{0.5, 0.0}, {0.5, 0.0}}, {{0.0, -0.5}, {0.0, 0.5}}};

// act with complex coefficients: out_ij^k = A_i^a A_j^b Ainv_c^k in_ab^c.
void complex_act(const Complex A[2][2], const Complex Ainv[2][2],
                 const Complex in[2][2][2], Complex out[2][2][2]) {
    for (int i = 0; i < 2; ++i)
        for (int j = 0; j < 2; ++j)
            for (int k = 0; k < 2; ++k) {
                Complex acc = 0.0;
                for (int a = 0; a < 2; ++a)
                    for (int b = 0; b < 2; ++b)
                        for (int c = 0; c < 2; ++c)
                            acc += A[i][a] * A[j][b] * Ainv[c][k] * in[a][b][c];
                out[i][j][k] = acc;
            }
}

}  // namespace

double ComplexChristoffel::max_abs() const {
    double m = 0.0;
    for (const Complex& v : alpha) m = std::max(m, std::abs(v));
    return m;
}

double distance(const ComplexChristoffel& a, const ComplexChristoffel& b) {
    double m = 0.0;
    for (int s = 0; s < 4; ++s) m = std::max(m, std::abs(a[s] - b[s]));
    return m;
}

ComplexChristoffel complexify(const Christoffel& g) {
    Complex in[2][2][2];
    for (int i = 0; i < 2; ++i)
        for (int j = 0; j < 2; ++j)
            for (int k = 0; k < 2; ++k) in[i][j][k] = g(i, j, k);
    Complex out[2][2][2];
    complex_act(kF, kFinv, in, out);
    ComplexChristoffel c;
    c[0] = out[0][0][0];
    c[1] = out[0][0][1];
    c[2] = out[0][1][0];
    c[3] = out[0][1][1];
    return c;
}

Christoffel realify(const ComplexChristoffel& c) {
    Complex in[2][2][2];
    in[0][0][0] = c[0];
    in[0][0][1] = c[1];
    in[0][1][0] = c[2];
    in[0][1][1] = c[3];
    in[1][1][1] = std::conj(c[0]);
    in[1][1][0] = std::conj(c[1]);
    in[1][0][1] = std::conj(c[2]);
    in[1][0][0] = std::conj(c[3]);
    Complex out[2][2][2];
    complex_act(kFinv, kF, in, out);
    Christoffel g;
    for (int i = 0; i < 2; ++i)
        for (int j = 0; j < 2; ++j)
            for (int k = 0; k < 2; ++k) g(i, j, k) = out[i][j][k].real();
    return g;
}

GroupElement complex_group_element(Complex beta1, Complex beta2) {
    const double d = std::norm(beta1) - std::norm(beta2);
    if (!(d > 0.0))
        throw std::invalid_argument(
            "complex_group_element: |beta1|^2 - |beta2|^2 must be positive");
    GroupElement g;
    g(0, 0) = beta1.real() + beta2.real();
    g(0, 1) = beta2.imag() - beta1.imag();
    g(1, 0) = beta1.imag() + beta2.imag();
    g(1, 1) = beta1.real() - beta2.real();
    return g;
}

GroupElement z3_rotation() { return GroupElement::rotation(2.0 * kPi / 3.0); }

GroupElement conjugation_reflection() { return GroupElement::diagonal(1.0, -1.0); }

Christoffel slice_base() {
    ComplexChristoffel c;
    c[1] = 1.0;
    return realify(c);
}

ComplexChristoffel orbit_tangent(Complex beta1, Complex beta2) {
    ComplexChristoffel t;
    t[0] = -std::conj(beta2);
    t[1] = 2.0 * beta1 - std::conj(beta1);
    t[2] = beta2;
    t[3] = std::conj(beta2);
    return t;
}

Christoffel slice_W(Complex alpha1, Complex alpha2) {
    ComplexChristoffel c;
    c[0] = 0.0;
    c[1] = 1.0;
    c[2] = std::conj(alpha2);
    c[3] = alpha1;
    return realify(c);
}

Christoffel slice_Z(Complex alpha) { return slice_W(alpha, alpha); }

double z3_equivariance_residual(Complex alpha1, Complex alpha2) {
    const Complex lambda = std::polar(1.0, 2.0 * kPi / 3.0);
    const Christoffel lhs = act(z3_rotation(), slice_W(alpha1, alpha2));
    const Christoffel rhs = slice_W(lambda * alpha1, lambda * alpha2);
    return distance(lhs, rhs);
}

double conjugation_equivariance_residual(Complex alpha1, Complex alpha2) {
    const Christoffel lhs = act(conjugation_reflection(), slice_W(alpha1, alpha2));
    const Christoffel rhs = slice_W(std::conj(alpha1), std::conj(alpha2));
    return distance(lhs, rhs);
}

int orbit_slice_rank(double threshold) {
    // Columns: orbit tangents for beta1, i beta1, beta2, i beta2, then slice
    // directions for alpha1, i alpha1, alpha2, i alpha2.  Rows: Re/Im of the
    // four complexified slots.
    double m[8][8] = {};
    auto put = [&m](int col, const ComplexChristoffel& v) {
        for (int s = 0; s < 4; ++s) {
            m[2 * s][col] = v[s].real();
            m[2 * s + 1][col] = v[s].imag();
        }
    };
    put(0, orbit_tangent(1.0, 0.0));
    put(1, orbit_tangent(Complex(0.0, 1.0), 0.0));
    put(2, orbit_tangent(0.0, 1.0));
    put(3, orbit_tangent(0.0, Complex(0.0, 1.0)));
    ComplexChristoffel da1, da1i, da2, da2i;
    da1[3] = 1.0;
    da1i[3] = Complex(0.0, 1.0);
    da2[2] = 1.0;                 // slot 12^1 carries conj(alpha2)
    da2i[2] = Complex(0.0, -1.0);
    put(4, da1);
    put(5, da1i);
    put(6, da2);
    put(7, da2i);

    double scale = 0.0;
    for (auto& row : m)
        for (double v : row) scale = std::max(scale, std::abs(v));
    if (scale == 0.0) return 0;

    // Gaussian elimination with partial pivoting; rank = pivots above threshold.
    int rank = 0;
    for (int col = 0; col < 8 && rank < 8; ++col) {
        int piv = -1;
        double best = threshold * scale;
        for (int r = rank; r < 8; ++r)
            if (std::abs(m[r][col]) > best) {
                best = std::abs(m[r][col]);
                piv = r;
            }
        if (piv < 0) continue;
        std::swap(m[piv], m[rank]);
        for (int r = rank + 1; r < 8; ++r) {
            const double f = m[r][col] / m[rank][col];
            for (int c2 = col; c2 < 8; ++c2) m[r][c2] -= f * m[rank][c2];
        }
        ++rank;
    }
    return rank;
}

}  // namespace affine
