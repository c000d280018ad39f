#include "affine/core_algebra.hpp"

#include <cmath>
#include <stdexcept>

namespace affine {

double Christoffel::max_abs() const {
    double m = 0.0;
    for (int i = 0; i < 2; ++i)
        for (int j = 0; j < 2; ++j)
            for (int k = 0; k < 2; ++k) m = std::max(m, std::abs(g[i][j][k]));
    return m;
}

bool Christoffel::torsion_free(double tol) const {
    const double scale = max_abs();
    for (int k = 0; k < 2; ++k)
        if (std::abs(g[0][1][k] - g[1][0][k]) > tol * scale) return false;
    return true;
}

Christoffel operator*(double s, const Christoffel& c) {
    Christoffel out;
    for (int i = 0; i < 2; ++i)
        for (int j = 0; j < 2; ++j)
            for (int k = 0; k < 2; ++k) out.g[i][j][k] = s * c.g[i][j][k];
    return out;
}

Christoffel operator+(const Christoffel& a, const Christoffel& b) {
    Christoffel out;
    for (int i = 0; i < 2; ++i)
        for (int j = 0; j < 2; ++j)
            for (int k = 0; k < 2; ++k) out.g[i][j][k] = a.g[i][j][k] + b.g[i][j][k];
    return out;
}

Christoffel operator-(const Christoffel& a, const Christoffel& b) {
    Christoffel out;
    for (int i = 0; i < 2; ++i)
        for (int j = 0; j < 2; ++j)
            for (int k = 0; k < 2; ++k) out.g[i][j][k] = a.g[i][j][k] - b.g[i][j][k];
    return out;
}

double distance(const Christoffel& a, const Christoffel& b) {
    return (a - b).max_abs();
}

double BilinearForm2::max_abs() const {
    double v = 0.0;
    for (int j = 0; j < 2; ++j)
        for (int k = 0; k < 2; ++k) v = std::max(v, std::abs(m[j][k]));
    return v;
}

bool BilinearForm2::is_symmetric(double tol) const {
    return std::abs(m[0][1] - m[1][0]) <= tol * std::max(1.0, max_abs());
}

double distance(const BilinearForm2& a, const BilinearForm2& b) {
    double v = 0.0;
    for (int j = 0; j < 2; ++j)
        for (int k = 0; k < 2; ++k) v = std::max(v, std::abs(a.m[j][k] - b.m[j][k]));
    return v;
}

Christoffel torsion(const Christoffel& g) {
    Christoffel t;
    for (int i = 0; i < 2; ++i)
        for (int j = 0; j < 2; ++j)
            for (int k = 0; k < 2; ++k) t.g[i][j][k] = g.g[i][j][k] - g.g[j][i][k];
    return t;
}

CurvatureTensor curvature(const Christoffel& g) {
    CurvatureTensor R;
    for (int i = 0; i < 2; ++i)
        for (int j = 0; j < 2; ++j)
            for (int k = 0; k < 2; ++k)
                for (int l = 0; l < 2; ++l) {
                    double acc = 0.0;
                    for (int n = 0; n < 2; ++n)
                        acc += g(i, n, l) * g(j, k, n) - g(j, n, l) * g(i, k, n);
                    R(i, j, k, l) = acc;
                }
    return R;
}

BilinearForm2 ricci(const Christoffel& g) {
    BilinearForm2 rho;
    for (int j = 0; j < 2; ++j)
        for (int k = 0; k < 2; ++k) {
            double acc = 0.0;
            for (int i = 0; i < 2; ++i)
                for (int n = 0; n < 2; ++n)
                    acc += g(i, n, i) * g(j, k, n) - g(j, n, i) * g(i, k, n);
            rho(j, k) = acc;
        }
    return rho;
}

BilinearForm2 ricci_symmetric(const Christoffel& g) {
    const BilinearForm2 rho = ricci(g);
    BilinearForm2 s;
    for (int j = 0; j < 2; ++j)
        for (int k = 0; k < 2; ++k) s(j, k) = 0.5 * (rho(j, k) + rho(k, j));
    // force bit-exact symmetry regardless of evaluation order
    s(1, 0) = s(0, 1);
    return s;
}

Signature signature(const BilinearForm2& b, double tol) {
    if (!b.is_symmetric(1e-12))
        throw std::invalid_argument("signature: form is not symmetric");

    const double scale = b.max_abs();
    const double det = b.det();
    Signature sig;
    if (std::abs(det) <= tol * scale * scale) {
        sig.degenerate = true;
        // rank-1 case: the sign of the nonzero eigenvalue is the sign of the trace
        const double tr = b.trace();
        if (scale > 0.0 && std::abs(tr) > tol * scale) {
            if (tr < 0.0)
                sig.p = 1;
            else
                sig.q = 1;
        }
        return sig;
    }
    if (det < 0.0) {
        sig.p = 1;
        sig.q = 1;
    } else if (b.trace() < 0.0) {
        sig.p = 2;
    } else {
        sig.q = 2;
    }
    return sig;
}

Christoffel gamma0() {
    Christoffel g;
    g(0, 0, 0) = -1.0;
    g(0, 1, 1) = 1.0;
    g(1, 0, 1) = 1.0;
    g(1, 1, 0) = 1.0;
    return g;
}

}  // namespace affine
