#pragma once

#include <array>
#include <cstddef>

namespace affine {

/// Connection coefficients Gamma_ij^k of a planar affine connection with
/// constant Christoffel symbols, torsion allowed.  The eight entries are the
/// coordinates of the structure in R^8.
///
/// Indices are 0-based in code; printed names follow the classical 1-based
/// convention (entry (0,0,1) is "G11_2" and so on).
struct Christoffel {
    std::array<std::array<std::array<double, 2>, 2>, 2> g{};

    double operator()(int i, int j, int k) const { return g[i][j][k]; }
    double& operator()(int i, int j, int k) { return g[i][j][k]; }

    /// Max-abs entry; the norm used for all relative tolerances.
    double max_abs() const;

    bool torsion_free(double tol = 0.0) const;

    friend Christoffel operator*(double s, const Christoffel& c);
    friend Christoffel operator+(const Christoffel& a, const Christoffel& b);
    friend Christoffel operator-(const Christoffel& a, const Christoffel& b);
};

/// Difference of two structures in the max-abs norm.
double distance(const Christoffel& a, const Christoffel& b);

/// A bilinear form on R^2, stored as a plain 2x2 matrix.  Hosts the Ricci
/// tensor, its symmetrization and the auxiliary quadratic contraction used by
/// the scalar invariants.
struct BilinearForm2 {
    std::array<std::array<double, 2>, 2> m{};

    double operator()(int j, int k) const { return m[j][k]; }
    double& operator()(int j, int k) { return m[j][k]; }

    double det() const { return m[0][0] * m[1][1] - m[0][1] * m[1][0]; }
    double trace() const { return m[0][0] + m[1][1]; }
    double max_abs() const;

    bool is_symmetric(double tol = 0.0) const;

    static BilinearForm2 diag(double a, double b) { return {{{{a, 0.0}, {0.0, b}}}}; }
};

double distance(const BilinearForm2& a, const BilinearForm2& b);

/// Signature of a symmetric bilinear form.
///
/// Convention: p counts NEGATIVE eigenvalues and q counts positive ones, so
/// diag(-1,-1) has signature (2,0).  This is the opposite of one common
/// convention; every consumer in this library follows it.
struct Signature {
    int p = 0;  ///< number of negative eigenvalues
    int q = 0;  ///< number of positive eigenvalues
    bool degenerate = false;

    bool operator==(const Signature&) const = default;
    bool definite() const { return !degenerate && (p == 2 || q == 2); }
};

/// Curvature components R_ijk^l.  Antisymmetric in the first index pair.
struct CurvatureTensor {
    std::array<std::array<std::array<std::array<double, 2>, 2>, 2>, 2> r{};

    double operator()(int i, int j, int k, int l) const { return r[i][j][k][l]; }
    double& operator()(int i, int j, int k, int l) { return r[i][j][k][l]; }
};

/// Relative determinant threshold below which a form counts as degenerate:
/// |det b| <= tol * max_abs(b)^2.  Scale-invariant under Gamma -> s*Gamma.
inline constexpr double kDegeneracyTol = 1e-9;

/// T_ij^k = Gamma_ij^k - Gamma_ji^k; identically zero iff torsion free.
Christoffel torsion(const Christoffel& g);

/// R_ijk^l = Gamma_in^l Gamma_jk^n - Gamma_jn^l Gamma_ik^n.  The derivative
/// terms of the general curvature formula vanish because the coefficients are
/// constant.
CurvatureTensor curvature(const Christoffel& g);

/// Ricci tensor rho_jk = Gamma_in^i Gamma_jk^n - Gamma_jn^i Gamma_ik^n,
/// equivalently the contraction rho_jk = sum_i R_ijk^i.  Not symmetric in
/// general when torsion is present.
BilinearForm2 ricci(const Christoffel& g);

/// rho_s = (rho + rho^T)/2, exactly symmetric by construction.
BilinearForm2 ricci_symmetric(const Christoffel& g);

/// Signature of a symmetric form, decided in closed form from det and trace
/// of the 2x2 matrix (no iterative eigensolver).  Throws std::invalid_argument
/// if b is not symmetric.
Signature signature(const BilinearForm2& b, double tol = kDegeneracyTol);

/// The exceptional structure: G11_1 = -1, G12_2 = G21_2 = G22_1 = 1, rest 0.
/// Torsion free, with rho_s = diag(-2,-2); the only structure type (up to the
/// group action) with nontrivial orientation-preserving isotropy.
Christoffel gamma0();

}  // namespace affine
