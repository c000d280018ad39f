#include "affine/invariants.hpp"

#include <cmath>
#include <stdexcept>

namespace affine {

namespace {

struct Prepared {
    BilinearForm2 rho;
    BilinearForm2 rho_inv;
    BilinearForm2 r3;
    double det_rho;
};

Prepared prepare(const Christoffel& g, bool allow_torsion, const char* who) {
    if (!allow_torsion && !g.torsion_free(1e-12))
        throw std::domain_error(std::string(who) + ": structure has torsion");
    Prepared p;
    p.rho = ricci(g);
    p.det_rho = p.rho.det();
    const double n = p.rho.max_abs();
    if (std::abs(p.det_rho) <= kDegeneracyTol * n * n)
        throw std::domain_error(std::string(who) + ": Ricci tensor has rank < 2");
    p.rho_inv(0, 0) = p.rho(1, 1) / p.det_rho;
    p.rho_inv(0, 1) = -p.rho(0, 1) / p.det_rho;
    p.rho_inv(1, 0) = -p.rho(1, 0) / p.det_rho;
    p.rho_inv(1, 1) = p.rho(0, 0) / p.det_rho;
    p.r3 = rho3(g);
    return p;
}

}  // namespace

BilinearForm2 rho3(const Christoffel& g) {
    BilinearForm2 out;
    for (int i = 0; i < 2; ++i)
        for (int j = 0; j < 2; ++j) {
            double acc = 0.0;
            for (int k = 0; k < 2; ++k)
                for (int l = 0; l < 2; ++l) acc += g(i, k, l) * g(j, l, k);
            out(i, j) = acc;
        }
    return out;
}

double psi3(const Christoffel& g, bool allow_torsion) {
    const Prepared p = prepare(g, allow_torsion, "psi3");
    double acc = 0.0;
    for (int i = 0; i < 2; ++i)
        for (int j = 0; j < 2; ++j) acc += p.rho_inv(i, j) * p.r3(i, j);
    return acc;
}

double Psi3(const Christoffel& g, bool allow_torsion) {
    const Prepared p = prepare(g, allow_torsion, "Psi3");
    return p.r3.det() / p.det_rho;
}

double chi(const Christoffel& g, bool allow_torsion) {
    const Prepared p = prepare(g, allow_torsion, "chi");
    // v_a = Gamma_ab^b
    const double v[2] = {g(0, 0, 0) + g(0, 1, 1), g(1, 0, 0) + g(1, 1, 1)};
    // w_l = rho^{ij} Gamma_ij^k rho3_kl
    double w[2] = {0.0, 0.0};
    for (int l = 0; l < 2; ++l)
        for (int i = 0; i < 2; ++i)
            for (int j = 0; j < 2; ++j)
                for (int k = 0; k < 2; ++k)
                    w[l] += p.rho_inv(i, j) * g(i, j, k) * p.r3(k, l);
    const double coeff = v[0] * w[1] - v[1] * w[0];
    return coeff * std::sqrt(std::abs(p.det_rho)) / p.det_rho;
}

std::pair<double, double> theta_invariants(const Christoffel& g, bool allow_torsion) {
    return {psi3(g, allow_torsion), Psi3(g, allow_torsion)};
}

InvariantVector xi_invariants(const Christoffel& g, bool allow_torsion) {
    return {psi3(g, allow_torsion), Psi3(g, allow_torsion), chi(g, allow_torsion)};
}

}  // namespace affine
