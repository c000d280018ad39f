#include "affine/document_io.hpp"

#include <cmath>
#include <fstream>

#include "affine/group_action.hpp"
#include "affine/invariants.hpp"
#include "affine/moduli_map.hpp"

namespace affine {

namespace {

// key order matches the classical listing of the eight coefficients
constexpr const char* kGammaKeys[8] = {"G11_1", "G11_2", "G12_1", "G12_2",
                                       "G21_1", "G21_2", "G22_1", "G22_2"};

double& slot(Christoffel& g, int flat) {
    const int i = flat / 4, j = (flat / 2) % 2, k = flat % 2;
    return g.g[i][j][k];
}

double slot(const Christoffel& g, int flat) {
    const int i = flat / 4, j = (flat / 2) % 2, k = flat % 2;
    return g.g[i][j][k];
}

nlohmann::ordered_json matrix_json(const BilinearForm2& b) {
    return nlohmann::ordered_json::array(
        {nlohmann::ordered_json::array({b(0, 0), b(0, 1)}),
         nlohmann::ordered_json::array({b(1, 0), b(1, 1)})});
}

nlohmann::ordered_json matrix_json(const GroupElement& g) {
    return nlohmann::ordered_json::array(
        {nlohmann::ordered_json::array({g(0, 0), g(0, 1)}),
         nlohmann::ordered_json::array({g(1, 0), g(1, 1)})});
}

}  // namespace

ConnectionDocument parse_connection(const nlohmann::json& j) {
    if (!j.is_object() || !j.contains("gamma") || !j["gamma"].is_object())
        throw DocumentError("document must be an object with a \"gamma\" object");
    ConnectionDocument doc;
    const nlohmann::json& g = j["gamma"];
    for (int f = 0; f < 8; ++f) {
        const char* key = kGammaKeys[f];
        if (!g.contains(key))
            throw DocumentError(std::string("missing coefficient \"") + key + "\"");
        if (!g[key].is_number())
            throw DocumentError(std::string("coefficient \"") + key + "\" is not a number");
        const double v = g[key].get<double>();
        if (!std::isfinite(v))
            throw DocumentError(std::string("coefficient \"") + key + "\" is not finite");
        slot(doc.gamma, f) = v;
    }
    if (j.contains("label")) {
        if (!j["label"].is_string()) throw DocumentError("\"label\" must be a string");
        doc.label = j["label"].get<std::string>();
    }
    return doc;
}

ConnectionDocument load_connection(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw DocumentError("cannot open " + path);
    nlohmann::json j;
    try {
        in >> j;
    } catch (const nlohmann::json::exception& e) {
        throw DocumentError(path + ": " + e.what());
    }
    return parse_connection(j);
}

nlohmann::ordered_json to_json(const ConnectionDocument& doc) {
    nlohmann::ordered_json g;
    for (int f = 0; f < 8; ++f) g[kGammaKeys[f]] = slot(doc.gamma, f);
    nlohmann::ordered_json out;
    out["gamma"] = std::move(g);
    if (doc.label) out["label"] = *doc.label;
    return out;
}

nlohmann::ordered_json classify_connection(const ConnectionDocument& doc, double tol) {
    const Christoffel& g = doc.gamma;
    nlohmann::ordered_json out;
    if (doc.label) out["label"] = *doc.label;

    const bool tf = g.torsion_free(1e-12);
    out["torsion_free"] = tf;
    const BilinearForm2 rho = ricci(g);
    const BilinearForm2 rho_s = ricci_symmetric(g);
    out["ricci"] = matrix_json(rho);
    out["ricci_symmetric"] = matrix_json(rho_s);

    const Signature sig = signature(rho_s);
    if (sig.degenerate)
        out["signature"] = "degenerate";
    else
        out["signature"] = nlohmann::ordered_json::array({sig.p, sig.q});

    const double rho_norm = rho.max_abs();
    const bool rank2 = std::abs(rho.det()) > kDegeneracyTol * rho_norm * rho_norm;
    if (tf && rank2) {
        const InvariantVector v = xi_invariants(g);
        out["invariants"] = {{"psi3", v.psi3}, {"Psi3", v.Psi3}, {"chi", v.chi}};
        out["region"] = to_string(classify_point({v.psi3, v.Psi3}, tol));
    } else {
        out["invariants"] = tf ? "n/a (degenerate)" : "n/a (torsion)";
        out["region"] = "n/a";
    }

    out["exceptional_orbit"] = in_exceptional_orbit(g, tol);
    if (sig.degenerate) {
        out["isotropy"] = "n/a (degenerate)";
    } else {
        const IsotropyResult iso = isotropy_nontrivial(g, tol);
        if (iso.nontrivial) {
            nlohmann::ordered_json w;
            w["Z3_witness"] = matrix_json(*iso.witness);
            out["isotropy"] = std::move(w);
        } else {
            out["isotropy"] = "trivial";
        }
    }
    return out;
}

}  // namespace affine
