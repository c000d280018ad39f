// Command-line front end: classify structures, decide orbit equivalence, emit
// the boundary-curve and region data, and run the verification suites.
//
// Exit codes: 0 success, 1 verification failure, 2 usage or input error,
// 3 inconclusive equivalence verdict.

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "affine/document_io.hpp"
#include "affine/group_action.hpp"
#include "affine/moduli_map.hpp"
#include "affine/verify.hpp"

namespace {

std::string fmt17(double v) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.17g", v);
    return buf;
}

int run_classify(const std::string& input, double tol) {
    const affine::ConnectionDocument doc = affine::load_connection(input);
    std::cout << affine::classify_connection(doc, tol).dump(2) << "\n";
    return 0;
}

int run_orbit_check(const std::string& a_path, const std::string& b_path,
                    const std::string& group, double tol) {
    const affine::ConnectionDocument a = affine::load_connection(a_path);
    const affine::ConnectionDocument b = affine::load_connection(b_path);
    const affine::GroupClass cls =
        group == "gl" ? affine::GroupClass::GL : affine::GroupClass::GLPlus;
    const affine::OrbitDecision d = affine::orbit_equivalent(a.gamma, b.gamma, cls, tol);

    nlohmann::ordered_json out;
    out["equivalent"] = d.equivalent;
    out["status"] = affine::to_string(d.status);
    if (d.witness) {
        const affine::GroupElement& w = *d.witness;
        out["witness"] = nlohmann::ordered_json::array(
            {nlohmann::ordered_json::array({w(0, 0), w(0, 1)}),
             nlohmann::ordered_json::array({w(1, 0), w(1, 1)})});
        out["residual"] = d.residual;
    }
    std::cout << out.dump(2) << "\n";
    return d.status == affine::OrbitStatus::Inconclusive ? 3 : 0;
}

void write_curve(const std::string& path, affine::CurveSign sign) {
    // fixed log grid over the classifier window, with the cusp parameter
    // injected so the cusp row is always present
    const int n = 4096;
    std::vector<affine::CurveSample> pts =
        affine::emit_curve(sign, affine::kCurveParamMin, affine::kCurveParamMax, n);
    const double tc = 1.0 / std::sqrt(2.0);
    const affine::PlanePoint cusp_pt = affine::sigma(sign, tc);
    affine::CurveSample cusp{tc, cusp_pt.x, cusp_pt.y};
    auto it = std::lower_bound(pts.begin(), pts.end(), cusp,
                               [](const auto& l, const auto& r) { return l.t < r.t; });
    if (it == pts.end() || it->t != cusp.t) pts.insert(it, cusp);

    std::ofstream out(path);
    if (!out) throw std::runtime_error("cannot write " + path);
    out << "t,x,y\n";
    for (const auto& p : pts)
        out << fmt17(p.t) << "," << fmt17(p.x) << "," << fmt17(p.y) << "\n";
    if (!out) throw std::runtime_error("write failed: " + path);
}

int run_figure(const std::string& bounds_str, int resolution, const std::string& prefix,
               double tol) {
    affine::GridBounds bounds;
    if (std::sscanf(bounds_str.c_str(), "%lf,%lf,%lf,%lf", &bounds.x0, &bounds.x1, &bounds.y0,
                    &bounds.y1) != 4)
        throw affine::DocumentError("--bounds expects x0,x1,y0,y1");

    write_curve(prefix + "sigma_plus.csv", affine::CurveSign::Plus);
    write_curve(prefix + "sigma_minus.csv", affine::CurveSign::Minus);

    const auto grid = affine::region_grid(bounds, resolution, tol);
    const std::string rpath = prefix + "regions.csv";
    std::ofstream out(rpath);
    if (!out) throw std::runtime_error("cannot write " + rpath);
    out << "x,y,label\n";
    for (const auto& p : grid)
        out << fmt17(p.x) << "," << fmt17(p.y) << "," << affine::to_string(p.label) << "\n";
    if (!out) throw std::runtime_error("write failed: " + rpath);
    return 0;
}

int run_verify(const std::string& suite, int samples, std::uint64_t seed) {
    if (samples == 0)
        std::cout << "warning: --samples=0, randomized properties are vacuous\n";
    const std::vector<affine::PropertyResult> results =
        suite == "all" ? affine::run_all_suites(samples, seed)
                       : affine::run_suite(suite, samples, seed);
    int failures = 0;
    for (const auto& r : results) {
        std::cout << (r.passed ? "[PASS] " : "[FAIL] ") << r.suite << "/" << r.name;
        if (!r.detail.empty()) std::cout << "  (" << r.detail << ")";
        std::cout << "\n";
        if (!r.passed) ++failures;
    }
    std::cout << results.size() - failures << "/" << results.size()
              << " properties passed (samples=" << samples << ", seed=" << seed << ")\n";
    return failures == 0 ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Curvature, invariants and moduli data of planar affine structures "
                 "with constant coefficients"};
    app.require_subcommand(1);

    double tol = 1e-8;
    app.add_option("--tol", tol, "relative tolerance for torsion/equivalence tests")
        ->capture_default_str();

    auto* classify = app.add_subcommand("classify", "classify one structure document");
    std::string classify_input;
    classify->add_option("input", classify_input, "connection JSON file")->required();

    auto* orbit = app.add_subcommand("orbit-check", "decide orbit equivalence of two documents");
    std::string orbit_a, orbit_b, orbit_group = "glplus";
    orbit->add_option("a", orbit_a, "first connection JSON file")->required();
    orbit->add_option("b", orbit_b, "second connection JSON file")->required();
    orbit->add_option("--group", orbit_group, "group to quotient by")
        ->check(CLI::IsMember({"glplus", "gl"}))
        ->capture_default_str();

    auto* figure = app.add_subcommand("figure", "emit boundary curves and region raster as CSV");
    std::string bounds = "-10,10,0,10";
    int resolution = 64;
    std::string prefix;
    figure->add_option("--bounds", bounds, "x0,x1,y0,y1 window for the region raster")
        ->capture_default_str();
    figure->add_option("--resolution", resolution, "raster points per axis")
        ->check(CLI::Range(2, 100000))
        ->capture_default_str();
    figure->add_option("--out-prefix", prefix, "prefix for sigma_plus/sigma_minus/regions CSVs");

    auto* verify = app.add_subcommand("verify", "run the property suites");
    std::string suite = "all";
    int samples = 1000;
    std::uint64_t seed = 42;
    verify->add_option("--suite", suite, "which suite to run")
        ->check(CLI::IsMember({"all", "core", "action", "invariants", "map", "fixed",
                               "orbifold"}))
        ->capture_default_str();
    verify->add_option("--samples", samples, "sample count per randomized property")
        ->check(CLI::NonNegativeNumber)
        ->capture_default_str();
    verify->add_option("--seed", seed, "generator seed")->capture_default_str();

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    }

    if (const char* env_seed = std::getenv("AFFINE_MODULI_SEED")) {
        try {
            seed = std::stoull(env_seed);
        } catch (...) {
            std::cerr << "error: AFFINE_MODULI_SEED is not an integer\n";
            return 2;
        }
    }

    try {
        if (classify->parsed()) return run_classify(classify_input, tol);
        if (orbit->parsed()) return run_orbit_check(orbit_a, orbit_b, orbit_group, tol);
        if (figure->parsed()) return run_figure(bounds, resolution, prefix, tol);
        if (verify->parsed()) return run_verify(suite, samples, seed);
    } catch (const affine::DocumentError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 2;
}
