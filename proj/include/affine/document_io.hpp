#pragma once

#include <iosfwd>
#include <optional>
#include <string>

#include <json.hpp>

#include "affine/core_algebra.hpp"

namespace affine {

/// A structure on disk: the eight coefficients keyed by their classical
/// 1-based names, plus an optional label.
///   { "gamma": { "G11_1": -1, "G11_2": 0, ..., "G22_2": 0 }, "label": "..." }
struct ConnectionDocument {
    Christoffel gamma;
    std::optional<std::string> label;
};

/// Raised for malformed documents (missing keys, non-finite entries, parse
/// errors); the CLI maps it to the input-error exit code.
struct DocumentError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

ConnectionDocument parse_connection(const nlohmann::json& j);
ConnectionDocument load_connection(const std::string& path);
nlohmann::ordered_json to_json(const ConnectionDocument& doc);

/// Full classification of one structure: torsion, Ricci data, signature,
/// scalar invariants, plane region, exceptional-orbit membership and
/// isotropy.  Fields that require torsion-freeness or nondegeneracy carry
/// "n/a" markers when the preconditions fail.
nlohmann::ordered_json classify_connection(const ConnectionDocument& doc, double tol = 1e-8);

}  // namespace affine
