#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace affine {

struct PropertyResult {
    std::string suite;
    std::string name;
    bool passed = true;
    std::string detail;  ///< falsifying sample or summary statistics
};

/// Names accepted by run_suite, in canonical order.
const std::vector<std::string>& suite_names();

/// Runs one property suite.  `samples` scales every randomized property;
/// 0 makes them vacuous (fixed-value assertions still run).  Each property
/// draws from its own generator seeded with `seed` xor a hash of the property
/// name, so results replay per property regardless of execution order.
std::vector<PropertyResult> run_suite(const std::string& suite, int samples,
                                      std::uint64_t seed);

std::vector<PropertyResult> run_all_suites(int samples, std::uint64_t seed);

}  // namespace affine
