#pragma once

#include <string>
#include <vector>

namespace bdm
{

struct CheckResult {
    std::string name;
    bool passed = false;
    std::string detail;
};

/// Aggregate of module invariants: basis identities, quadrature against the
/// exact kernel, proof power sums, constant gating, hard moment checks,
/// the -A-B decomposition and case classification.
std::vector<CheckResult> run_selftest();

} // namespace bdm
