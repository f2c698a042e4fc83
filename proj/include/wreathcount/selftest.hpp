#pragma once

#include <string>
#include <vector>

#include "wreathcount/config.hpp"

namespace wreathcount {

struct SelftestCheck {
    std::string name;
    bool pass;
    std::string detail;
};

struct SelftestResult {
    std::vector<SelftestCheck> checks;
    bool all_pass = true;
};

/// The module invariant battery at reduced sizes. `inject_fault` is a named
/// deliberate corruption (currently "distribution") used to verify that the
/// battery actually detects failures.
SelftestResult run_selftest(bool quick, const Config& cfg, const std::string& inject_fault = "");

} // namespace wreathcount
