#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace sixstate {

struct CheckResult {
    std::string name;
    bool pass = false;
    double residual = 0.0;
    double tolerance = 0.0;
};

struct VerifyOptions {
    bool fast = false;
    std::uint64_t seed = 20240601;
    // test-harness hook: perturb a block projector to prove the negative path
    bool inject_projector_perturbation = false;
};

/// Runs the invariant suites of every module; `fast` skips photon numbers
/// above 5 and the Monte Carlo sampling checks.
std::vector<CheckResult> run_verify(const VerifyOptions& opts);

}  // namespace sixstate
