#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace mbasis {

struct InvariantResult {
    std::string suite;
    bool pass = false;
    double residual = 0.0;  // worst observed violation margin; finite always
};

struct InvariantOptions {
    std::uint64_t seed = 1;
    /// Deliberately inflates a shrunk coordinate in the solidity suite so
    /// that the suite fails; a self-test that the checker can see failures.
    bool perturb_solidity = false;
};

/// Runs every property suite of the library at desk-scale sizes and reports
/// one row per suite. All randomness derives from options.seed.
std::vector<InvariantResult> run_invariants(const InvariantOptions& options);

}  // namespace mbasis
