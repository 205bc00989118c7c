#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "mbasis/sup.hpp"

namespace mbasis {

/// Outcome of the randomized basis-constant experiment for one degree.
struct BasisConstantReport {
    std::uint32_t degree = 0;
    std::uint32_t truncation = 0;  // largest monomial length k in the basis
    double c_hat = 1.0;            // largest partial/full sup ratio observed
    double c_hat_root = 1.0;       // c_hat^(1/degree)
    std::uint64_t worst_cut_s = 0;
    std::uint64_t worst_cut_t = 0;
    std::vector<Complex> worst_coefficients;
    Point worst_witness_numerator;
    Point worst_witness_denominator;
    double p0_estimate = 1.0;
    double envelope_a = 3.0;  // 1 + 2 * p0_estimate
    std::uint64_t skipped_trials = 0;
    std::uint64_t trials = 0;
    std::uint64_t budget = 0;
};

/// Estimates the basis constant of the square-ordered degree-n monomial
/// basis truncated to length <= k, over A_lambda. Each trial draws complex
/// standard-normal coefficients, shares one truncation-closed cloud between
/// the numerator and denominator, and scans every cut s < T against the full
/// sum; two probe trials concentrated on a single monomial pin the ratio 1,
/// so the estimate is a witnessed lower bound >= 1. Trials whose full sum
/// stays below 1e-14 on the cloud are skipped and counted.
BasisConstantReport basis_constant_estimate(std::uint32_t degree, std::uint32_t k,
                                            const CompactSetSpec& spec, std::uint64_t trials,
                                            std::uint64_t budget, std::uint64_t seed);

/// Largest observed ratio ||e*_{k+1}|| * ||S|| / ||e*_{k+1} S|| over random
/// degree-n polynomials S supported on the first k coordinates, with all
/// three sups taken on one shared cloud. Always >= 1, since the point where
/// the product attains its max bounds both factors. The spec must cover
/// coordinate k+1.
double estimate_p0(const CompactSetSpec& spec, std::uint32_t degree, std::uint32_t k,
                   std::uint64_t trials, std::uint64_t budget, std::uint64_t seed,
                   std::uint64_t* skipped_trials = nullptr);

/// One cut comparison inside the length-graded monotonicity report.
struct LengthCutRow {
    std::uint32_t s = 0;
    std::uint32_t t = 0;
    double partial_sup = 0.0;
    double full_sup = 0.0;
};

struct LengthMonotonicityReport {
    bool pass = false;
    double worst_gap = 0.0;  // max over cuts of partial_sup - full_sup
    std::vector<LengthCutRow> rows;
};

/// Checks, without any tolerance, that the cloud sup of sum_{u<=s} Q_u never
/// exceeds the cloud sup of sum_{u<=t} Q_u for s < t. strata[u-1] must be
/// supported on monomials of length exactly u, and the cloud must be closed
/// under truncation at every stratum boundary; the truncated copy of any
/// cloud point evaluates the longer sum to exactly the shorter one, which is
/// what makes the comparison exact.
LengthMonotonicityReport length_graded_monotonicity_check(
    std::span<const HomogeneousPolynomial> strata, const CompactSetSpec& spec, const Cloud& cloud);

}  // namespace mbasis
