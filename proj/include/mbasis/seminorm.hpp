#pragma once

#include <cstdint>
#include <vector>

#include "mbasis/polynomial.hpp"
#include "mbasis/sup.hpp"

namespace mbasis {

/// The seminorm p_lambda of a Taylor truncation, estimated on one cloud:
/// the sum over degrees of the sup estimate of each homogeneous part. By
/// construction the value of a sum of parts is the sum of the parts' values.
double seminorm_p_lambda(const TaylorTruncation& f, const Cloud& cloud);

/// Overload drawing its own cloud (budget samples, no truncation cuts).
double seminorm_p_lambda(const TaylorTruncation& f, const CompactSetSpec& spec,
                         std::uint64_t budget, std::uint64_t seed);

/// Tail seminorms of f against its own partial sums: entry N is
/// p_lambda(f - S_N f) on the given cloud, for N = 0 .. total term count,
/// with the terms ordered by the global compatible order. Computed by
/// accumulating terms from the back, so entry [total] is exactly 0.
///
/// When every coefficient of f and every cloud coordinate is nonnegative
/// real, the curve is non-increasing entry by entry: dropping one more
/// nonnegative summand can only lower each per-degree maximum.
std::vector<double> tail_seminorm_curve(const TaylorTruncation& f, const Cloud& cloud);

}  // namespace mbasis
