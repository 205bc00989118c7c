#pragma once

#include <cstdint>
#include <vector>

#include "mbasis/compact_set.hpp"
#include "mbasis/point.hpp"

namespace mbasis {

struct SampleOptions {
    /// Fraction of draws scaled so that at least one constraint is tight.
    double boundary_fraction = 0.25;
    /// Probability that an individual coordinate is left at zero, to give the
    /// sample stream support variety.
    double coordinate_dropout = 0.2;
    /// Draw nonnegative real coordinates instead of random phases.
    bool nonneg = false;
};

/// A member of A_lambda, deterministic for a fixed (spec, seed, options)
/// triple. Magnitudes are drawn freely and rescaled to satisfy every
/// constraint; boundary draws rescale one constraint to equality.
Point sample_point(const CompactSetSpec& spec, std::uint64_t seed, const SampleOptions& options);

Point sample_point(const CompactSetSpec& spec, std::uint64_t seed);

/// count members with per-index seeds mix_seed(base_seed, index), so a longer
/// run extends a shorter one with the same base seed.
std::vector<Point> sample_points(const CompactSetSpec& spec, std::size_t count,
                                 std::uint64_t base_seed, const SampleOptions& options = {});

}  // namespace mbasis
