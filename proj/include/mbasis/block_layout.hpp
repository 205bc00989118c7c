#pragma once

#include <cmath>
#include <cstdint>
#include <stdexcept>

namespace mbasis {

/// Closed integer interval [first, last] of 1-based coordinate indices.
struct IndexInterval {
    std::uint64_t first = 0;
    std::uint64_t last = 0;

    std::uint64_t size() const { return last - first + 1; }
    bool contains(std::uint64_t i) const { return first <= i && i <= last; }
    bool operator==(const IndexInterval&) const = default;
};

/// Arithmetic of the triangular index layout: coordinates are grouped into
/// consecutive blocks I(1), I(2), ... with |I(n)| = n, so block n ends at the
/// triangular number s(n) = n(n+1)/2.
namespace block_layout {

/// s(n), the index of the last coordinate of block n; s(0) = 0.
inline std::uint64_t cumulative(std::uint64_t n) { return n * (n + 1) / 2; }

/// The interval I(n) = [s(n-1)+1, s(n)]. Undefined for n = 0.
inline IndexInterval block(std::uint64_t n) {
    if (n == 0) throw std::domain_error("block_layout: I(0) is undefined");
    return {cumulative(n - 1) + 1, cumulative(n)};
}

/// (s(n), I(n)) together, the layout query for one block.
inline std::pair<std::uint64_t, IndexInterval> layout(std::uint64_t n) {
    return {cumulative(n), block(n)};
}

/// The unique n with i in I(n); requires i >= 1.
inline std::uint32_t block_of_index(std::uint64_t i) {
    if (i == 0) throw std::domain_error("block_layout: indices are 1-based");
    auto n = static_cast<std::uint64_t>((std::sqrt(8.0 * static_cast<double>(i) + 1.0) - 1.0) / 2.0);
    while (cumulative(n) < i) ++n;
    while (n > 1 && cumulative(n - 1) >= i) --n;
    return static_cast<std::uint32_t>(n);
}

}  // namespace block_layout

}  // namespace mbasis
