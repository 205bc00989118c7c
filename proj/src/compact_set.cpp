#include "mbasis/compact_set.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

namespace mbasis {

double CompactSetSpec::coordinate_cap() const {
    if (lambda_.empty()) return 0.0;
    if (is_block()) return *std::max_element(lambda_.begin(), lambda_.end());
    // A single spike of height c has partial-sum ratio c / W_m at every m,
    // so the tightest constraint caps it at min over m of lambda_m * W_m.
    double cap = std::numeric_limits<double>::infinity();
    for (std::size_t m = 1; m <= lambda_.size(); ++m) {
        cap = std::min(cap, lambda_[m - 1] * weights_->partial_sum(m));
    }
    return cap;
}

namespace {

double block_excess(const Point& z, const CompactSetSpec& spec) {
    const double pe = spec.p().value();
    const std::size_t blocks = spec.lambda().size();
    double excess = -std::numeric_limits<double>::infinity();
    double block_sum = 0.0;
    std::uint32_t current_block = 0;
    auto flush = [&]() {
        if (current_block == 0) return;
        double norm = std::pow(block_sum, 1.0 / pe);
        double bound = current_block <= blocks ? spec.lambda()[current_block - 1] : 0.0;
        excess = std::max(excess, norm - bound);
    };
    for (const auto& [index, value] : z.entries()) {
        std::uint32_t b = block_layout::block_of_index(index);
        if (b != current_block) {
            flush();
            current_block = b;
            block_sum = 0.0;
        }
        block_sum += std::pow(std::abs(value), pe);
    }
    flush();
    return excess;
}

double lorentz_excess(const Point& z, const CompactSetSpec& spec) {
    const std::size_t dim = spec.lambda().size();
    double excess = -std::numeric_limits<double>::infinity();
    for (const auto& [index, value] : z.entries()) {
        if (index > dim) excess = std::max(excess, std::abs(value));
    }
    if (excess > 0.0) return excess;  // support past the prefix, already out
    auto rearranged = decreasing_rearrangement(z);
    double prefix = 0.0;
    std::size_t used = 0;
    for (std::size_t m = 1; m <= dim; ++m) {
        if (used < rearranged.size()) prefix += rearranged[used++];
        excess = std::max(excess, prefix / spec.weights().partial_sum(m) - spec.lambda()[m - 1]);
    }
    return excess;
}

}  // namespace

double membership_excess(const Point& z, const CompactSetSpec& spec) {
    return spec.is_block() ? block_excess(z, spec) : lorentz_excess(z, spec);
}

bool in_compact_set(const Point& z, const CompactSetSpec& spec) {
    return membership_excess(z, spec) <= kMembershipTol;
}

}  // namespace mbasis
