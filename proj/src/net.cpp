#include "mbasis/net.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

#include "mbasis/sup.hpp"

namespace mbasis {

namespace {

constexpr double kSafety = 0.999;          // keeps the covering radius strictly under eps
constexpr std::size_t kMaxNetSize = 4'000'000;

/// Number of phase grid points on the ring of magnitude step g; fine enough
/// that the chord to the nearest grid phase is at most one modulus step.
std::uint32_t ring_phases(std::uint32_t g) {
    return std::max<std::uint32_t>(1, static_cast<std::uint32_t>(
                                          std::ceil(std::numbers::pi * static_cast<double>(g))));
}

/// The grid value at magnitude step g, phase slot q. snap() and the net
/// enumeration both go through here, so matching (g, q) is bitwise equal.
Complex ring_value(std::uint32_t g, std::uint32_t q, double delta) {
    double angle = 2.0 * std::numbers::pi * static_cast<double>(q) / ring_phases(g);
    double r = static_cast<double>(g) * delta;
    return {r * std::cos(angle), r * std::sin(angle)};
}

std::pair<std::uint32_t, std::uint32_t> snap_coordinate(Complex value, double delta) {
    double modulus = std::abs(value);
    auto g = static_cast<std::uint32_t>(std::floor(modulus / delta));
    while (g > 0 && static_cast<double>(g) * delta > modulus) --g;
    if (g == 0) return {0, 0};
    std::uint32_t phases = ring_phases(g);
    double angle = std::arg(value);
    double slot = angle / (2.0 * std::numbers::pi) * phases;
    auto q = static_cast<std::int64_t>(std::llround(slot));
    q %= phases;
    if (q < 0) q += phases;
    return {g, static_cast<std::uint32_t>(q)};
}

/// All ways to put grid values on the coordinates [first, first + count) with
/// total modulus (l1) at most l1_cap and per-coordinate magnitude at most
/// g_cap steps; used with a generous cap, the real filter runs afterwards.
void enumerate_configs(std::uint32_t first, std::uint32_t count, std::uint32_t g_cap,
                       double l1_cap, double delta, std::vector<Point::Entry>& current,
                       std::vector<std::vector<Point::Entry>>& out) {
    if (count == 0) {
        if (out.size() >= kMaxNetSize) {
            throw std::length_error("EpsilonNet: grid too large; raise eps or shorten lambda");
        }
        out.push_back(current);
        return;
    }
    for (std::uint32_t g = 0; g <= g_cap; ++g) {
        double used = static_cast<double>(g) * delta;
        if (used > l1_cap) break;
        if (g == 0) {
            enumerate_configs(first + 1, count - 1, g_cap, l1_cap, delta, current, out);
            continue;
        }
        for (std::uint32_t q = 0; q < ring_phases(g); ++q) {
            current.emplace_back(first, ring_value(g, q, delta));
            enumerate_configs(first + 1, count - 1, g_cap, l1_cap - used, delta, current, out);
            current.pop_back();
        }
    }
}

}  // namespace

EpsilonNet::EpsilonNet(const CompactSetSpec& spec, double eps) : spec_(spec), eps_(eps) {
    if (!(eps > 0.0) || !std::isfinite(eps)) {
        throw std::domain_error("EpsilonNet: eps must be positive");
    }
    if (spec.is_block()) {
        build_block();
    } else {
        build_lorentz();
    }
    if (points_.empty()) insert(Point{});
}

void EpsilonNet::insert(Point p) {
    auto key = Cloud::point_key(p);
    if (keys_.insert(std::move(key)).second) points_.push_back(std::move(p));
}

bool EpsilonNet::contains(const Point& p) const { return keys_.contains(Cloud::point_key(p)); }

void EpsilonNet::build_block() {
    const auto& lambda = spec_.lambda();
    std::uint32_t m0 = 0;
    for (std::size_t m = 1; m <= lambda.size(); ++m) {
        if (lambda[m - 1] > eps_ / 2.0) m0 = static_cast<std::uint32_t>(m);
    }
    if (m0 == 0) {
        insert(Point{});  // every member already has norm <= eps/2
        return;
    }
    const double pe = spec_.p().value();
    dimension_ = static_cast<std::uint32_t>(block_layout::cumulative(m0));
    delta_ = kSafety * eps_ / (4.0 * std::pow(static_cast<double>(m0), 1.0 / pe));

    // Per-block survivors; the block constraints are independent, so the net
    // is their cartesian product.
    std::vector<std::vector<std::vector<Point::Entry>>> block_configs;
    std::size_t product = 1;
    for (std::uint32_t n = 1; n <= m0; ++n) {
        auto interval = block_layout::block(n);
        double cap = lambda[n - 1];
        auto g_cap = static_cast<std::uint32_t>(std::floor(cap / delta_ + 1e-9));
        std::vector<std::vector<Point::Entry>> raw;
        std::vector<Point::Entry> scratch;
        // l1 prune only; the p-norm filter below is the real test.
        enumerate_configs(static_cast<std::uint32_t>(interval.first),
                          static_cast<std::uint32_t>(interval.size()), g_cap,
                          cap * std::pow(static_cast<double>(interval.size()), 1.0 - 1.0 / pe) + 1e-9,
                          delta_, scratch, raw);
        std::vector<std::vector<Point::Entry>> kept;
        for (auto& config : raw) {
            if (in_compact_set(Point(config), spec_)) kept.push_back(std::move(config));
        }
        product *= kept.size();
        if (product > kMaxNetSize) {
            throw std::length_error("EpsilonNet: grid too large; raise eps or shorten lambda");
        }
        block_configs.push_back(std::move(kept));
    }

    std::vector<Point::Entry> current;
    std::vector<std::size_t> choice(block_configs.size(), 0);
    while (true) {
        current.clear();
        for (std::size_t b = 0; b < block_configs.size(); ++b) {
            const auto& config = block_configs[b][choice[b]];
            current.insert(current.end(), config.begin(), config.end());
        }
        insert(Point(current));
        std::size_t b = 0;
        while (b < choice.size() && ++choice[b] == block_configs[b].size()) {
            choice[b] = 0;
            ++b;
        }
        if (b == choice.size()) break;
    }
}

void EpsilonNet::build_lorentz() {
    const auto& lambda = spec_.lambda();
    const auto dim = static_cast<std::uint32_t>(lambda.size());
    if (dim == 0 || *std::min_element(lambda.begin(), lambda.end()) == 0.0 ||
        *std::max_element(lambda.begin(), lambda.end()) <= eps_ / 2.0) {
        insert(Point{});  // A_lambda is {0} or fits inside the eps/2 ball
        return;
    }
    const auto& w = spec_.weights();
    dimension_ = dim;
    delta_ = kSafety * eps_ * w.partial_sum(dim) / (2.0 * static_cast<double>(dim));

    double cap = spec_.coordinate_cap();
    auto g_cap = static_cast<std::uint32_t>(std::floor(cap / delta_ + 1e-9));
    double l1_cap = (lambda[dim - 1] + kMembershipTol) * w.partial_sum(dim) + 1e-9;

    std::vector<std::vector<Point::Entry>> raw;
    std::vector<Point::Entry> scratch;
    enumerate_configs(1, dim, g_cap, l1_cap, delta_, scratch, raw);
    for (auto& config : raw) {
        Point candidate(std::move(config));
        if (in_compact_set(candidate, spec_)) insert(std::move(candidate));
    }
}

Point EpsilonNet::snap(const Point& member) const {
    if (delta_ == 0.0) return {};
    Point kept = member.truncated(dimension_);
    std::vector<Point::Entry> snapped;
    for (const auto& [index, value] : kept.entries()) {
        auto [g, q] = snap_coordinate(value, delta_);
        if (g > 0) snapped.emplace_back(index, ring_value(g, q, delta_));
    }
    return Point(std::move(snapped));
}

std::vector<Point> epsilon_net(const CompactSetSpec& spec, double eps) {
    return EpsilonNet(spec, eps).points();
}

}  // namespace mbasis
