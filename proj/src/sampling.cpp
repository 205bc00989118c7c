#include "mbasis/sampling.hpp"

#include <algorithm>
#include <cmath>

#include "mbasis/rng.hpp"

namespace mbasis {

namespace {

Complex coordinate_value(double magnitude, Rng& rng, bool nonneg) {
    if (nonneg) return {magnitude, 0.0};
    return magnitude * rng.unit_phase();
}

Point sample_block(const CompactSetSpec& spec, Rng& rng, const SampleOptions& opts) {
    const auto& lambda = spec.lambda();
    const std::size_t blocks = lambda.size();
    const double pe = spec.p().value();
    // Boundary draws make every touched block tight and, half the time, put
    // the block on a rational power profile |z_i|^p = k_i / K with small
    // integers k_i. Those are exactly the points where monomial moduli peak,
    // so sup estimates taken over the sample stream can actually attain them.
    bool boundary = rng.bernoulli(opts.boundary_fraction);

    std::vector<Point::Entry> entries;
    for (std::size_t n = 1; n <= blocks; ++n) {
        if (lambda[n - 1] == 0.0) continue;
        if (!boundary && rng.bernoulli(0.15)) continue;  // leave some blocks empty

        auto interval = block_layout::block(n);
        std::vector<double> magnitudes(interval.size(), 0.0);
        if (boundary && rng.bernoulli(0.5)) {
            for (auto& m : magnitudes) {
                auto share = static_cast<double>(rng.below(6));  // 0..5
                m = std::pow(share, 1.0 / pe);
            }
        } else {
            for (auto& m : magnitudes) {
                if (!rng.bernoulli(opts.coordinate_dropout)) m = rng.uniform01();
            }
        }
        double sum = 0.0;
        for (double m : magnitudes) sum += std::pow(m, pe);
        if (sum == 0.0) {
            if (!boundary) continue;
            magnitudes[0] = 1.0;
            sum = 1.0;
        }
        double radius = boundary ? 1.0 : rng.uniform01();
        double scale = lambda[n - 1] * radius / std::pow(sum, 1.0 / pe);
        for (std::size_t j = 0; j < magnitudes.size(); ++j) {
            if (magnitudes[j] == 0.0) continue;
            auto index = static_cast<std::uint32_t>(interval.first + j);
            entries.emplace_back(index, coordinate_value(scale * magnitudes[j], rng, opts.nonneg));
        }
    }
    return Point(std::move(entries));
}

Point sample_lorentz(const CompactSetSpec& spec, Rng& rng, const SampleOptions& opts) {
    const auto& lambda = spec.lambda();
    const std::size_t dim = lambda.size();
    if (dim == 0 || *std::min_element(lambda.begin(), lambda.end()) == 0.0) {
        return {};  // A_lambda is {0}
    }
    bool boundary = rng.bernoulli(opts.boundary_fraction);

    std::vector<double> magnitudes(dim, 0.0);
    for (auto& m : magnitudes) {
        if (!rng.bernoulli(opts.coordinate_dropout)) m = rng.uniform01();
    }
    std::vector<double> sorted = magnitudes;
    std::sort(sorted.begin(), sorted.end(), std::greater<double>());
    double worst = 0.0;
    double prefix = 0.0;
    for (std::size_t m = 1; m <= dim; ++m) {
        prefix += sorted[m - 1];
        worst = std::max(worst, prefix / spec.weights().partial_sum(m) / lambda[m - 1]);
    }
    if (worst == 0.0) {
        if (!boundary) return {};
        magnitudes[0] = 1.0;
        worst = 1.0 / spec.weights().partial_sum(1) / lambda[0];
        for (std::size_t m = 2; m <= dim; ++m) {
            worst = std::max(worst, 1.0 / spec.weights().partial_sum(m) / lambda[m - 1]);
        }
    }
    double radius = boundary ? 1.0 : rng.uniform01();
    double scale = radius / worst;
    std::vector<Point::Entry> entries;
    for (std::size_t j = 0; j < dim; ++j) {
        if (magnitudes[j] == 0.0) continue;
        entries.emplace_back(static_cast<std::uint32_t>(j + 1),
                             coordinate_value(scale * magnitudes[j], rng, opts.nonneg));
    }
    return Point(std::move(entries));
}

}  // namespace

Point sample_point(const CompactSetSpec& spec, std::uint64_t seed, const SampleOptions& options) {
    Rng rng(seed);
    return spec.is_block() ? sample_block(spec, rng, options) : sample_lorentz(spec, rng, options);
}

Point sample_point(const CompactSetSpec& spec, std::uint64_t seed) {
    return sample_point(spec, seed, SampleOptions{});
}

std::vector<Point> sample_points(const CompactSetSpec& spec, std::size_t count,
                                 std::uint64_t base_seed, const SampleOptions& options) {
    std::vector<Point> points;
    points.reserve(count);
    for (std::size_t j = 0; j < count; ++j) {
        points.push_back(sample_point(spec, mix_seed(base_seed, j), options));
    }
    return points;
}

}  // namespace mbasis
