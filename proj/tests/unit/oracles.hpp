#pragma once

// Independent reference implementations used to cross-check the library.
// Everything here recomputes from first principles (dense scans, exhaustive
// permutations, brute-force enumeration) without calling the code under test.

#include <algorithm>
#include <cmath>
#include <complex>
#include <cstdint>
#include <functional>
#include <numeric>
#include <vector>

#include "mbasis/compact_set.hpp"
#include "mbasis/multiindex.hpp"
#include "mbasis/point.hpp"

namespace oracles {

using mbasis::Complex;
using mbasis::MultiIndex;
using mbasis::Point;

/// Block norm by materializing a dense vector and summing every block.
inline double block_norm_direct(const Point& z, double p) {
    std::size_t top = z.max_index();
    std::vector<Complex> dense(top + 1, Complex{});
    for (const auto& [index, value] : z.entries()) dense[index] = value;
    double best = 0.0;
    std::uint64_t first = 1;
    for (std::uint64_t n = 1; first <= top; ++n) {
        double sum = 0.0;
        for (std::uint64_t i = first; i < first + n; ++i) {
            if (i <= top) sum += std::pow(std::abs(dense[i]), p);
        }
        best = std::max(best, std::pow(sum, 1.0 / p));
        first += n;
    }
    return best;
}

/// The block index of i found by scanning n upward until the running
/// triangular total reaches i.
inline std::uint32_t block_of_index_scan(std::uint64_t i) {
    std::uint64_t total = 0;
    for (std::uint32_t n = 1;; ++n) {
        total += n;
        if (total >= i) return n;
    }
}

/// Decreasing rearrangement found by scanning all permutations of the moduli
/// and returning the one that is non-increasing. Works for support <= 8.
inline std::vector<double> rearrangement_by_permutations(const Point& z) {
    std::vector<double> moduli;
    for (const auto& [index, value] : z.entries()) moduli.push_back(std::abs(value));
    std::sort(moduli.begin(), moduli.end());
    do {
        bool sorted = true;
        for (std::size_t i = 0; i + 1 < moduli.size(); ++i) {
            if (moduli[i] < moduli[i + 1]) sorted = false;
        }
        if (sorted) return moduli;
    } while (std::next_permutation(moduli.begin(), moduli.end()));
    return moduli;
}

/// sup over permutations pi of sum |z_{pi(i)}| w_i, evaluated exhaustively.
inline double lorentz_norm_exhaustive(const Point& z, const std::vector<double>& w) {
    std::vector<double> moduli;
    for (const auto& [index, value] : z.entries()) moduli.push_back(std::abs(value));
    std::sort(moduli.begin(), moduli.end());
    double best = 0.0;
    do {
        double sum = 0.0;
        for (std::size_t i = 0; i < moduli.size(); ++i) sum += moduli[i] * w[i];
        best = std::max(best, sum);
    } while (std::next_permutation(moduli.begin(), moduli.end()));
    return best;
}

/// max over k of (sum of k largest moduli) / W_k, scanning every k up to the
/// weight prefix length.
inline double predual_norm_scan(const Point& z, const std::vector<double>& w) {
    std::vector<double> moduli;
    for (const auto& [index, value] : z.entries()) moduli.push_back(std::abs(value));
    std::sort(moduli.begin(), moduli.end(), std::greater<double>());
    double best = 0.0;
    double prefix = 0.0;
    double weight_sum = 0.0;
    for (std::size_t k = 0; k < w.size(); ++k) {
        prefix += k < moduli.size() ? moduli[k] : 0.0;
        weight_sum += w[k];
        best = std::max(best, prefix / weight_sum);
    }
    return best;
}

/// All multi-indices with degree n and length <= k, by brute-force weak
/// compositions.
inline std::vector<MultiIndex> compositions_brute_force(std::uint32_t degree, std::uint32_t k) {
    std::vector<MultiIndex> out;
    std::vector<std::uint32_t> exponents(k, 0);
    auto emit = [&]() {
        std::vector<MultiIndex::Entry> entries;
        for (std::uint32_t i = 0; i < k; ++i) {
            if (exponents[i] > 0) entries.emplace_back(i + 1, exponents[i]);
        }
        out.emplace_back(std::move(entries));
    };
    std::function<void(std::uint32_t, std::uint32_t)> recurse = [&](std::uint32_t slot,
                                                                    std::uint32_t remaining) {
        if (slot == k) {
            if (remaining == 0) emit();
            return;
        }
        for (std::uint32_t v = 0; v <= remaining; ++v) {
            exponents[slot] = v;
            recurse(slot + 1, remaining - v);
        }
        exponents[slot] = 0;
    };
    recurse(0, degree);
    return out;
}

/// Brute-force enumeration sorted with the comparator under test. Only the
/// generation is independent; ordering tests that need full independence
/// compare against the recursive construction instead.
inline std::vector<MultiIndex> sorted_enumeration(std::uint32_t degree, std::uint32_t k) {
    auto all = compositions_brute_force(degree, k);
    std::sort(all.begin(), all.end(), mbasis::square_less);
    return all;
}

/// Max of prod |z_i|^{m_i} over a block-variant A_lambda by per-block 1-D
/// scans with ternary refinement. Supports at most two touched coordinates
/// per block, which covers every monomial the tests use it for.
inline double block_monomial_sup_scan(const MultiIndex& m, const std::vector<double>& lambda,
                                      double p, std::size_t steps = 20000) {
    // Group (index, exponent) pairs into blocks by triangular layout.
    std::vector<std::vector<std::pair<std::uint64_t, std::uint32_t>>> groups;
    for (const auto& [index, exponent] : m.entries()) {
        std::uint32_t block = block_of_index_scan(index);
        if (groups.size() < block) groups.resize(block);
        groups[block - 1].emplace_back(index, exponent);
    }
    double product = 1.0;
    for (std::size_t b = 0; b < groups.size(); ++b) {
        if (groups[b].empty()) continue;
        double cap = b < lambda.size() ? lambda[b] : 0.0;
        if (cap == 0.0) return 0.0;
        if (groups[b].size() == 1) {
            product *= std::pow(cap, groups[b][0].second);
            continue;
        }
        auto value_at = [&](double t) {
            double x = cap * std::pow(t, 1.0 / p);
            double y = cap * std::pow(1.0 - t, 1.0 / p);
            return std::pow(x, groups[b][0].second) * std::pow(y, groups[b][1].second);
        };
        double best_t = 0.0;
        double best = value_at(0.0);
        for (std::size_t i = 1; i <= steps; ++i) {
            double t = static_cast<double>(i) / steps;
            double v = value_at(t);
            if (v > best) {
                best = v;
                best_t = t;
            }
        }
        double lo = std::max(0.0, best_t - 1.0 / steps);
        double hi = std::min(1.0, best_t + 1.0 / steps);
        for (int iter = 0; iter < 200; ++iter) {
            double m1 = lo + (hi - lo) / 3.0;
            double m2 = hi - (hi - lo) / 3.0;
            if (value_at(m1) < value_at(m2)) {
                lo = m1;
            } else {
                hi = m2;
            }
        }
        product *= value_at(0.5 * (lo + hi));
    }
    return product;
}

/// Joint grid search over as many as three touched coordinates, with the
/// block constraints checked directly; no per-block decoupling assumed.
inline double block_monomial_sup_joint_grid(const MultiIndex& m, const std::vector<double>& lambda,
                                            double p, std::size_t steps = 60) {
    std::vector<std::uint64_t> indices;
    std::vector<std::uint32_t> exponents;
    for (const auto& [index, exponent] : m.entries()) {
        indices.push_back(index);
        exponents.push_back(exponent);
    }
    double cap = 0.0;
    for (double l : lambda) cap = std::max(cap, l);

    auto feasible = [&](const std::vector<double>& x) {
        std::vector<double> block_sum;
        for (std::size_t j = 0; j < x.size(); ++j) {
            std::uint32_t block = block_of_index_scan(indices[j]);
            if (block_sum.size() < block) block_sum.resize(block, 0.0);
            block_sum[block - 1] += std::pow(x[j], p);
        }
        for (std::size_t b = 0; b < block_sum.size(); ++b) {
            double bound = b < lambda.size() ? lambda[b] : 0.0;
            if (std::pow(block_sum[b], 1.0 / p) > bound + 1e-12) return false;
        }
        return true;
    };

    double best = 0.0;
    std::vector<double> x(indices.size(), 0.0);
    std::vector<double> center(indices.size(), 0.0);
    auto objective = [&]() {
        double v = 1.0;
        for (std::size_t i = 0; i < x.size(); ++i) v *= std::pow(x[i], exponents[i]);
        return v;
    };
    std::function<void(std::size_t, const std::vector<double>&, double)> sweep =
        [&](std::size_t j, const std::vector<double>& lows, double width) {
            if (j == x.size()) {
                if (!feasible(x)) return;
                double v = objective();
                if (v > best) {
                    best = v;
                    center = x;
                }
                return;
            }
            for (std::size_t i = 0; i <= steps; ++i) {
                x[j] = lows[j] + width * static_cast<double>(i) / steps;
                sweep(j + 1, lows, width);
            }
        };
    std::vector<double> lows(indices.size(), 0.0);
    double width = cap;
    sweep(0, lows, width);
    for (int round = 0; round < 3; ++round) {
        width = 2.0 * width / static_cast<double>(steps);
        for (std::size_t i = 0; i < lows.size(); ++i) lows[i] = std::max(0.0, center[i] - width / 2.0);
        sweep(0, lows, width);
    }
    return best;
}

/// Dense grid + refinement for the Lorentz-variant monomial sup in up to
/// three dimensions. Membership is recomputed here from scratch.
inline double lorentz_monomial_sup_grid(const MultiIndex& m, const std::vector<double>& lambda,
                                        const std::vector<double>& w, std::size_t steps = 80) {
    std::vector<std::uint32_t> exponents;
    for (const auto& [index, exponent] : m.entries()) exponents.push_back(exponent);

    std::vector<double> weight_sums(lambda.size(), 0.0);
    {
        double running = 0.0;
        for (std::size_t i = 0; i < lambda.size(); ++i) {
            running += w[i];
            weight_sums[i] = running;
        }
    }

    auto feasible = [&](const std::vector<double>& x) {
        std::vector<double> sorted = x;
        std::sort(sorted.begin(), sorted.end(), std::greater<double>());
        double prefix = 0.0;
        for (std::size_t k = 0; k < lambda.size(); ++k) {
            prefix += k < sorted.size() ? sorted[k] : 0.0;
            if (prefix / weight_sums[k] > lambda[k] + 1e-12) return false;
        }
        return true;
    };

    double cap = lambda[0] * weight_sums[0];
    for (std::size_t k = 0; k < lambda.size(); ++k) cap = std::min(cap, lambda[k] * weight_sums[k]);

    std::vector<double> x(exponents.size(), 0.0);
    std::vector<double> center(exponents.size(), 0.0);
    double best = 0.0;
    std::function<void(std::size_t, const std::vector<double>&, double)> sweep =
        [&](std::size_t j, const std::vector<double>& lows, double width) {
            if (j == x.size()) {
                if (!feasible(x)) return;
                double v = 1.0;
                for (std::size_t i = 0; i < x.size(); ++i) v *= std::pow(x[i], exponents[i]);
                if (v > best) {
                    best = v;
                    center = x;
                }
                return;
            }
            for (std::size_t i = 0; i <= steps; ++i) {
                x[j] = lows[j] + width * static_cast<double>(i) / steps;
                sweep(j + 1, lows, width);
            }
        };
    std::vector<double> lows(exponents.size(), 0.0);
    sweep(0, lows, cap);
    for (int round = 0; round < 3; ++round) {
        double width = 2.0 * cap / static_cast<double>(steps);
        for (std::size_t i = 0; i < lows.size(); ++i) lows[i] = std::max(0.0, center[i] - width / 2.0);
        sweep(0, lows, width);
        cap = width;
    }
    return best;
}

}  // namespace oracles
