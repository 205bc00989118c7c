#include "mbasis/basis_constant.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "mbasis/rng.hpp"

namespace mbasis {

namespace {

constexpr double kDegenerateDenominator = 1e-14;

std::vector<std::uint32_t> all_cut_lengths(std::uint32_t k) {
    std::vector<std::uint32_t> cuts(k);
    for (std::uint32_t c = 1; c <= k; ++c) cuts[c - 1] = c;
    return cuts;
}

}  // namespace

double estimate_p0(const CompactSetSpec& spec, std::uint32_t degree, std::uint32_t k,
                   std::uint64_t trials, std::uint64_t budget, std::uint64_t seed,
                   std::uint64_t* skipped_trials) {
    if (spec.dimension() < k + 1) {
        throw std::invalid_argument("estimate_p0: spec does not cover coordinate k+1");
    }
    Cloud cloud = Cloud::generate(spec, budget, mix_seed(seed, 0xE0), {});
    const auto& points = cloud.points();

    auto basis = OrderedMonomialBasis::enumerate(degree, k);
    const std::size_t terms = basis.size();
    std::vector<std::vector<Complex>> monomial_values(terms);
    for (std::size_t j = 0; j < terms; ++j) {
        monomial_values[j].reserve(points.size());
        for (const auto& z : points) monomial_values[j].push_back(eval_monomial(basis.list()[j], z));
    }
    std::vector<double> extra_moduli;  // |z_{k+1}| per cloud point
    extra_moduli.reserve(points.size());
    double extra_max = 0.0;
    for (const auto& z : points) {
        double v = std::abs(z.at(k + 1));
        extra_moduli.push_back(v);
        extra_max = std::max(extra_max, v);
    }

    double worst = 1.0;
    std::uint64_t skipped = 0;
    Rng rng(mix_seed(seed, 0xA1));
    for (std::uint64_t trial = 0; trial < trials; ++trial) {
        std::vector<Complex> alpha(terms);
        for (auto& a : alpha) a = rng.complex_normal();
        double max_s = 0.0;
        double max_product = 0.0;
        for (std::size_t i = 0; i < points.size(); ++i) {
            Complex s{};
            for (std::size_t j = 0; j < terms; ++j) s += alpha[j] * monomial_values[j][i];
            double mod = std::abs(s);
            max_s = std::max(max_s, mod);
            max_product = std::max(max_product, extra_moduli[i] * mod);
        }
        if (max_product < kDegenerateDenominator) {
            ++skipped;
            continue;
        }
        worst = std::max(worst, extra_max * max_s / max_product);
    }
    if (skipped_trials) *skipped_trials = skipped;
    return worst;
}

BasisConstantReport basis_constant_estimate(std::uint32_t degree, std::uint32_t k,
                                            const CompactSetSpec& spec, std::uint64_t trials,
                                            std::uint64_t budget, std::uint64_t seed) {
    if (degree == 0 || k == 0) {
        throw std::invalid_argument("basis_constant_estimate: degree and k must be >= 1");
    }
    auto basis = OrderedMonomialBasis::enumerate(degree, k);
    const std::size_t terms = basis.size();
    auto cuts = all_cut_lengths(k);

    BasisConstantReport report;
    report.degree = degree;
    report.truncation = k;
    report.trials = trials;
    report.budget = budget;
    report.worst_cut_t = terms;

    if (terms < 2) {
        report.c_hat = 1.0;
        report.c_hat_root = 1.0;
        report.worst_cut_s = 0;
        report.worst_cut_t = 1;
    } else {
        double best_ratio = 0.0;
        // Trials 0 and 1 are probes: all weight on the first or last
        // monomial, which realizes the ratio 1 exactly at some cut.
        const std::uint64_t total_trials = trials + 2;
        for (std::uint64_t trial = 0; trial < total_trials; ++trial) {
            std::vector<Complex> alpha(terms, Complex{});
            if (trial == 0) {
                alpha.front() = Complex(1.0, 0.0);
            } else if (trial == 1) {
                alpha.back() = Complex(1.0, 0.0);
            } else {
                Rng rng(mix_seed(seed, 100 + trial));
                for (auto& a : alpha) a = rng.complex_normal();
            }
            Cloud cloud = Cloud::generate(spec, budget, mix_seed(seed, 7000 + trial), cuts);
            const auto& points = cloud.points();

            // Running prefix sums per point give the sup of every cut in one
            // sweep; prefix_max[s] is the cloud sup after s terms.
            std::vector<double> prefix_max(terms + 1, 0.0);
            std::vector<std::size_t> prefix_arg(terms + 1, 0);
            for (std::size_t i = 0; i < points.size(); ++i) {
                Complex acc{};
                for (std::size_t j = 0; j < terms; ++j) {
                    acc += alpha[j] * eval_monomial(basis.list()[j], points[i]);
                    double mod = std::abs(acc);
                    if (mod > prefix_max[j + 1]) {
                        prefix_max[j + 1] = mod;
                        prefix_arg[j + 1] = i;
                    }
                }
            }
            double denominator = prefix_max[terms];
            if (denominator < kDegenerateDenominator) {
                ++report.skipped_trials;
                continue;
            }
            for (std::size_t s = 1; s < terms; ++s) {
                double ratio = prefix_max[s] / denominator;
                if (ratio > best_ratio) {
                    best_ratio = ratio;
                    report.worst_cut_s = s;
                    report.worst_coefficients = alpha;
                    report.worst_witness_numerator = points[prefix_arg[s]];
                    report.worst_witness_denominator = points[prefix_arg[terms]];
                }
            }
        }
        report.c_hat = best_ratio;
        report.c_hat_root = std::pow(best_ratio, 1.0 / degree);
    }

    report.p0_estimate = estimate_p0(spec, degree, k, std::max<std::uint64_t>(trials, 1), budget,
                                     mix_seed(seed, 0xBA515), nullptr);
    report.envelope_a = 1.0 + 2.0 * report.p0_estimate;
    return report;
}

LengthMonotonicityReport length_graded_monotonicity_check(
    std::span<const HomogeneousPolynomial> strata, const CompactSetSpec& spec, const Cloud& cloud) {
    if (!(cloud.spec() == spec)) {
        throw std::invalid_argument("length_graded_monotonicity_check: cloud drawn from another set");
    }
    const auto count = static_cast<std::uint32_t>(strata.size());
    for (std::uint32_t u = 1; u <= count; ++u) {
        for (const auto& [m, c] : strata[u - 1].terms()) {
            if (m.length() != u) {
                throw std::invalid_argument(
                    "length_graded_monotonicity_check: stratum with a wrong-length monomial");
            }
        }
    }
    std::vector<std::uint32_t> cuts;
    for (std::uint32_t u = 1; u <= count; ++u) cuts.push_back(u);
    if (!cloud.truncation_closed(cuts)) {
        throw std::invalid_argument("length_graded_monotonicity_check: cloud not truncation-closed");
    }

    // Sup of the running sum q_1 + ... + q_s for every s; the merged term
    // lists share prefixes, and square order keeps shorter strata first, so
    // the evaluations below are bitwise comparable across cuts.
    std::vector<double> sums(count + 1, 0.0);
    std::vector<HomogeneousPolynomial::Term> merged;
    for (std::uint32_t s = 1; s <= count; ++s) {
        for (const auto& term : strata[s - 1].terms()) merged.push_back(term);
        HomogeneousPolynomial partial(strata.empty() ? 0 : strata[0].degree(), merged);
        sums[s] = poly_sup_estimate(partial, cloud).value;
    }

    LengthMonotonicityReport report;
    report.pass = true;
    report.worst_gap = -std::numeric_limits<double>::infinity();
    for (std::uint32_t s = 1; s <= count; ++s) {
        for (std::uint32_t t = s + 1; t <= count; ++t) {
            report.rows.push_back({s, t, sums[s], sums[t]});
            double gap = sums[s] - sums[t];
            report.worst_gap = std::max(report.worst_gap, gap);
            if (gap > 0.0) report.pass = false;
        }
    }
    if (report.rows.empty()) report.worst_gap = 0.0;
    return report;
}

}  // namespace mbasis
