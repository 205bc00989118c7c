#include "mbasis/invariants.hpp"

#include <algorithm>
#include <cmath>
#include <complex>
#include <functional>
#include <map>
#include <set>

#include "mbasis/basis_constant.hpp"
#include "mbasis/net.hpp"
#include "mbasis/rng.hpp"
#include "mbasis/seminorm.hpp"

namespace mbasis {

namespace {

Point random_point(Rng& rng, std::size_t max_support, std::uint32_t max_index) {
    std::size_t support = 1 + rng.below(max_support);
    std::set<std::uint32_t> indices;
    while (indices.size() < support) {
        indices.insert(1 + static_cast<std::uint32_t>(rng.below(max_index)));
    }
    std::vector<Point::Entry> entries;
    for (auto i : indices) entries.emplace_back(i, rng.complex_normal());
    return Point(std::move(entries));
}

InvariantResult layout_partition() {
    double bad = 0;
    std::uint64_t expected = 1;
    for (std::uint32_t n = 1; n <= 100; ++n) {
        auto interval = block_layout::block(n);
        if (interval.size() != n) ++bad;
        if (interval.first != expected) ++bad;  // blocks tile the indices with no gap
        for (std::uint64_t i = interval.first; i <= interval.last; ++i) {
            if (block_layout::block_of_index(i) != n) ++bad;
        }
        expected = interval.last + 1;
    }
    return {"layout_partition", bad == 0, bad};
}

InvariantResult norm_axioms_block(Rng& rng) {
    double worst = 0.0;
    for (double pv : {1.0, 1.5, 2.0, 3.0}) {
        PExponent p(pv);
        for (int i = 0; i < 200; ++i) {
            Point x = random_point(rng, 20, 40);
            Point y = random_point(rng, 20, 40);
            double triangle = block_space_norm(x + y, p) - block_space_norm(x, p) - block_space_norm(y, p);
            worst = std::max(worst, triangle);
            Complex c = rng.complex_normal();
            double homogeneity =
                std::abs(block_space_norm(x.scaled(c), p) - std::abs(c) * block_space_norm(x, p));
            worst = std::max(worst, homogeneity);
        }
    }
    return {"norm_axioms_block", worst <= 1e-12, worst};
}

InvariantResult norm_axioms_lorentz(Rng& rng) {
    auto w = LorentzWeights::harmonic(64);
    double worst = 0.0;
    for (int i = 0; i < 200; ++i) {
        Point x = random_point(rng, 20, 40);
        Point y = random_point(rng, 20, 40);
        worst = std::max(worst, lorentz_norm(x + y, w) - lorentz_norm(x, w) - lorentz_norm(y, w));
        worst = std::max(worst, lorentz_predual_norm(x + y, w) - lorentz_predual_norm(x, w) -
                                    lorentz_predual_norm(y, w));
        Complex c = rng.complex_normal();
        worst = std::max(worst,
                         std::abs(lorentz_norm(x.scaled(c), w) - std::abs(c) * lorentz_norm(x, w)));
        worst = std::max(worst, std::abs(lorentz_predual_norm(x.scaled(c), w) -
                                         std::abs(c) * lorentz_predual_norm(x, w)));
    }
    return {"norm_axioms_lorentz", worst <= 1e-12, worst};
}

InvariantResult rearrangement_invariance(Rng& rng) {
    auto w = LorentzWeights::harmonic(64);
    double worst = 0.0;
    for (int i = 0; i < 200; ++i) {
        Point x = random_point(rng, 12, 24);
        // Random permutation of the support plus unit-modulus twists.
        auto support = x.support();
        std::vector<std::uint32_t> target = support;
        for (std::size_t j = target.size(); j > 1; --j) {
            std::swap(target[j - 1], target[rng.below(j)]);
        }
        std::vector<Point::Entry> entries;
        for (std::size_t j = 0; j < support.size(); ++j) {
            entries.emplace_back(target[j], x.at(support[j]) * rng.unit_phase());
        }
        Point y(std::move(entries));
        worst = std::max(worst, std::abs(lorentz_norm(x, w) - lorentz_norm(y, w)));
        worst = std::max(worst, std::abs(lorentz_predual_norm(x, w) - lorentz_predual_norm(y, w)));
    }
    return {"rearrangement_invariance", worst <= 1e-12, worst};
}

std::vector<CompactSetSpec> standard_specs() {
    return {
        CompactSetSpec::block({1.0, 0.8, 0.5}, PExponent(2.0)),
        CompactSetSpec::block({1.0, 0.5}, PExponent(1.0)),
        CompactSetSpec::block({0.7, 0.7, 0.2, 0.1}, PExponent(1.5)),
        CompactSetSpec::lorentz({1.0, 0.8, 0.6}, LorentzWeights::harmonic(8)),
        CompactSetSpec::lorentz({0.5, 0.4, 0.3, 0.25}, LorentzWeights::harmonic(8)),
    };
}

InvariantResult solidity(Rng& rng, bool perturb) {
    double worst = 0.0;
    for (const auto& spec : standard_specs()) {
        for (int i = 0; i < 400; ++i) {
            Point z = sample_point(spec, rng.next_u64());
            std::vector<Point::Entry> entries;
            for (const auto& [index, value] : z.entries()) {
                double shrink = rng.uniform01();
                if (perturb && entries.empty()) shrink = 1.5;  // deliberate violation
                entries.emplace_back(index, value * shrink * rng.unit_phase());
            }
            worst = std::max(worst, membership_excess(Point(std::move(entries)), spec));
        }
    }
    return {"solidity", worst <= kMembershipTol, std::max(worst, 0.0)};
}

InvariantResult balancedness(Rng& rng) {
    double worst = 0.0;
    for (const auto& spec : standard_specs()) {
        for (int i = 0; i < 400; ++i) {
            Point z = sample_point(spec, rng.next_u64());
            Complex c = rng.uniform01() * rng.unit_phase();
            worst = std::max(worst, membership_excess(z.scaled(c), spec));
        }
    }
    return {"balancedness", worst <= kMembershipTol, std::max(worst, 0.0)};
}

InvariantResult boundary_membership(Rng& rng) {
    double worst_excess = 0.0;
    double tight_fraction = 1.0;
    for (const auto& spec : standard_specs()) {
        std::size_t tight = 0;
        const std::size_t draws = 10000;
        std::uint64_t base = rng.next_u64();
        for (std::size_t i = 0; i < draws; ++i) {
            Point z = sample_point(spec, mix_seed(base, i));
            double excess = membership_excess(z, spec);
            worst_excess = std::max(worst_excess, excess);
            if (std::abs(excess) <= 1e-12) ++tight;
        }
        tight_fraction = std::min(tight_fraction, static_cast<double>(tight) / draws);
    }
    bool pass = worst_excess <= kMembershipTol && tight_fraction >= 0.10;
    return {"boundary_membership", pass, std::max(worst_excess, 0.0)};
}

InvariantResult net_covering(Rng& rng) {
    struct Case {
        CompactSetSpec spec;
        double eps;
    };
    std::vector<Case> cases = {
        {CompactSetSpec::block({1.0, 0.4}, PExponent(2.0)), 1.0},
        {CompactSetSpec::block({1.0, 0.5, 0.25}, PExponent(1.0)), 1.4},
        {CompactSetSpec::lorentz({1.0, 0.7}, LorentzWeights::harmonic(4)), 1.0},
    };
    double worst = -1.0;
    bool members = true;
    for (const auto& [spec, eps] : cases) {
        EpsilonNet net(spec, eps);
        for (const auto& q : net.points()) members = members && in_compact_set(q, spec);
        std::uint64_t base = rng.next_u64();
        for (int i = 0; i < 2000; ++i) {
            Point z = sample_point(spec, mix_seed(base, i));
            Point q = net.snap(z);
            members = members && net.contains(q);
            worst = std::max(worst, spec.ambient_norm(z - q) - eps);
        }
    }
    return {"net_covering", members && worst <= 0.0, worst};
}

InvariantResult predual_attainment(Rng& rng) {
    // The scan up to nnz(z) must agree with a scan extended far past it.
    auto w_long = LorentzWeights::harmonic(200);
    double worst = 0.0;
    for (int i = 0; i < 300; ++i) {
        Point z = random_point(rng, 12, 24);
        auto rearranged = decreasing_rearrangement(z);
        double total = 0.0;
        for (double v : rearranged) total += v;
        double extended = 0.0;
        double prefix = 0.0;
        for (std::size_t k = 1; k <= 150; ++k) {
            prefix = k <= rearranged.size() ? prefix + rearranged[k - 1] : total;
            extended = std::max(extended, prefix / w_long.partial_sum(k));
        }
        worst = std::max(worst, std::abs(extended - lorentz_predual_norm(z, w_long)));
    }
    return {"predual_attainment", worst <= 1e-12, worst};
}

InvariantResult square_order_total() {
    double bad = 0;
    std::vector<MultiIndex> all;
    for (std::uint32_t n = 0; n <= 3; ++n) {
        auto basis = OrderedMonomialBasis::enumerate(n, 5);
        all.insert(all.end(), basis.list().begin(), basis.list().end());
    }
    for (const auto& a : all) {
        for (const auto& b : all) {
            auto ab = square_cmp(a, b);
            auto ba = square_cmp(b, a);
            if ((ab == std::strong_ordering::equal) != (a == b)) ++bad;
            if (ab == std::strong_ordering::less && ba != std::strong_ordering::greater) ++bad;
        }
    }
    // Transitivity over same-degree triples.
    for (std::uint32_t n = 1; n <= 3; ++n) {
        auto basis = OrderedMonomialBasis::enumerate(n, 5).list();
        for (const auto& a : basis) {
            for (const auto& b : basis) {
                for (const auto& c : basis) {
                    if (square_less(a, b) && square_less(b, c) && !square_less(a, c)) ++bad;
                }
            }
        }
    }
    return {"square_order_total", bad == 0, bad};
}

InvariantResult monotone_length() {
    double bad = 0;
    for (std::uint32_t n = 1; n <= 4; ++n) {
        auto list = OrderedMonomialBasis::enumerate(n, 6).list();
        for (std::size_t i = 0; i + 1 < list.size(); ++i) {
            if (list[i].length() > list[i + 1].length()) ++bad;
        }
    }
    return {"monotone_length", bad == 0, bad};
}

void brute_force_compositions(std::uint32_t remaining, std::uint32_t slots,
                              std::vector<std::uint32_t>& current,
                              std::vector<std::vector<std::uint32_t>>& out) {
    if (slots == 0) {
        if (remaining == 0) out.push_back(current);
        return;
    }
    for (std::uint32_t v = 0; v <= remaining; ++v) {
        current.push_back(v);
        brute_force_compositions(remaining - v, slots - 1, current, out);
        current.pop_back();
    }
}

InvariantResult cardinalities() {
    double bad = 0;
    for (std::uint32_t n = 0; n <= 6; ++n) {
        for (std::uint32_t k = 1; k <= 7; ++k) {
            std::vector<std::vector<std::uint32_t>> compositions;
            std::vector<std::uint32_t> scratch;
            brute_force_compositions(n, k, scratch, compositions);
            auto basis = OrderedMonomialBasis::enumerate(n, k);
            if (basis.size() != compositions.size()) ++bad;
            if (basis.size() != basis_size(n, k)) ++bad;
        }
    }
    return {"cardinalities", bad == 0, bad};
}

InvariantResult recursion_consistency() {
    double bad = 0;
    for (std::uint32_t n = 1; n <= 4; ++n) {
        for (std::uint32_t k = 1; k <= 6; ++k) {
            std::vector<std::vector<MultiIndex>> bases;
            for (std::uint32_t i = 1; i <= k; ++i) {
                std::vector<MultiIndex> stratum;
                for (const auto& m : OrderedMonomialBasis::enumerate(n, i).list()) {
                    if (m.length() == i) stratum.push_back(m);
                }
                bases.push_back(std::move(stratum));
            }
            auto extended = recursive_extend(bases, k);
            std::vector<MultiIndex> expected;
            for (const auto& m : OrderedMonomialBasis::enumerate(n + 1, k).list()) {
                if (m.length() == k) expected.push_back(m);
            }
            if (extended != expected) ++bad;
        }
    }
    return {"recursion_consistency", bad == 0, bad};
}

InvariantResult phi_compatibility() {
    double bad = 0;
    for (std::uint32_t n = 0; n <= 6; ++n) {
        for (std::uint64_t r = 0; r + 1 <= 50; ++r) {
            if (compatible_rank(n, r) >= compatible_rank(n, r + 1)) ++bad;
        }
    }
    std::set<std::uint64_t> seen;
    for (std::uint32_t n = 0; n <= 60; ++n) {
        for (std::uint64_t r = 0; r <= 60; ++r) {
            if (!seen.insert(compatible_rank(n, r)).second) ++bad;
        }
    }
    for (std::uint64_t g = 0; g < 1000; ++g) {
        auto [n, r] = compatible_rank_inverse(g);
        if (compatible_rank(n, r) != g) ++bad;
    }
    return {"phi_compatibility", bad == 0, bad};
}

HomogeneousPolynomial random_polynomial(Rng& rng, std::uint32_t degree, std::uint32_t k) {
    std::vector<HomogeneousPolynomial::Term> terms;
    for (const auto& m : OrderedMonomialBasis::enumerate(degree, k).list()) {
        terms.emplace_back(m, rng.complex_normal());
    }
    return {degree, std::move(terms)};
}

InvariantResult eval_linearity(Rng& rng) {
    double worst = 0.0;
    for (int i = 0; i < 200; ++i) {
        auto P = random_polynomial(rng, 3, 4);
        auto Q = random_polynomial(rng, 3, 4);
        Complex a = rng.complex_normal();
        Complex b = rng.complex_normal();
        Point z = random_point(rng, 4, 4).scaled(Complex(0.5, 0.0));
        Complex combined = eval(P.scaled(a) + Q.scaled(b), z);
        worst = std::max(worst, std::abs(combined - (a * eval(P, z) + b * eval(Q, z))));
    }
    return {"eval_linearity", worst <= 1e-12, worst};
}

InvariantResult eval_homogeneity(Rng& rng) {
    double worst = 0.0;
    for (int i = 0; i < 200; ++i) {
        std::uint32_t degree = 1 + static_cast<std::uint32_t>(rng.below(4));
        auto P = random_polynomial(rng, degree, 4);
        Point z = random_point(rng, 4, 4).scaled(Complex(0.5, 0.0));
        Complex c = rng.complex_normal();
        worst = std::max(worst,
                         std::abs(eval(P, z.scaled(c)) - integer_power(c, degree) * eval(P, z)));
    }
    return {"eval_homogeneity", worst <= 1e-10, worst};
}

/// Independent per-block maximization of |z^m| on a 1-D simplex slice, used
/// as a cross-check of the closed form at small sizes.
double grid_sup_block(const MultiIndex& m, const CompactSetSpec& spec, std::size_t resolution) {
    std::map<std::uint32_t, std::vector<std::uint32_t>> by_block;
    for (const auto& [index, exponent] : m.entries()) {
        by_block[block_layout::block_of_index(index)].push_back(exponent);
    }
    const double pe = spec.p().value();
    double product = 1.0;
    for (const auto& [block, exponents] : by_block) {
        double cap = block <= spec.lambda().size() ? spec.lambda()[block - 1] : 0.0;
        if (cap == 0.0) return 0.0;
        if (exponents.size() == 1) {
            product *= std::pow(cap, exponents[0]);
            continue;
        }
        // Two supported coordinates in one block: scan the share t of the
        // p-mass given to the first one.
        double best = 0.0;
        for (std::size_t i = 0; i <= resolution; ++i) {
            double t = static_cast<double>(i) / resolution;
            double x = cap * std::pow(t, 1.0 / pe);
            double y = cap * std::pow(1.0 - t, 1.0 / pe);
            best = std::max(best, std::pow(x, exponents[0]) * std::pow(y, exponents[1]));
        }
        product *= best;
    }
    return product;
}

InvariantResult supblock_closed_form() {
    double worst = 0.0;
    for (double pv : {1.0, 2.0}) {
        CompactSetSpec spec = CompactSetSpec::block({1.0, 0.8, 0.5}, PExponent(pv));
        for (std::uint32_t n = 1; n <= 4; ++n) {
            for (const auto& m : OrderedMonomialBasis::enumerate(n, 3).list()) {
                double exact = monomial_sup_block(m, spec).value;
                double grid = grid_sup_block(m, spec, 4000);
                double scale = std::max({1.0, exact, grid});
                worst = std::max(worst, std::abs(exact - grid) / scale);
            }
        }
    }
    return {"supblock_closed_form", worst <= 1e-6, worst};
}

InvariantResult sup_dominance(Rng& rng) {
    CompactSetSpec spec = CompactSetSpec::block({1.0, 0.8, 0.5}, PExponent(2.0));
    double worst = 0.0;
    for (std::uint32_t n = 1; n <= 3; ++n) {
        for (const auto& m : OrderedMonomialBasis::enumerate(n, 3).list()) {
            Cloud cloud = Cloud::generate(spec, 400, rng.next_u64(), {});
            HomogeneousPolynomial poly(n, {{m, Complex(1.0, 0.0)}});
            double sampled = poly_sup_estimate(poly, cloud).value;
            double exact = monomial_sup_block(m, spec).value;
            worst = std::max(worst, (sampled - exact) / std::max(1.0, exact));
        }
    }
    return {"sup_dominance", worst <= 1e-9, worst};
}

InvariantResult seminorm_additivity(Rng& rng) {
    CompactSetSpec spec = CompactSetSpec::block({1.0, 0.5}, PExponent(2.0));
    Cloud cloud = Cloud::generate(spec, 300, rng.next_u64(), {});
    std::vector<Complex> phi = {Complex(0.6, 0.0), Complex(0.3, 0.1)};
    auto f = exp_functional_taylor(phi, 6);
    double whole = seminorm_p_lambda(f, cloud);
    double parts = 0.0;
    for (const auto& part : f.parts()) parts += poly_sup_estimate(part, cloud).value;
    double worst = std::abs(whole - parts);
    return {"seminorm_additivity", worst == 0.0, worst};
}

InvariantResult length_monotonicity(Rng& rng) {
    double worst = -1.0;
    bool pass = true;
    std::vector<std::uint32_t> cuts = {1, 2, 3, 4};
    for (const auto& spec : standard_specs()) {
        Cloud cloud = Cloud::generate(spec, 300, rng.next_u64(), cuts);
        for (int i = 0; i < 25; ++i) {
            std::uint32_t degree = 1 + static_cast<std::uint32_t>(rng.below(3));
            std::vector<HomogeneousPolynomial> strata;
            for (std::uint32_t u = 1; u <= 4; ++u) {
                std::vector<HomogeneousPolynomial::Term> terms;
                for (const auto& m : OrderedMonomialBasis::enumerate(degree, u).list()) {
                    if (m.length() == u) terms.emplace_back(m, rng.complex_normal());
                }
                strata.emplace_back(degree, std::move(terms));
            }
            auto report = length_graded_monotonicity_check(strata, spec, cloud);
            pass = pass && report.pass;
            worst = std::max(worst, report.worst_gap);
        }
    }
    return {"length_monotonicity", pass, worst};
}

InvariantResult c1_base_case(Rng& rng) {
    double worst = 0.0;
    for (const auto& spec : standard_specs()) {
        std::uint32_t k = std::min<std::uint32_t>(3, spec.dimension() - 1);
        auto report = basis_constant_estimate(1, k, spec, 6, 250, rng.next_u64());
        worst = std::max(worst, std::abs(report.c_hat - 1.0));
    }
    return {"c1_base_case", worst <= 1e-10, worst};
}

InvariantResult exp_consistency(Rng& rng) {
    std::vector<Complex> phi = {Complex(0.8, 0.2), Complex(-0.5, 0.4), Complex(0.3, 0.0)};
    double phi_norm = 0.0;
    for (auto c : phi) phi_norm += std::abs(c);
    auto f = exp_functional_taylor(phi, 20);
    double worst = 0.0;
    for (int i = 0; i < 100; ++i) {
        Point z = random_point(rng, 3, 3);
        double z_norm = 0.0;
        for (const auto& [index, value] : z.entries()) z_norm = std::max(z_norm, std::abs(value));
        if (phi_norm * z_norm > 2.0) z = z.scaled(Complex(2.0 / (phi_norm * z_norm), 0.0));
        Complex inner{};
        for (std::size_t j = 0; j < phi.size(); ++j) {
            inner += phi[j] * z.at(static_cast<std::uint32_t>(j + 1));
        }
        Complex expected = std::exp(inner);
        worst = std::max(worst, std::abs(eval(f, z) - expected) / std::abs(expected));
    }
    return {"exp_consistency", worst <= 1e-8, worst};
}

InvariantResult tail_decay(Rng& rng) {
    CompactSetSpec spec = CompactSetSpec::block({1.0, 0.5, 0.25}, PExponent(2.0));
    std::vector<Complex> phi = {Complex(0.5, 0.0), Complex(0.3, 0.0), Complex(0.2, 0.0)};
    auto f = exp_functional_taylor(phi, 10);
    Cloud cloud = Cloud::generate(spec, 500, rng.next_u64(), {},
                                  SampleOptions{.boundary_fraction = 0.25, .nonneg = true});
    auto curve = tail_seminorm_curve(f, cloud);
    bool monotone = true;
    for (std::size_t i = 0; i + 1 < curve.size(); ++i) monotone = monotone && curve[i] >= curve[i + 1];
    std::size_t first_small = curve.size();
    for (std::size_t i = 0; i < curve.size(); ++i) {
        if (curve[i] < 1e-6) {
            first_small = i;
            break;
        }
    }
    bool pass = monotone && first_small + 1 < curve.size() && curve.back() == 0.0;
    return {"tail_decay", pass, curve.empty() ? 0.0 : curve.back()};
}

}  // namespace

std::vector<InvariantResult> run_invariants(const InvariantOptions& options) {
    Rng rng(mix_seed(options.seed, 0x1417));
    std::vector<InvariantResult> results;
    results.push_back(layout_partition());
    results.push_back(norm_axioms_block(rng));
    results.push_back(norm_axioms_lorentz(rng));
    results.push_back(rearrangement_invariance(rng));
    results.push_back(solidity(rng, options.perturb_solidity));
    results.push_back(balancedness(rng));
    results.push_back(boundary_membership(rng));
    results.push_back(net_covering(rng));
    results.push_back(predual_attainment(rng));
    results.push_back(square_order_total());
    results.push_back(monotone_length());
    results.push_back(cardinalities());
    results.push_back(recursion_consistency());
    results.push_back(phi_compatibility());
    results.push_back(eval_linearity(rng));
    results.push_back(eval_homogeneity(rng));
    results.push_back(supblock_closed_form());
    results.push_back(sup_dominance(rng));
    results.push_back(seminorm_additivity(rng));
    results.push_back(length_monotonicity(rng));
    results.push_back(c1_base_case(rng));
    results.push_back(exp_consistency(rng));
    results.push_back(tail_decay(rng));
    return results;
}

}  // namespace mbasis
