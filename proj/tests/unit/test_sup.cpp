#include <doctest.h>

#include <cmath>

#include "mbasis/rng.hpp"
#include "mbasis/sup.hpp"
#include "oracles.hpp"

using namespace mbasis;

namespace {

MultiIndex from_dense(std::initializer_list<std::uint32_t> exponents) {
    std::vector<MultiIndex::Entry> entries;
    std::uint32_t index = 1;
    for (auto e : exponents) {
        if (e > 0) entries.emplace_back(index, e);
        ++index;
    }
    return MultiIndex(std::move(entries));
}

}  // namespace

TEST_CASE("closed-form block sup on the worked examples") {
    CompactSetSpec unit = CompactSetSpec::block({1.0}, PExponent(2.0));
    for (double p : {1.0, 1.7, 3.0}) {
        CompactSetSpec spec = CompactSetSpec::block({1.0}, PExponent(p));
        CHECK(monomial_sup_block(from_dense({2}), spec).value == doctest::Approx(1.0));
    }

    // |z2 z3| under |z2|^2 + |z3|^2 <= 1 peaks at 1/2; frozen from the grid.
    CompactSetSpec two = CompactSetSpec::block({1.0, 1.0}, PExponent(2.0));
    auto pair = monomial_sup_block(from_dense({0, 1, 1}), two);
    CHECK(pair.value == doctest::Approx(0.5).epsilon(1e-12));
    CHECK(in_compact_set(pair.witness, two));
    CHECK(std::abs(eval_monomial(from_dense({0, 1, 1}), pair.witness)) ==
          doctest::Approx(pair.value).epsilon(1e-10));

    // A block with a zero cap kills the sup.
    CompactSetSpec capped = CompactSetSpec::block({1.0, 0.0}, PExponent(2.0));
    CHECK(monomial_sup_block(from_dense({1, 1}), capped).value == 0.0);
    CHECK(monomial_sup_block(MultiIndex{}, unit).value == doctest::Approx(1.0));
}

TEST_CASE("closed-form block sup matches the scan oracle") {
    std::vector<double> lambda = {1.0, 0.8, 0.5};
    for (double p : {1.0, 1.5, 2.0, 3.0}) {
        CompactSetSpec spec = CompactSetSpec::block(lambda, PExponent(p));
        for (std::uint32_t n = 1; n <= 5; ++n) {
            for (const auto& m : OrderedMonomialBasis::enumerate(n, 4).list()) {
                double exact = monomial_sup_block(m, spec).value;
                double scanned = oracles::block_monomial_sup_scan(m, lambda, p);
                CHECK(exact == doctest::Approx(scanned).epsilon(1e-6));
            }
        }
    }
}

TEST_CASE("block sup is multiplicative across blocks") {
    std::vector<double> lambda = {1.0, 0.8};
    for (double p : {1.0, 2.0}) {
        CompactSetSpec spec = CompactSetSpec::block(lambda, PExponent(p));
        for (auto m : {from_dense({1, 1, 1}), from_dense({2, 0, 1}), from_dense({1, 2})}) {
            double joint = oracles::block_monomial_sup_joint_grid(m, lambda, p);
            double split = 1.0;
            // Per-block pieces of m, multiplied.
            split *= monomial_sup_block(MultiIndex({{1, m.exponent(1)}}), spec).value;
            std::vector<MultiIndex::Entry> rest;
            if (m.exponent(2) > 0) rest.emplace_back(2, m.exponent(2));
            if (m.exponent(3) > 0) rest.emplace_back(3, m.exponent(3));
            split *= monomial_sup_block(MultiIndex(std::move(rest)), spec).value;
            double full = monomial_sup_block(m, spec).value;
            CHECK(full == doctest::Approx(split).epsilon(1e-10));
            CHECK(full == doctest::Approx(joint).epsilon(2e-3));
        }
    }
}

TEST_CASE("lorentz sup via coordinate ascent") {
    auto w = LorentzWeights::harmonic(8);
    CompactSetSpec ones = CompactSetSpec::lorentz({1.0, 1.0, 1.0}, w);

    // Single coordinate: the best z1 is min_k lambda_k W_k = 1; frozen from
    // the dense scan oracle.
    auto single = monomial_sup_lorentz(from_dense({1}), ones);
    CHECK(single.value == doctest::Approx(1.0).epsilon(1e-9));
    CHECK(in_compact_set(single.witness, ones));

    CompactSetSpec zero = CompactSetSpec::lorentz({0.0, 0.0}, w);
    CHECK(monomial_sup_lorentz(from_dense({1}), zero).value == 0.0);

    std::vector<std::vector<double>> lambdas = {{1.0, 0.8, 0.6}, {0.5, 0.45, 0.4}};
    std::vector<MultiIndex> monomials = {from_dense({1, 1}), from_dense({2, 1}),
                                         from_dense({1, 1, 1}), from_dense({0, 2, 1})};
    for (const auto& lambda : lambdas) {
        CompactSetSpec spec = CompactSetSpec::lorentz(lambda, w);
        for (const auto& m : monomials) {
            double ascent = monomial_sup_lorentz(m, spec).value;
            double grid = oracles::lorentz_monomial_sup_grid(m, lambda, w.prefix());
            CHECK(ascent == doctest::Approx(grid).epsilon(1e-4));
        }
    }
}

TEST_CASE("clouds are truncation closed and deterministic") {
    CompactSetSpec spec = CompactSetSpec::block({1.0, 0.8}, PExponent(2.0));
    std::vector<std::uint32_t> cuts = {1, 2, 3};
    Cloud cloud = Cloud::generate(spec, 200, 5, cuts);
    CHECK(cloud.truncation_closed(cuts));
    for (const auto& z : cloud.points()) CHECK(in_compact_set(z, spec));

    Cloud again = Cloud::generate(spec, 200, 5, cuts);
    REQUIRE(again.points().size() == cloud.points().size());
    for (std::size_t i = 0; i < cloud.points().size(); ++i) {
        CHECK(again.points()[i] == cloud.points()[i]);
    }
}

TEST_CASE("sampled sup reaches the closed form on single monomials") {
    CompactSetSpec spec = CompactSetSpec::block({1.0, 0.8, 0.5}, PExponent(2.0));
    std::vector<MultiIndex> monomials = {
        from_dense({3}),                 // one coordinate
        from_dense({0, 1, 1}),           // balanced pair in block two
        from_dense({0, 2, 1}),           // unbalanced pair
        from_dense({1, 1, 1, 1, 1, 1}),  // multilinear over six coordinates
    };
    for (const auto& m : monomials) {
        HomogeneousPolynomial poly(m.degree(), {{m, {1.0, 0.0}}});
        double exact = monomial_sup_block(m, spec).value;
        auto sampled = poly_sup_estimate(poly, spec, 100000, {}, 77);
        CHECK(sampled.value <= exact * (1.0 + 1e-9));  // lower-bound semantics
        CHECK(sampled.value >= exact * (1.0 - 1e-3));
    }
}

TEST_CASE("sampled sup grows with nested budgets") {
    CompactSetSpec spec = CompactSetSpec::block({1.0, 0.8}, PExponent(2.0));
    HomogeneousPolynomial poly(2, {{from_dense({1, 1}), {1.0, 0.5}},
                                   {from_dense({0, 1, 1}), {-0.3, 0.2}}});
    double previous = -1.0;
    for (std::uint64_t budget : {100, 200, 400, 800}) {
        double value = poly_sup_estimate(poly, spec, budget, {}, 31).value;
        CHECK(value >= previous);
        previous = value;
    }
    CHECK(poly_sup_estimate(HomogeneousPolynomial(2), spec, 100, {}, 31).value == 0.0);
}
