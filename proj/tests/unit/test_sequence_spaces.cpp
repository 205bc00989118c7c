#include <doctest.h>

#include "mbasis/rng.hpp"
#include "mbasis/spaces.hpp"
#include "oracles.hpp"

using namespace mbasis;

namespace {

Point random_point(Rng& rng, std::size_t support, std::uint32_t max_index) {
    std::vector<Point::Entry> entries;
    std::vector<std::uint32_t> indices;
    while (indices.size() < support) {
        auto i = 1 + static_cast<std::uint32_t>(rng.below(max_index));
        if (std::find(indices.begin(), indices.end(), i) == indices.end()) indices.push_back(i);
    }
    for (auto i : indices) entries.emplace_back(i, rng.complex_normal());
    return Point(std::move(entries));
}

}  // namespace

TEST_CASE("triangular block layout") {
    auto [s3, block3] = block_layout::layout(3);
    CHECK(s3 == 6);
    CHECK(block3 == IndexInterval{4, 6});

    auto [s1, block1] = block_layout::layout(1);
    CHECK(s1 == 1);
    CHECK(block1 == IndexInterval{1, 1});

    CHECK(block_layout::cumulative(0) == 0);
    CHECK_THROWS_AS(block_layout::block(0), std::domain_error);

    CHECK(block_layout::block_of_index(5) == 3);
    for (std::uint64_t i = 1; i <= block_layout::cumulative(100); ++i) {
        CHECK(block_layout::block_of_index(i) == oracles::block_of_index_scan(i));
    }
}

TEST_CASE("blocks partition the indices") {
    std::uint64_t next = 1;
    for (std::uint32_t n = 1; n <= 100; ++n) {
        auto interval = block_layout::block(n);
        CHECK(interval.first == next);
        CHECK(interval.size() == n);
        next = interval.last + 1;
    }
}

TEST_CASE("block space norm basics") {
    for (double p : {1.0, 1.5, 2.0, 3.0}) {
        CHECK(block_space_norm(Point::unit(1), PExponent(p)) == doctest::Approx(1.0));
    }
    // 3-4-5 inside block two.
    Point z({{2, {3.0, 0.0}}, {3, {4.0, 0.0}}});
    CHECK(block_space_norm(z, PExponent(2.0)) == doctest::Approx(5.0));
}

TEST_CASE("block space norm matches direct summation") {
    Rng rng(2024);
    for (int i = 0; i < 100; ++i) {
        Point z = random_point(rng, 12, 20);
        double direct = oracles::block_norm_direct(z, 1.5);
        CHECK(block_space_norm(z, PExponent(1.5)) == doctest::Approx(direct).epsilon(1e-12));
    }
}

TEST_CASE("decreasing rearrangement") {
    Point simple({{1, {1, 0}}, {2, {2, 0}}, {3, {3, 0}}});
    CHECK(decreasing_rearrangement(simple) == std::vector<double>{3.0, 2.0, 1.0});

    // (i, -2, 0, 2i): moduli 1, 2, 2 with the explicit zero dropped.
    Point mixed({{1, {0, 1}}, {2, {-2, 0}}, {3, {0, 0}}, {4, {0, 2}}});
    CHECK(decreasing_rearrangement(mixed) == std::vector<double>{2.0, 2.0, 1.0});

    Rng rng(7);
    for (int i = 0; i < 60; ++i) {
        Point z = random_point(rng, 1 + rng.below(7), 12);
        auto expected = oracles::rearrangement_by_permutations(z);
        auto got = decreasing_rearrangement(z);
        REQUIRE(got.size() == expected.size());
        for (std::size_t j = 0; j < got.size(); ++j) CHECK(got[j] == doctest::Approx(expected[j]));
    }
}

TEST_CASE("lorentz norm") {
    auto w = LorentzWeights::harmonic(16);
    CHECK(lorentz_norm(Point::unit(1), w) == doctest::Approx(1.0));

    // Frozen from the exhaustive permutation oracle: 1*1 + 1*(1/2) = 3/2.
    Point pair({{1, {1, 0}}, {2, {1, 0}}});
    CHECK(lorentz_norm(pair, w) == doctest::Approx(1.5));

    Rng rng(11);
    for (int i = 0; i < 60; ++i) {
        Point z = random_point(rng, 1 + rng.below(7), 10);
        double expected = oracles::lorentz_norm_exhaustive(z, w.prefix());
        CHECK(lorentz_norm(z, w) == doctest::Approx(expected).epsilon(1e-12));
    }

    Point wide({{1, {1, 0}}, {2, {1, 0}}});
    CHECK_THROWS_AS(lorentz_norm(wide, LorentzWeights({1.0})), std::invalid_argument);
    CHECK_NOTHROW(lorentz_norm(Point::unit(1), LorentzWeights({1.0})));
}

TEST_CASE("lorentz predual norm") {
    auto w = LorentzWeights::harmonic(16);
    CHECK(lorentz_predual_norm(Point::unit(1), w) == doctest::Approx(1.0));

    // Frozen from the scan-all-k oracle: ratios 1, 4/3, 12/11, ... peak at 4/3.
    Point pair({{1, {1, 0}}, {2, {1, 0}}});
    CHECK(lorentz_predual_norm(pair, w) == doctest::Approx(4.0 / 3.0));

    Rng rng(13);
    for (int i = 0; i < 60; ++i) {
        Point z = random_point(rng, 1 + rng.below(7), 10);
        double expected = oracles::predual_norm_scan(z, w.prefix());
        CHECK(lorentz_predual_norm(z, w) == doctest::Approx(expected).epsilon(1e-12));
    }
}

TEST_CASE("both lorentz norms are rearrangement invariant") {
    auto w = LorentzWeights::harmonic(32);
    Rng rng(17);
    for (int i = 0; i < 50; ++i) {
        Point z = random_point(rng, 6, 12);
        auto support = z.support();
        std::vector<std::uint32_t> shuffled = support;
        for (std::size_t j = shuffled.size(); j > 1; --j) std::swap(shuffled[j - 1], shuffled[rng.below(j)]);
        std::vector<Point::Entry> moved;
        for (std::size_t j = 0; j < support.size(); ++j) {
            moved.emplace_back(shuffled[j], z.at(support[j]) * rng.unit_phase());
        }
        Point y(std::move(moved));
        CHECK(lorentz_norm(y, w) == doctest::Approx(lorentz_norm(z, w)).epsilon(1e-12));
        CHECK(lorentz_predual_norm(y, w) == doctest::Approx(lorentz_predual_norm(z, w)).epsilon(1e-12));
    }
}

TEST_CASE("weights validate their invariants") {
    CHECK_THROWS_AS(LorentzWeights({0.5, 0.4}), std::invalid_argument);  // w1 != 1
    CHECK_THROWS_AS(LorentzWeights({1.0, 1.2}), std::invalid_argument);  // increasing
    CHECK_THROWS_AS(LorentzWeights({1.0, 0.0}), std::invalid_argument);  // nonpositive
    auto w = LorentzWeights::harmonic(4);
    CHECK(w.partial_sum(3) == doctest::Approx(1.0 + 0.5 + 1.0 / 3.0));
}
