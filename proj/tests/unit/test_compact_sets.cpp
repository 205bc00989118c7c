#include <doctest.h>

#include "mbasis/rng.hpp"
#include "mbasis/sampling.hpp"

using namespace mbasis;

namespace {

std::vector<CompactSetSpec> test_specs() {
    return {
        CompactSetSpec::block({1.0, 0.8, 0.5}, PExponent(2.0)),
        CompactSetSpec::block({1.0, 0.5}, PExponent(1.0)),
        CompactSetSpec::lorentz({1.0, 0.8, 0.6}, LorentzWeights::harmonic(8)),
        CompactSetSpec::lorentz({0.5, 0.4, 0.3}, LorentzWeights::harmonic(8)),
    };
}

}  // namespace

TEST_CASE("zero point belongs to every set") {
    for (const auto& spec : test_specs()) CHECK(in_compact_set(Point{}, spec));
}

TEST_CASE("boundary membership in the block variant") {
    CompactSetSpec spec = CompactSetSpec::block({1.0, 1.0}, PExponent(2.0));
    Point boundary({{2, {0.6, 0.0}}, {3, {0.8, 0.0}}});  // block-two norm exactly 1
    CHECK(in_compact_set(boundary, spec));
    CHECK(membership_excess(boundary, spec) == doctest::Approx(0.0).epsilon(1e-12));
    CHECK_FALSE(in_compact_set(boundary.scaled({1.01, 0.0}), spec));
}

TEST_CASE("coordinates past the lambda prefix must vanish") {
    CompactSetSpec block = CompactSetSpec::block({1.0}, PExponent(2.0));
    CHECK(in_compact_set(Point::unit(1), block));
    CHECK_FALSE(in_compact_set(Point::unit(2), block));  // block two is capped at zero

    CompactSetSpec lorentz = CompactSetSpec::lorentz({1.0, 1.0}, LorentzWeights::harmonic(4));
    CHECK(in_compact_set(Point::unit(2).scaled({0.9, 0.0}), lorentz));
    CHECK_FALSE(in_compact_set(Point::unit(3).scaled({0.9, 0.0}), lorentz));
}

TEST_CASE("lorentz membership checks every prefix ratio") {
    // lambda dips after the first entry, so a large single spike fails at k=2.
    CompactSetSpec spec = CompactSetSpec::lorentz({1.0, 0.01}, LorentzWeights::harmonic(4));
    Point spike = Point::unit(1).scaled({0.9, 0.0});
    CHECK_FALSE(in_compact_set(spike, spec));
    CHECK(in_compact_set(spike.scaled({0.016, 0.0}), spec));
}

TEST_CASE("samples are members, deterministic, and often tight") {
    for (const auto& spec : test_specs()) {
        std::size_t tight = 0;
        const std::size_t draws = 10000;
        for (std::size_t i = 0; i < draws; ++i) {
            Point z = sample_point(spec, mix_seed(99, i));
            CHECK(in_compact_set(z, spec));
            if (std::abs(membership_excess(z, spec)) <= 1e-12) ++tight;
        }
        CHECK(tight >= draws / 10);
        CHECK(sample_point(spec, 1234) == sample_point(spec, 1234));
        CHECK(sample_point(spec, 1234, SampleOptions{.nonneg = true}) ==
              sample_point(spec, 1234, SampleOptions{.nonneg = true}));
    }
}

TEST_CASE("solidity and balancedness hold on random shrinks") {
    Rng rng(5);
    for (const auto& spec : test_specs()) {
        for (int i = 0; i < 300; ++i) {
            Point z = sample_point(spec, rng.next_u64());
            std::vector<Point::Entry> shrunk;
            for (const auto& [index, value] : z.entries()) {
                shrunk.emplace_back(index, value * rng.uniform01() * rng.unit_phase());
            }
            CHECK(in_compact_set(Point(std::move(shrunk)), spec));
            Complex c = rng.uniform01() * rng.unit_phase();
            CHECK(in_compact_set(z.scaled(c), spec));
        }
    }
}

TEST_CASE("nonneg sampling produces nonnegative coordinates") {
    for (const auto& spec : test_specs()) {
        for (std::size_t i = 0; i < 200; ++i) {
            Point z = sample_point(spec, mix_seed(7, i), SampleOptions{.nonneg = true});
            for (const auto& [index, value] : z.entries()) {
                CHECK(value.imag() == 0.0);
                CHECK(value.real() >= 0.0);
            }
        }
    }
}

TEST_CASE("spec validation") {
    CHECK_THROWS_AS(CompactSetSpec::block({-0.1}, PExponent(2.0)), std::invalid_argument);
    CHECK_THROWS_AS(PExponent(0.5), std::invalid_argument);
    // Weight prefix shorter than lambda.
    CHECK_THROWS_AS(CompactSetSpec::lorentz({1.0, 1.0, 1.0}, LorentzWeights::harmonic(2)),
                    std::invalid_argument);
    CHECK(CompactSetSpec::block({1.0, 0.5}, PExponent(2.0)).dimension() == 3);
    CHECK(CompactSetSpec::lorentz({1.0, 0.5}, LorentzWeights::harmonic(2)).dimension() == 2);
}

TEST_CASE("coordinate cap bounds every sampled coordinate") {
    for (const auto& spec : test_specs()) {
        double cap = spec.coordinate_cap();
        for (std::size_t i = 0; i < 500; ++i) {
            Point z = sample_point(spec, mix_seed(31, i));
            for (const auto& [index, value] : z.entries()) {
                CHECK(std::abs(value) <= cap * (1.0 + 1e-9));
            }
        }
    }
}
