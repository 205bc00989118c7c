#include <doctest.h>

#include "mbasis/net.hpp"
#include "mbasis/rng.hpp"
#include "mbasis/sampling.hpp"

using namespace mbasis;

TEST_CASE("tiny sets get the zero net") {
    // Every lambda entry at most eps/2, so 0 covers the whole set.
    CompactSetSpec small = CompactSetSpec::block({0.3, 0.2}, PExponent(2.0));
    CHECK(epsilon_net(small, 0.7).size() == 1);

    CompactSetSpec ball = CompactSetSpec::block({1.0}, PExponent(1.0));
    CHECK(epsilon_net(ball, 2.0).size() == 1);

    CompactSetSpec lorentz_small = CompactSetSpec::lorentz({0.4, 0.3}, LorentzWeights::harmonic(4));
    CHECK(epsilon_net(lorentz_small, 0.9).size() == 1);
}

TEST_CASE("eps must be positive") {
    CompactSetSpec spec = CompactSetSpec::block({1.0}, PExponent(2.0));
    CHECK_THROWS_AS(EpsilonNet(spec, 0.0), std::domain_error);
    CHECK_THROWS_AS(EpsilonNet(spec, -1.0), std::domain_error);
}

TEST_CASE("net points are members") {
    std::vector<std::pair<CompactSetSpec, double>> cases = {
        {CompactSetSpec::block({1.0, 0.4}, PExponent(2.0)), 1.0},
        {CompactSetSpec::block({1.0, 0.6}, PExponent(1.0)), 1.1},
        {CompactSetSpec::lorentz({1.0, 0.7}, LorentzWeights::harmonic(4)), 1.0},
    };
    for (const auto& [spec, eps] : cases) {
        EpsilonNet net(spec, eps);
        CHECK(net.points().size() > 1);
        for (const auto& q : net.points()) CHECK(in_compact_set(q, spec));
    }
}

TEST_CASE("snapped samples stay close and inside the net") {
    std::vector<std::pair<CompactSetSpec, double>> cases = {
        {CompactSetSpec::block({1.0, 0.4}, PExponent(2.0)), 0.9},
        {CompactSetSpec::block({1.0, 0.5, 0.25}, PExponent(1.0)), 1.3},
        {CompactSetSpec::lorentz({1.0, 0.7}, LorentzWeights::harmonic(4)), 1.0},
        {CompactSetSpec::lorentz({0.8, 0.6, 0.5}, LorentzWeights::harmonic(6)), 1.2},
    };
    for (const auto& [spec, eps] : cases) {
        EpsilonNet net(spec, eps);
        for (std::size_t i = 0; i < 3000; ++i) {
            Point z = sample_point(spec, mix_seed(42, i));
            Point q = net.snap(z);
            REQUIRE(net.contains(q));
            CHECK(spec.ambient_norm(z - q) <= eps);
        }
    }
}

TEST_CASE("net size does not grow when eps doubles") {
    CompactSetSpec spec = CompactSetSpec::block({1.0, 0.4}, PExponent(2.0));
    for (double eps : {0.6, 0.9, 1.3}) {
        CHECK(epsilon_net(spec, 2 * eps).size() <= epsilon_net(spec, eps).size());
    }
}
