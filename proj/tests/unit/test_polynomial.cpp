#include <doctest.h>

#include <cmath>

#include "mbasis/polynomial.hpp"
#include "mbasis/rng.hpp"

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

TEST_CASE("monomial evaluation") {
    Point z({{1, {2.0, 0.0}}, {2, {3.0, 0.0}}});
    CHECK(eval_monomial(from_dense({1, 1}), z) == Complex(6.0, 0.0));
    CHECK(eval_monomial(MultiIndex{}, z) == Complex(1.0, 0.0));  // empty product
    CHECK(eval(HomogeneousPolynomial(3), z) == Complex(0.0, 0.0));
}

TEST_CASE("expanded square matches the direct square") {
    // (z1 + z2)^2 = z1^2 + 2 z1 z2 + z2^2 on random points.
    HomogeneousPolynomial square(2, {{from_dense({2}), {1.0, 0.0}},
                                     {from_dense({1, 1}), {2.0, 0.0}},
                                     {from_dense({0, 2}), {1.0, 0.0}}});
    Rng rng(3);
    for (int i = 0; i < 100; ++i) {
        Point z({{1, rng.complex_normal()}, {2, rng.complex_normal()}});
        Complex direct = (z.at(1) + z.at(2)) * (z.at(1) + z.at(2));
        CHECK(std::abs(eval(square, z) - direct) <= 1e-12 * std::max(1.0, std::abs(direct)));
    }
}

TEST_CASE("terms stay in square order after construction") {
    HomogeneousPolynomial p(2, {{from_dense({0, 2}), {1.0, 0.0}},
                                {from_dense({2}), {1.0, 0.0}},
                                {from_dense({1, 1}), {1.0, 0.0}}});
    REQUIRE(p.term_count() == 3);
    CHECK(p.terms()[0].first == from_dense({2}));
    CHECK(p.terms()[2].first == from_dense({0, 2}));
    CHECK_THROWS_AS(HomogeneousPolynomial(2, {{from_dense({1}), {1.0, 0.0}}}), std::invalid_argument);
}

TEST_CASE("exponential functional expansion") {
    std::vector<Complex> empty;
    auto constant = exp_functional_taylor(empty, 0);
    CHECK(constant.total_term_count() == 1);
    CHECK(eval(constant, Point{}) == Complex(1.0, 0.0));

    // Degree-two coefficient of z1 z2 is phi1 * phi2; frozen from expanding
    // (phi1 z1 + phi2 z2)^2 / 2 by hand.
    std::vector<Complex> phi = {{0.7, 0.1}, {-0.4, 0.3}};
    auto f = exp_functional_taylor(phi, 3);
    Complex coefficient = f.part(2).coefficient(from_dense({1, 1}));
    Complex expected = phi[0] * phi[1];
    CHECK(std::abs(coefficient - expected) <= 1e-15);
    // And z1^2 carries phi1^2 / 2.
    CHECK(std::abs(f.part(2).coefficient(from_dense({2})) - phi[0] * phi[0] * 0.5) <= 1e-15);

    // One coordinate: P_n is c^n / n! z1^n.
    std::vector<Complex> single = {{0.9, 0.0}};
    auto g = exp_functional_taylor(single, 6);
    double factorial = 1.0;
    for (std::uint32_t n = 1; n <= 6; ++n) {
        factorial *= n;
        REQUIRE(g.part(n).term_count() == 1);
        CHECK(std::abs(g.part(n).coefficient(from_dense({n})) -
                       integer_power(single[0], n) / factorial) <= 1e-15);
    }
}

TEST_CASE("truncation approaches the exponential") {
    std::vector<Complex> phi = {{0.5, 0.3}, {0.2, -0.4}};
    auto f = exp_functional_taylor(phi, 20);
    Rng rng(9);
    for (int i = 0; i < 50; ++i) {
        Point z({{1, 0.8 * rng.complex_normal()}, {2, 0.8 * rng.complex_normal()}});
        Complex inner = phi[0] * z.at(1) + phi[1] * z.at(2);
        if (std::abs(inner) > 2.0) continue;
        Complex expected = std::exp(inner);
        CHECK(std::abs(eval(f, z) - expected) <= 1e-8 * std::abs(expected));
    }
}

TEST_CASE("partial sums under the global order") {
    std::vector<Complex> phi = {{0.5, 0.0}, {0.25, 0.0}};
    auto f = exp_functional_taylor(phi, 4);
    const auto total = static_cast<std::uint64_t>(f.total_term_count());

    auto zero = partial_sum(f, 0);
    CHECK(zero.total_term_count() == 0);
    CHECK(partial_sum(f, total) == f);
    CHECK(partial_sum(f, total + 10) == f);

    // The constant term comes first, the degree-one terms next.
    auto first = partial_sum(f, 1);
    CHECK(first.total_term_count() == 1);
    CHECK(first.part(0).term_count() == 1);

    // head + tail reassemble f.
    for (std::uint64_t n : {std::uint64_t{2}, std::uint64_t{5}, total}) {
        auto [head, tail] = split_at(f, n);
        CHECK(head.total_term_count() == std::min(n, total));
        CHECK(head.total_term_count() + tail.total_term_count() == total);
        Rng rng(11);
        for (int i = 0; i < 20; ++i) {
            Point z({{1, rng.complex_normal()}, {2, rng.complex_normal()}});
            Complex sum = eval(head, z) + eval(tail, z);
            CHECK(std::abs(sum - eval(f, z)) <= 1e-12 * std::max(1.0, std::abs(eval(f, z))));
        }
    }
}

TEST_CASE("scaling and coordinate shifts") {
    HomogeneousPolynomial p(1, {{from_dense({1}), {2.0, 0.0}}});
    auto q = p.times_coordinate(3);
    CHECK(q.degree() == 2);
    REQUIRE(q.term_count() == 1);
    CHECK(q.terms()[0].first == from_dense({1, 0, 1}));
    CHECK(p.scaled({0.0, 0.0}).is_zero());
}
