#include "mbasis/polynomial.hpp"

#include <algorithm>

namespace mbasis {

TaylorTruncation exp_functional_taylor(std::span<const Complex> phi, std::uint32_t max_degree) {
    const auto width = static_cast<std::uint32_t>(phi.size());
    std::vector<HomogeneousPolynomial> parts;
    parts.reserve(max_degree + 1);
    parts.emplace_back(0, std::vector<HomogeneousPolynomial::Term>{{MultiIndex{}, Complex(1.0, 0.0)}});
    for (std::uint32_t n = 1; n <= max_degree; ++n) {
        std::vector<HomogeneousPolynomial::Term> terms;
        if (width > 0) {
            SquareOrderGenerator generator(n, width);
            while (auto m = generator.next()) {
                Complex coefficient(1.0, 0.0);
                for (const auto& [index, exponent] : m->entries()) {
                    double factorial = 1.0;
                    for (std::uint32_t j = 2; j <= exponent; ++j) factorial *= j;
                    coefficient *= integer_power(phi[index - 1], exponent) / factorial;
                }
                if (coefficient != Complex(0.0, 0.0)) terms.emplace_back(std::move(*m), coefficient);
            }
        }
        parts.emplace_back(n, std::move(terms));
    }
    return TaylorTruncation(std::move(parts));
}

namespace {

struct OrderedTerm {
    std::uint64_t global_position;
    std::uint32_t degree;
    HomogeneousPolynomial::Term term;
};

std::vector<OrderedTerm> ordered_terms(const TaylorTruncation& f) {
    std::vector<OrderedTerm> all;
    all.reserve(f.total_term_count());
    for (const auto& part : f.parts()) {
        for (const auto& term : part.terms()) {
            all.push_back({compatible_rank(part.degree(), rank(term.first)), part.degree(), term});
        }
    }
    std::sort(all.begin(), all.end(),
              [](const OrderedTerm& a, const OrderedTerm& b) { return a.global_position < b.global_position; });
    return all;
}

TaylorTruncation assemble(std::uint32_t max_degree, std::span<const OrderedTerm> terms) {
    std::vector<std::vector<HomogeneousPolynomial::Term>> buckets(max_degree + 1);
    for (const auto& t : terms) buckets[t.degree].push_back(t.term);
    std::vector<HomogeneousPolynomial> parts;
    parts.reserve(max_degree + 1);
    for (std::uint32_t d = 0; d <= max_degree; ++d) parts.emplace_back(d, std::move(buckets[d]));
    return TaylorTruncation(std::move(parts));
}

}  // namespace

std::pair<TaylorTruncation, TaylorTruncation> split_at(const TaylorTruncation& f,
                                                       std::uint64_t n_monomials) {
    auto all = ordered_terms(f);
    std::size_t cut = std::min<std::size_t>(n_monomials, all.size());
    std::span<const OrderedTerm> span(all);
    return {assemble(f.max_degree(), span.subspan(0, cut)), assemble(f.max_degree(), span.subspan(cut))};
}

TaylorTruncation partial_sum(const TaylorTruncation& f, std::uint64_t n_monomials) {
    return split_at(f, n_monomials).first;
}

}  // namespace mbasis
