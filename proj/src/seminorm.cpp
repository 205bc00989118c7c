#include "mbasis/seminorm.hpp"

#include <algorithm>
#include <cmath>

namespace mbasis {

double seminorm_p_lambda(const TaylorTruncation& f, const Cloud& cloud) {
    double sum = 0.0;
    for (const auto& part : f.parts()) sum += poly_sup_estimate(part, cloud).value;
    return sum;
}

double seminorm_p_lambda(const TaylorTruncation& f, const CompactSetSpec& spec,
                         std::uint64_t budget, std::uint64_t seed) {
    return seminorm_p_lambda(f, Cloud::generate(spec, budget, seed, {}));
}

std::vector<double> tail_seminorm_curve(const TaylorTruncation& f, const Cloud& cloud) {
    struct OrderedTerm {
        std::uint64_t position;
        std::uint32_t degree;
        MultiIndex monomial;
        Complex coefficient;
    };
    std::vector<OrderedTerm> terms;
    terms.reserve(f.total_term_count());
    for (const auto& part : f.parts()) {
        for (const auto& [m, c] : part.terms()) {
            terms.push_back({compatible_rank(part.degree(), rank(m)), part.degree(), m, c});
        }
    }
    std::sort(terms.begin(), terms.end(),
              [](const OrderedTerm& a, const OrderedTerm& b) { return a.position < b.position; });

    const std::size_t total = terms.size();
    const std::size_t cloud_size = cloud.points().size();
    const std::uint32_t degrees = f.max_degree() + 1;

    // Per-degree running tail values at every cloud point, filled from the
    // last term backwards; entry N of the curve is read off after the terms
    // with positions >= N have been added.
    std::vector<std::vector<Complex>> accumulator(degrees, std::vector<Complex>(cloud_size, Complex{}));
    std::vector<double> degree_max(degrees, 0.0);
    std::vector<double> curve(total + 1, 0.0);

    auto total_of = [&]() {
        double s = 0.0;
        for (double v : degree_max) s += v;
        return s;
    };

    curve[total] = 0.0;
    for (std::size_t j = total; j-- > 0;) {
        const auto& t = terms[j];
        auto& acc = accumulator[t.degree];
        double best = 0.0;
        for (std::size_t i = 0; i < cloud_size; ++i) {
            acc[i] += t.coefficient * eval_monomial(t.monomial, cloud.points()[i]);
            best = std::max(best, std::abs(acc[i]));
        }
        degree_max[t.degree] = best;
        curve[j] = total_of();
    }
    return curve;
}

}  // namespace mbasis
