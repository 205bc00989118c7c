#include "mbasis/spaces.hpp"

#include <algorithm>

namespace mbasis {

double block_space_norm(const Point& z, const PExponent& p) {
    const double pe = p.value();
    double best = 0.0;
    double block_sum = 0.0;
    std::uint32_t current_block = 0;
    // Entries are sorted by index, so each block's coordinates are contiguous.
    for (const auto& [index, value] : z.entries()) {
        std::uint32_t b = block_layout::block_of_index(index);
        if (b != current_block) {
            if (current_block != 0) best = std::max(best, std::pow(block_sum, 1.0 / pe));
            current_block = b;
            block_sum = 0.0;
        }
        block_sum += std::pow(std::abs(value), pe);
    }
    if (current_block != 0) best = std::max(best, std::pow(block_sum, 1.0 / pe));
    return best;
}

std::vector<double> decreasing_rearrangement(const Point& z) {
    std::vector<double> moduli;
    moduli.reserve(z.nnz());
    for (const auto& [index, value] : z.entries()) moduli.push_back(std::abs(value));
    std::stable_sort(moduli.begin(), moduli.end(), std::greater<double>());
    return moduli;
}

double lorentz_norm(const Point& z, const LorentzWeights& w) {
    auto rearranged = decreasing_rearrangement(z);
    if (rearranged.size() > w.size()) {
        throw std::invalid_argument("lorentz_norm: weight prefix shorter than support");
    }
    double sum = 0.0;
    for (std::size_t i = 0; i < rearranged.size(); ++i) sum += rearranged[i] * w.prefix()[i];
    return sum;
}

double lorentz_predual_norm(const Point& z, const LorentzWeights& w) {
    auto rearranged = decreasing_rearrangement(z);
    if (rearranged.size() > w.size()) {
        throw std::invalid_argument("lorentz_predual_norm: weight prefix shorter than support");
    }
    double best = 0.0;
    double prefix = 0.0;
    for (std::size_t k = 1; k <= rearranged.size(); ++k) {
        prefix += rearranged[k - 1];
        best = std::max(best, prefix / w.partial_sum(k));
    }
    return best;
}

}  // namespace mbasis
