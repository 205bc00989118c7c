#include "mbasis/enumeration.hpp"

#include <cmath>
#include <limits>

namespace mbasis {

std::uint64_t binomial(std::uint64_t n, std::uint64_t k) {
    if (k > n) return 0;
    k = std::min(k, n - k);
    std::uint64_t result = 1;
    for (std::uint64_t i = 1; i <= k; ++i) {
        std::uint64_t numerator = n - k + i;
        // Multiply first in 128 bits to keep the intermediate exact.
        unsigned __int128 wide = static_cast<unsigned __int128>(result) * numerator;
        wide /= i;
        if (wide > std::numeric_limits<std::uint64_t>::max()) {
            throw std::overflow_error("binomial: value exceeds 64 bits");
        }
        result = static_cast<std::uint64_t>(wide);
    }
    return result;
}

std::uint64_t stratum_size(std::uint32_t degree, std::uint32_t length) {
    if (degree == 0) return length == 0 ? 1 : 0;
    if (length == 0) return 0;
    return binomial(static_cast<std::uint64_t>(degree) + length - 2, length - 1);
}

std::uint64_t basis_size(std::uint32_t degree, std::uint32_t k_max) {
    if (k_max == 0) return degree == 0 ? 1 : 0;
    return binomial(static_cast<std::uint64_t>(degree) + k_max - 1, k_max - 1);
}

SquareOrderGenerator::SquareOrderGenerator(std::uint32_t degree, std::uint32_t k_max)
    : degree_(degree), k_max_(k_max) {}

bool SquareOrderGenerator::start_stratum(std::uint32_t length) {
    if (length == 0 || length > k_max_) return false;
    length_ = length;
    reversed_.assign(length, 0);
    if (length == 1) {
        reversed_[0] = degree_;
    } else {
        reversed_[0] = 1;
        reversed_[length - 1] = degree_ - 1;
    }
    return true;
}

bool SquareOrderGenerator::advance_within_stratum() {
    const std::size_t u = reversed_.size();
    if (u <= 1) return false;
    std::uint32_t suffix = 0;
    for (std::size_t jp = u; jp-- > 1;) {  // j = jp - 1 runs u-2 .. 0
        suffix += reversed_[jp];
        std::size_t j = jp - 1;
        if (suffix >= 1) {
            reversed_[j] += 1;
            for (std::size_t i = j + 1; i < u; ++i) reversed_[i] = 0;
            reversed_[u - 1] = suffix - 1;
            return true;
        }
    }
    return false;
}

MultiIndex SquareOrderGenerator::current() const {
    std::vector<MultiIndex::Entry> entries;
    const std::uint32_t u = length_;
    for (std::size_t pos = 0; pos < reversed_.size(); ++pos) {
        if (reversed_[pos] > 0) {
            entries.emplace_back(u - static_cast<std::uint32_t>(pos), reversed_[pos]);
        }
    }
    return MultiIndex(std::move(entries));
}

std::optional<MultiIndex> SquareOrderGenerator::next() {
    if (done_) return std::nullopt;
    if (degree_ == 0) {
        if (emitted_constant_) {
            done_ = true;
            return std::nullopt;
        }
        emitted_constant_ = true;
        return MultiIndex{};
    }
    if (length_ == 0) {
        if (!start_stratum(1)) {
            done_ = true;
            return std::nullopt;
        }
    }
    MultiIndex out = current();
    if (!advance_within_stratum() && !start_stratum(length_ + 1)) done_ = true;
    return out;
}

OrderedMonomialBasis OrderedMonomialBasis::enumerate(std::uint32_t degree, std::uint32_t k_max) {
    std::vector<MultiIndex> list;
    list.reserve(basis_size(degree, k_max));
    SquareOrderGenerator generator(degree, k_max);
    while (auto m = generator.next()) list.push_back(std::move(*m));
    return OrderedMonomialBasis(degree, k_max, std::move(list));
}

std::vector<MultiIndex> recursive_extend(const std::vector<std::vector<MultiIndex>>& bases,
                                         std::uint32_t k) {
    if (k == 0 || bases.size() != k) {
        throw std::invalid_argument("recursive_extend: need one basis per length 1..k");
    }
    std::optional<std::uint32_t> degree;
    for (const auto& basis : bases) {
        for (const auto& m : basis) {
            if (!degree) degree = m.degree();
        }
    }
    if (!degree) throw std::invalid_argument("recursive_extend: cannot infer the degree");

    for (std::uint32_t i = 1; i <= k; ++i) {
        const auto& basis = bases[i - 1];
        if (basis.size() != stratum_size(*degree, i)) {
            throw std::invalid_argument("recursive_extend: incomplete basis for one length");
        }
        for (std::size_t j = 0; j < basis.size(); ++j) {
            if (basis[j].degree() != *degree || basis[j].length() != i) {
                throw std::invalid_argument("recursive_extend: element with wrong degree or length");
            }
            if (j > 0 && square_cmp(basis[j - 1], basis[j]) != std::strong_ordering::less) {
                throw std::invalid_argument("recursive_extend: input not in square order");
            }
        }
    }

    std::vector<MultiIndex> out;
    out.reserve(basis_size(*degree + 1, k) - basis_size(*degree + 1, k - 1));
    for (std::uint32_t i = 1; i <= k; ++i) {
        for (const auto& m : bases[i - 1]) out.push_back(m.times_coordinate(k));
    }
    return out;
}

namespace {

/// Weak compositions of s into `parts` nonnegative parts.
std::uint64_t compositions(std::uint64_t s, std::uint64_t parts) {
    if (parts == 0) return s == 0 ? 1 : 0;
    return binomial(s + parts - 1, parts - 1);
}

}  // namespace

std::uint64_t rank(const MultiIndex& m) {
    const std::uint32_t n = m.degree();
    if (n == 0) return 0;
    const std::uint32_t u = m.length();
    std::uint64_t position = 0;
    for (std::uint32_t shorter = 1; shorter < u; ++shorter) position += stratum_size(n, shorter);
    std::uint32_t remaining = n;
    for (std::uint32_t j = 0; j < u; ++j) {
        std::uint32_t value = m.exponent(u - j);
        std::uint32_t lo = j == 0 ? 1 : 0;
        for (std::uint32_t v = lo; v < value; ++v) {
            position += compositions(remaining - v, u - 1 - j);
        }
        remaining -= value;
    }
    return position;
}

MultiIndex unrank(std::uint32_t degree, std::uint64_t r, std::uint32_t k_max) {
    if (r >= basis_size(degree, k_max)) {
        throw std::domain_error("unrank: rank out of range for this degree and length bound");
    }
    if (degree == 0) return MultiIndex{};
    std::uint32_t u = 1;
    while (r >= stratum_size(degree, u)) {
        r -= stratum_size(degree, u);
        ++u;
    }
    std::vector<MultiIndex::Entry> entries;
    std::uint32_t remaining = degree;
    for (std::uint32_t j = 0; j < u; ++j) {
        std::uint32_t v = j == 0 ? 1 : 0;
        while (true) {
            std::uint64_t below = compositions(remaining - v, u - 1 - j);
            if (r < below) break;
            r -= below;
            ++v;
        }
        if (v > 0) entries.emplace_back(u - j, v);
        remaining -= v;
    }
    return MultiIndex(std::move(entries));
}

std::uint64_t compatible_rank(std::uint32_t degree, std::uint64_t r) {
    std::uint64_t diagonal = degree + r;
    if (diagonal > (1ULL << 31)) {
        throw std::overflow_error("compatible_rank: position exceeds the supported range");
    }
    return diagonal * (diagonal + 1) / 2 + degree;
}

std::pair<std::uint32_t, std::uint64_t> compatible_rank_inverse(std::uint64_t position) {
    auto diagonal = static_cast<std::uint64_t>(
        (std::sqrt(8.0 * static_cast<double>(position) + 1.0) - 1.0) / 2.0);
    while (diagonal * (diagonal + 1) / 2 > position) --diagonal;
    while ((diagonal + 1) * (diagonal + 2) / 2 <= position) ++diagonal;
    std::uint64_t degree = position - diagonal * (diagonal + 1) / 2;
    return {static_cast<std::uint32_t>(degree), diagonal - degree};
}

}  // namespace mbasis
