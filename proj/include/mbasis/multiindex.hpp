#pragma once

#include <algorithm>
#include <compare>
#include <cstdint>
#include <stdexcept>
#include <utility>
#include <vector>

namespace mbasis {

/// Finitely supported exponents m_1, m_2, ... of a monomial z^m. Stored
/// sparsely, sorted by index, zeros removed: the empty multi-index is the
/// exponent of the constant monomial.
class MultiIndex {
  public:
    using Entry = std::pair<std::uint32_t, std::uint32_t>;  // index >= 1 -> exponent >= 1

    MultiIndex() = default;

    explicit MultiIndex(std::vector<Entry> entries) : entries_(std::move(entries)) {
        for (const auto& [i, e] : entries_) {
            if (i == 0) throw std::invalid_argument("MultiIndex: indices are 1-based");
        }
        std::sort(entries_.begin(), entries_.end());
        for (std::size_t i = 1; i < entries_.size(); ++i) {
            if (entries_[i].first == entries_[i - 1].first) {
                throw std::invalid_argument("MultiIndex: duplicate index");
            }
        }
        std::erase_if(entries_, [](const Entry& e) { return e.second == 0; });
    }

    /// The multi-index of the coordinate functional z_index.
    static MultiIndex unit(std::uint32_t index) { return MultiIndex({{index, 1}}); }

    const std::vector<Entry>& entries() const { return entries_; }

    std::uint32_t exponent(std::uint32_t index) const {
        auto it = std::lower_bound(entries_.begin(), entries_.end(), index,
                                   [](const Entry& e, std::uint32_t i) { return e.first < i; });
        if (it != entries_.end() && it->first == index) return it->second;
        return 0;
    }

    /// |m|, the sum of the exponents.
    std::uint32_t degree() const {
        std::uint32_t d = 0;
        for (const auto& [i, e] : entries_) d += e;
        return d;
    }

    /// l(m), the largest index with a nonzero exponent; 0 for the empty
    /// multi-index (sup of the empty set).
    std::uint32_t length() const { return entries_.empty() ? 0 : entries_.back().first; }

    /// Copy with the exponent of one coordinate raised by one, i.e. the
    /// exponent of z^m * z_index.
    MultiIndex times_coordinate(std::uint32_t index) const {
        std::vector<Entry> e = entries_;
        auto it = std::lower_bound(e.begin(), e.end(), index,
                                   [](const Entry& en, std::uint32_t i) { return en.first < i; });
        if (it != e.end() && it->first == index) {
            ++it->second;
        } else {
            e.insert(it, {index, 1});
        }
        MultiIndex out;
        out.entries_ = std::move(e);
        return out;
    }

    bool operator==(const MultiIndex& other) const { return entries_ == other.entries_; }

  private:
    std::vector<Entry> entries_;
};

/// (degree, length) of a multi-index.
inline std::pair<std::uint32_t, std::uint32_t> degree_and_length(const MultiIndex& m) {
    return {m.degree(), m.length()};
}

/// The square ordering: m < mbar iff l(m) < l(mbar), or the lengths agree and
/// at the highest index where the exponents differ m has the smaller one.
/// Total on all multi-indices, with equality only for identical ones; callers
/// normally compare within one degree.
inline std::strong_ordering square_cmp(const MultiIndex& a, const MultiIndex& b) {
    if (auto c = a.length() <=> b.length(); c != 0) return c;
    const auto& ea = a.entries();
    const auto& eb = b.entries();
    auto ia = ea.rbegin();
    auto ib = eb.rbegin();
    while (ia != ea.rend() || ib != eb.rend()) {
        std::uint32_t index_a = ia != ea.rend() ? ia->first : 0;
        std::uint32_t index_b = ib != eb.rend() ? ib->first : 0;
        std::uint32_t top = std::max(index_a, index_b);
        std::uint32_t expo_a = index_a == top ? ia->second : 0;
        std::uint32_t expo_b = index_b == top ? ib->second : 0;
        if (auto c = expo_a <=> expo_b; c != 0) return c;
        if (index_a == top) ++ia;
        if (index_b == top) ++ib;
    }
    return std::strong_ordering::equal;
}

inline bool square_less(const MultiIndex& a, const MultiIndex& b) {
    return square_cmp(a, b) == std::strong_ordering::less;
}

}  // namespace mbasis
