#pragma once

#include <algorithm>
#include <cmath>
#include <complex>
#include <cstdint>
#include <span>
#include <stdexcept>
#include <utility>
#include <vector>

namespace mbasis {

using Complex = std::complex<double>;

/// A finitely supported complex sequence, indexed from 1. Missing indices are
/// zero. Entries are kept sorted by index with exact zeros removed, so two
/// Points compare equal iff they are the same sequence.
class Point {
  public:
    using Entry = std::pair<std::uint32_t, Complex>;

    Point() = default;

    explicit Point(std::vector<Entry> entries) : entries_(std::move(entries)) {
        normalize();
    }

    /// The basis vector e_index.
    static Point unit(std::uint32_t index) { return Point({{index, Complex(1.0, 0.0)}}); }

    /// Entries from a dense list, first value at index 1.
    static Point from_dense(std::span<const Complex> values) {
        std::vector<Entry> e;
        e.reserve(values.size());
        for (std::size_t i = 0; i < values.size(); ++i) {
            e.emplace_back(static_cast<std::uint32_t>(i + 1), values[i]);
        }
        return Point(std::move(e));
    }

    const std::vector<Entry>& entries() const { return entries_; }

    /// Value at index (0 if absent).
    Complex at(std::uint32_t index) const {
        auto it = std::lower_bound(entries_.begin(), entries_.end(), index,
                                   [](const Entry& e, std::uint32_t i) { return e.first < i; });
        if (it != entries_.end() && it->first == index) return it->second;
        return {0.0, 0.0};
    }

    std::vector<std::uint32_t> support() const {
        std::vector<std::uint32_t> s;
        s.reserve(entries_.size());
        for (const auto& [i, v] : entries_) s.push_back(i);
        return s;
    }

    std::size_t nnz() const { return entries_.size(); }
    bool is_zero() const { return entries_.empty(); }

    /// Largest index in the support, 0 for the zero point.
    std::uint32_t max_index() const { return entries_.empty() ? 0 : entries_.back().first; }

    /// Copy with every coordinate of index > cutoff set to zero.
    Point truncated(std::uint32_t cutoff) const {
        std::vector<Entry> e;
        for (const auto& entry : entries_) {
            if (entry.first <= cutoff) e.push_back(entry);
        }
        Point out;
        out.entries_ = std::move(e);  // already normalized
        return out;
    }

    Point scaled(Complex c) const {
        std::vector<Entry> e = entries_;
        for (auto& [i, v] : e) v *= c;
        return Point(std::move(e));
    }

    friend Point operator+(const Point& a, const Point& b) { return merge(a, b, +1.0); }
    friend Point operator-(const Point& a, const Point& b) { return merge(a, b, -1.0); }

    bool operator==(const Point& other) const { return entries_ == other.entries_; }

  private:
    static Point merge(const Point& a, const Point& b, double sign) {
        std::vector<Entry> e;
        e.reserve(a.entries_.size() + b.entries_.size());
        std::size_t ia = 0, ib = 0;
        while (ia < a.entries_.size() || ib < b.entries_.size()) {
            if (ib == b.entries_.size() ||
                (ia < a.entries_.size() && a.entries_[ia].first < b.entries_[ib].first)) {
                e.push_back(a.entries_[ia++]);
            } else if (ia == a.entries_.size() || b.entries_[ib].first < a.entries_[ia].first) {
                e.emplace_back(b.entries_[ib].first, sign * b.entries_[ib].second);
                ++ib;
            } else {
                e.emplace_back(a.entries_[ia].first, a.entries_[ia].second + sign * b.entries_[ib].second);
                ++ia;
                ++ib;
            }
        }
        return Point(std::move(e));
    }

    void normalize() {
        for (const auto& [i, v] : entries_) {
            if (i == 0) throw std::invalid_argument("Point: indices are 1-based");
            if (!std::isfinite(v.real()) || !std::isfinite(v.imag())) {
                throw std::invalid_argument("Point: values must be finite");
            }
        }
        std::sort(entries_.begin(), entries_.end(),
                  [](const Entry& a, const Entry& b) { return a.first < b.first; });
        for (std::size_t i = 1; i < entries_.size(); ++i) {
            if (entries_[i].first == entries_[i - 1].first) {
                throw std::invalid_argument("Point: duplicate index");
            }
        }
        std::erase_if(entries_, [](const Entry& e) { return e.second == Complex(0.0, 0.0); });
    }

    std::vector<Entry> entries_;
};

}  // namespace mbasis
