#pragma once

#include <cmath>
#include <cstdint>
#include <stdexcept>
#include <vector>

#include "mbasis/block_layout.hpp"
#include "mbasis/point.hpp"

namespace mbasis {

/// The exponent p of the block space, restricted to [1, inf).
class PExponent {
  public:
    explicit PExponent(double p) : value_(p) {
        if (!std::isfinite(p) || p < 1.0) {
            throw std::invalid_argument("PExponent: p must be finite and >= 1");
        }
    }

    double value() const { return value_; }
    bool operator==(const PExponent&) const = default;

  private:
    double value_;
};

/// A finite prefix w_1 >= w_2 >= ... > 0 of a Lorentz weight sequence, with
/// w_1 = 1 and cached partial sums W_k. Whether the full sequence lies in
/// c_0 \ l_1 cannot be decided from a prefix and is up to the caller; the
/// harmonic family 1/i (see `harmonic`) is the default choice that does.
class LorentzWeights {
  public:
    explicit LorentzWeights(std::vector<double> prefix) : prefix_(std::move(prefix)) {
        if (prefix_.empty()) throw std::invalid_argument("LorentzWeights: empty prefix");
        if (prefix_.front() != 1.0) throw std::invalid_argument("LorentzWeights: w_1 must be 1");
        double running = 0.0;
        partial_sums_.reserve(prefix_.size());
        for (std::size_t i = 0; i < prefix_.size(); ++i) {
            double w = prefix_[i];
            if (!(w > 0.0) || !std::isfinite(w)) {
                throw std::invalid_argument("LorentzWeights: weights must be positive and finite");
            }
            if (i > 0 && w > prefix_[i - 1]) {
                throw std::invalid_argument("LorentzWeights: weights must be non-increasing");
            }
            running += w;
            partial_sums_.push_back(running);
        }
    }

    /// w_i = 1/i, the simplest decreasing weight family outside l_1.
    static LorentzWeights harmonic(std::size_t length) {
        std::vector<double> w;
        w.reserve(length);
        for (std::size_t i = 1; i <= length; ++i) w.push_back(1.0 / static_cast<double>(i));
        return LorentzWeights(std::move(w));
    }

    const std::vector<double>& prefix() const { return prefix_; }
    std::size_t size() const { return prefix_.size(); }

    /// w_k, 1-based.
    double weight(std::size_t k) const {
        require_covers(k);
        return prefix_[k - 1];
    }

    /// W_k = w_1 + ... + w_k, 1-based.
    double partial_sum(std::size_t k) const {
        require_covers(k);
        return partial_sums_[k - 1];
    }

    bool operator==(const LorentzWeights& other) const { return prefix_ == other.prefix_; }

  private:
    void require_covers(std::size_t k) const {
        if (k == 0 || k > prefix_.size()) {
            throw std::invalid_argument("LorentzWeights: prefix too short");
        }
    }

    std::vector<double> prefix_;
    std::vector<double> partial_sums_;
};

/// sup over n of the l_p norm of the coordinates in block I(n). Only blocks
/// meeting the support contribute.
double block_space_norm(const Point& z, const PExponent& p);

/// Moduli of the nonzero coordinates sorted non-increasingly. Ties keep the
/// original index order (stable), which never affects downstream values.
std::vector<double> decreasing_rearrangement(const Point& z);

/// The d(w,1) norm: sum of [z]_i * w_i. Pairing the sorted moduli with the
/// weights in order is the optimal permutation, so no search is needed.
/// Requires the weight prefix to cover the support size of z.
double lorentz_norm(const Point& z, const LorentzWeights& w);

/// The predual norm of d(w,1): max over k of (sum of the k largest moduli)
/// divided by W_k. The maximum is attained at some k <= nnz(z) because the
/// numerator saturates while W_k keeps growing, so only those k are scanned.
double lorentz_predual_norm(const Point& z, const LorentzWeights& w);

}  // namespace mbasis
