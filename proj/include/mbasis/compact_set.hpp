#pragma once

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <vector>

#include "mbasis/spaces.hpp"

namespace mbasis {

/// Slack allowed when testing constraints against their bound, so that points
/// sitting exactly on the boundary stay members under floating arithmetic.
/// The sets are closed, so boundary points belong to them.
inline constexpr double kMembershipTol = 1e-12;

/// Description of one compact set A_lambda in either space. The bound
/// sequence lambda is stored as a finite prefix; entries beyond it are zero,
/// which forces every coordinate past the prefix to vanish. Concretely:
///
///  - Block variant over c_0(sum l_p^i): a point belongs to A_lambda iff the
///    l_p norm of its coordinates in block I(m) is at most lambda_m for every
///    m up to the prefix length, and blocks past the prefix are empty.
///  - Lorentz variant over the predual of d(w,1): a point belongs to
///    A_lambda iff its support lies within the first L coordinates
///    (L = prefix length) and the rearranged partial-sum ratios
///    (sum of the m largest moduli) / W_m are at most lambda_m for m = 1..L.
///
/// Both sets are solid (closed under coordinatewise modulus decrease) and
/// balanced, since the constraints depend only on the moduli monotonically.
class CompactSetSpec {
  public:
    enum class Variant { kBlock, kLorentz };

    static CompactSetSpec block(std::vector<double> lambda, PExponent p) {
        return CompactSetSpec(Variant::kBlock, std::move(lambda), p, std::nullopt);
    }

    static CompactSetSpec lorentz(std::vector<double> lambda, LorentzWeights w) {
        if (w.size() < lambda.size()) {
            throw std::invalid_argument("CompactSetSpec: weight prefix shorter than lambda prefix");
        }
        return CompactSetSpec(Variant::kLorentz, std::move(lambda), std::nullopt, std::move(w));
    }

    Variant variant() const { return variant_; }
    bool is_block() const { return variant_ == Variant::kBlock; }
    bool is_lorentz() const { return variant_ == Variant::kLorentz; }

    const std::vector<double>& lambda() const { return lambda_; }

    const PExponent& p() const {
        if (!p_) throw std::logic_error("CompactSetSpec: p on a Lorentz spec");
        return *p_;
    }

    const LorentzWeights& weights() const {
        if (!weights_) throw std::logic_error("CompactSetSpec: weights on a block spec");
        return *weights_;
    }

    /// Largest coordinate index a member may use: s(L) for the block variant
    /// (the end of the last constrained block), L for the Lorentz variant.
    std::uint32_t dimension() const {
        if (is_block()) {
            return static_cast<std::uint32_t>(block_layout::cumulative(lambda_.size()));
        }
        return static_cast<std::uint32_t>(lambda_.size());
    }

    /// The norm of the space the set lives in.
    double ambient_norm(const Point& z) const {
        return is_block() ? block_space_norm(z, *p_) : lorentz_predual_norm(z, *weights_);
    }

    /// Upper bound for any single coordinate modulus of a member.
    double coordinate_cap() const;

    bool operator==(const CompactSetSpec& other) const {
        return variant_ == other.variant_ && lambda_ == other.lambda_ && p_ == other.p_ &&
               weights_ == other.weights_;
    }

  private:
    CompactSetSpec(Variant variant, std::vector<double> lambda, std::optional<PExponent> p,
                   std::optional<LorentzWeights> w)
        : variant_(variant), lambda_(std::move(lambda)), p_(p), weights_(std::move(w)) {
        for (double l : lambda_) {
            if (!std::isfinite(l) || l < 0.0) {
                throw std::invalid_argument("CompactSetSpec: lambda entries must be finite and >= 0");
            }
        }
    }

    Variant variant_;
    std::vector<double> lambda_;
    std::optional<PExponent> p_;
    std::optional<LorentzWeights> weights_;
};

/// Membership test for A_lambda; every constraint is checked with the
/// kMembershipTol slack described above.
bool in_compact_set(const Point& z, const CompactSetSpec& spec);

/// Largest violation over all constraints, <= 0 for members (before slack).
/// Useful for reporting how tight a point sits against the boundary.
double membership_excess(const Point& z, const CompactSetSpec& spec);

}  // namespace mbasis
