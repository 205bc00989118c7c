#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <unordered_set>
#include <vector>

#include "mbasis/compact_set.hpp"
#include "mbasis/polynomial.hpp"
#include "mbasis/sampling.hpp"

namespace mbasis {

enum class SupMode { kExactClosedForm, kSampledLowerBound };

/// A sup-norm value over one A_lambda, together with a member attaining it.
struct SupEstimate {
    double value = 0.0;
    SupMode mode = SupMode::kSampledLowerBound;
    Point witness;
    std::uint64_t budget = 0;
};

/// Exact sup of |z^m| over a block-variant A_lambda. The constraints
/// decouple per block, so the sup is the product over blocks of the
/// single-block maxima; a block with degree M under an l_p cap of radius r
/// contributes r^M * prod_i (m_i / M)^{m_i / p}, attained at
/// |z_i| = r (m_i / M)^{1/p}. A touched block with cap 0 makes the sup 0.
SupEstimate monomial_sup_block(const MultiIndex& m, const CompactSetSpec& spec);

struct AscentOptions {
    int restarts = 8;
    int max_passes = 64;
    double tolerance = 1e-12;
    std::uint64_t seed = 1;
};

/// Lower-bound sup of |z^m| over a Lorentz-variant A_lambda by projected
/// coordinate ascent on the moduli (phases never matter), restarted from
/// several feasible points. Exact only up to the optimizer tolerance.
SupEstimate monomial_sup_lorentz(const MultiIndex& m, const CompactSetSpec& spec,
                                 const AscentOptions& options = {});

/// Dispatch on the spec variant.
SupEstimate monomial_sup(const MultiIndex& m, const CompactSetSpec& spec);

/// A finite sample of A_lambda closed under coordinate truncation: for every
/// point z and every cut c in `cuts`, the point with all coordinates above c
/// zeroed is also present (a member by solidity). Sup estimates taken as
/// maxima over such a cloud compare fairly across polynomials that only see
/// a prefix of the coordinates.
class Cloud {
  public:
    static Cloud generate(const CompactSetSpec& spec, std::uint64_t budget, std::uint64_t seed,
                          std::span<const std::uint32_t> cuts, const SampleOptions& options = {});

    const CompactSetSpec& spec() const { return spec_; }
    const std::vector<Point>& points() const { return points_; }
    std::uint64_t budget() const { return budget_; }

    bool contains(const Point& p) const { return keys_.contains(point_key(p)); }

    /// True if every truncation of every point at every cut is present.
    bool truncation_closed(std::span<const std::uint32_t> cuts) const;

    /// Canonical bit-exact key of a point, usable as a set/map key.
    static std::string point_key(const Point& p);

  private:
    Cloud(CompactSetSpec spec, std::uint64_t budget, std::vector<Point> points,
          std::unordered_set<std::string> keys)
        : spec_(std::move(spec)), budget_(budget), points_(std::move(points)), keys_(std::move(keys)) {}

    CompactSetSpec spec_;
    std::uint64_t budget_ = 0;
    std::vector<Point> points_;
    std::unordered_set<std::string> keys_;
};

/// max |P| over the cloud, witness included. A lower bound for the true sup.
SupEstimate poly_sup_estimate(const HomogeneousPolynomial& poly, const Cloud& cloud);

/// Convenience overload that draws the cloud first: budget samples with the
/// given seed, closed under truncation at each cut length.
SupEstimate poly_sup_estimate(const HomogeneousPolynomial& poly, const CompactSetSpec& spec,
                              std::uint64_t budget, std::span<const std::uint32_t> cuts,
                              std::uint64_t seed);

}  // namespace mbasis
