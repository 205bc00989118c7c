#pragma once

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <vector>

#include "mbasis/multiindex.hpp"

namespace mbasis {

/// Binomial coefficient in 64 bits; throws on overflow (never hit at the
/// degrees and lengths this project works with).
std::uint64_t binomial(std::uint64_t n, std::uint64_t k);

/// Number of multi-indices with degree n and length exactly u.
/// For n >= 1, u >= 1 this is C(n+u-2, u-1); the empty multi-index is the
/// single (0, 0) case.
std::uint64_t stratum_size(std::uint32_t degree, std::uint32_t length);

/// Number of multi-indices with degree n and length <= k_max, which is the
/// weak-composition count C(n+k_max-1, k_max-1).
std::uint64_t basis_size(std::uint32_t degree, std::uint32_t k_max);

/// Streams the multi-indices of a fixed degree with length <= k_max in
/// square order, one at a time.
class SquareOrderGenerator {
  public:
    SquareOrderGenerator(std::uint32_t degree, std::uint32_t k_max);

    /// Next multi-index, or nullopt when exhausted.
    std::optional<MultiIndex> next();

  private:
    bool start_stratum(std::uint32_t length);
    bool advance_within_stratum();
    MultiIndex current() const;

    std::uint32_t degree_;
    std::uint32_t k_max_;
    std::uint32_t length_ = 0;
    bool done_ = false;
    bool emitted_constant_ = false;
    // Exponents read from the top index down: reversed_[0] = m_length, so the
    // within-stratum square order is plain lexicographic order on this tuple.
    std::vector<std::uint32_t> reversed_;
};

/// The square-ordered monomial basis of the degree-n polynomials spanned by
/// monomials of length <= k_max.
class OrderedMonomialBasis {
  public:
    static OrderedMonomialBasis enumerate(std::uint32_t degree, std::uint32_t k_max);

    std::uint32_t degree() const { return degree_; }
    std::uint32_t max_length() const { return k_max_; }
    std::size_t size() const { return list_.size(); }
    const std::vector<MultiIndex>& list() const& { return list_; }
    // Calling list() on a temporary hands the storage over, so iterating the
    // result of enumerate(...).list() directly is safe.
    std::vector<MultiIndex> list() && { return std::move(list_); }

  private:
    OrderedMonomialBasis(std::uint32_t degree, std::uint32_t k_max, std::vector<MultiIndex> list)
        : degree_(degree), k_max_(k_max), list_(std::move(list)) {}

    std::uint32_t degree_;
    std::uint32_t k_max_;
    std::vector<MultiIndex> list_;
};

/// The induction step that builds the ordered degree-(n+1), length-k stratum:
/// concatenate the full ordered bases of the length-1..k strata of degree n
/// and multiply each monomial by the coordinate z_k, keeping the order.
/// `bases[i-1]` must be the complete square-ordered list of degree-n
/// multi-indices of length exactly i.
std::vector<MultiIndex> recursive_extend(const std::vector<std::vector<MultiIndex>>& bases,
                                         std::uint32_t k);

/// 0-based position of m in the square order of its degree. Independent of
/// any length bound, since everything below m is no longer than m.
std::uint64_t rank(const MultiIndex& m);

/// Inverse of rank within degree n, restricted to length <= k_max;
/// r >= basis_size(n, k_max) is a domain error.
MultiIndex unrank(std::uint32_t degree, std::uint64_t r, std::uint32_t k_max);

/// The global position of the r-th degree-n monomial under the diagonal
/// compatible ordering: pairs (n, r) are ranked by n + r, ties by n. Fixing n
/// makes the value strictly increasing in r, so per-degree order is kept.
std::uint64_t compatible_rank(std::uint32_t degree, std::uint64_t r);

/// Inverse of compatible_rank.
std::pair<std::uint32_t, std::uint64_t> compatible_rank_inverse(std::uint64_t position);

}  // namespace mbasis
