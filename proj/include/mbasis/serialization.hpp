#pragma once

#include <string>

#include <json.hpp>

#include "mbasis/basis_constant.hpp"
#include "mbasis/compact_set.hpp"
#include "mbasis/multiindex.hpp"
#include "mbasis/point.hpp"
#include "mbasis/polynomial.hpp"

namespace mbasis {

using Json = nlohmann::json;

/// Full round-trip decimal rendering of a double (17 significant digits).
std::string format_double(double value);

// Points are sparse objects {"index": [re, im], ...} with 1-based keys;
// multi-indices are sparse objects {"index": exponent, ...}. The to_*_text
// writers order keys numerically and render with format_double, so equal
// values always produce identical bytes.

Json point_to_json(const Point& p);
Point point_from_json(const Json& j);
std::string point_to_text(const Point& p);

Json multiindex_to_json(const MultiIndex& m);
MultiIndex multiindex_from_json(const Json& j);
std::string multiindex_to_text(const MultiIndex& m);

/// Ordered bases serialize as arrays, order preserved.
Json basis_to_json(const OrderedMonomialBasis& basis);

/// {"variant": "block"|"lorentz", "lambda": [...], "p": number} or
/// {"variant": "lorentz", "lambda": [...], "weights": [...]}.
Json spec_to_json(const CompactSetSpec& spec);
CompactSetSpec spec_from_json(const Json& j);

/// Array of {"m": sparse exponents, "c": [re, im]}.
Json polynomial_to_json(const HomogeneousPolynomial& poly);
HomogeneousPolynomial polynomial_from_json(const Json& j, std::uint32_t degree);

Json taylor_to_json(const TaylorTruncation& f);
TaylorTruncation taylor_from_json(const Json& j);

Json sup_estimate_to_json(const SupEstimate& estimate);
Json basis_report_to_json(const BasisConstantReport& report);

}  // namespace mbasis
