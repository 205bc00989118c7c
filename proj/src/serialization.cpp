#include "mbasis/serialization.hpp"

#include <charconv>
#include <cstdio>

namespace mbasis {

std::string format_double(double value) {
    char buffer[64];
    std::snprintf(buffer, sizeof buffer, "%.17g", value);
    return buffer;
}

namespace {

std::uint32_t parse_index_key(const std::string& key) {
    std::uint32_t index = 0;
    auto [ptr, ec] = std::from_chars(key.data(), key.data() + key.size(), index);
    if (ec != std::errc{} || ptr != key.data() + key.size() || index == 0) {
        throw std::invalid_argument("expected a positive integer key, got '" + key + "'");
    }
    return index;
}

Complex complex_from_json(const Json& j) {
    if (!j.is_array() || j.size() != 2 || !j[0].is_number() || !j[1].is_number()) {
        throw std::invalid_argument("expected [re, im]");
    }
    return {j[0].get<double>(), j[1].get<double>()};
}

}  // namespace

Json point_to_json(const Point& p) {
    Json j = Json::object();
    for (const auto& [index, value] : p.entries()) {
        j[std::to_string(index)] = Json::array({value.real(), value.imag()});
    }
    return j;
}

Point point_from_json(const Json& j) {
    if (!j.is_object()) throw std::invalid_argument("Point: expected an object");
    std::vector<Point::Entry> entries;
    for (const auto& [key, value] : j.items()) {
        entries.emplace_back(parse_index_key(key), complex_from_json(value));
    }
    return Point(std::move(entries));
}

std::string point_to_text(const Point& p) {
    std::string out = "{";
    bool first = true;
    for (const auto& [index, value] : p.entries()) {
        if (!first) out += ",";
        first = false;
        out += "\"" + std::to_string(index) + "\":[" + format_double(value.real()) + "," +
               format_double(value.imag()) + "]";
    }
    out += "}";
    return out;
}

Json multiindex_to_json(const MultiIndex& m) {
    Json j = Json::object();
    for (const auto& [index, exponent] : m.entries()) j[std::to_string(index)] = exponent;
    return j;
}

MultiIndex multiindex_from_json(const Json& j) {
    if (!j.is_object()) throw std::invalid_argument("MultiIndex: expected an object");
    std::vector<MultiIndex::Entry> entries;
    for (const auto& [key, value] : j.items()) {
        if (!value.is_number_unsigned()) {
            throw std::invalid_argument("MultiIndex: exponents must be nonnegative integers");
        }
        entries.emplace_back(parse_index_key(key), value.get<std::uint32_t>());
    }
    return MultiIndex(std::move(entries));
}

std::string multiindex_to_text(const MultiIndex& m) {
    std::string out = "{";
    bool first = true;
    for (const auto& [index, exponent] : m.entries()) {
        if (!first) out += ",";
        first = false;
        out += "\"" + std::to_string(index) + "\":" + std::to_string(exponent);
    }
    out += "}";
    return out;
}

Json basis_to_json(const OrderedMonomialBasis& basis) {
    Json j = Json::array();
    for (const auto& m : basis.list()) j.push_back(multiindex_to_json(m));
    return j;
}

Json spec_to_json(const CompactSetSpec& spec) {
    Json j;
    j["variant"] = spec.is_block() ? "block" : "lorentz";
    j["lambda"] = spec.lambda();
    if (spec.is_block()) {
        j["p"] = spec.p().value();
    } else {
        j["weights"] = spec.weights().prefix();
    }
    return j;
}

CompactSetSpec spec_from_json(const Json& j) {
    if (!j.is_object()) throw std::invalid_argument("CompactSetSpec: expected an object");
    if (!j.contains("variant") || !j["variant"].is_string()) {
        throw std::invalid_argument("CompactSetSpec: missing variant");
    }
    if (!j.contains("lambda") || !j["lambda"].is_array()) {
        throw std::invalid_argument("CompactSetSpec: missing lambda array");
    }
    auto lambda = j["lambda"].get<std::vector<double>>();
    std::string variant = j["variant"].get<std::string>();
    if (variant == "block") {
        if (!j.contains("p") || !j["p"].is_number()) {
            throw std::invalid_argument("CompactSetSpec: block variant needs p");
        }
        return CompactSetSpec::block(std::move(lambda), PExponent(j["p"].get<double>()));
    }
    if (variant == "lorentz") {
        if (!j.contains("weights") || !j["weights"].is_array()) {
            throw std::invalid_argument("CompactSetSpec: lorentz variant needs weights");
        }
        return CompactSetSpec::lorentz(std::move(lambda),
                                       LorentzWeights(j["weights"].get<std::vector<double>>()));
    }
    throw std::invalid_argument("CompactSetSpec: unknown variant '" + variant + "'");
}

Json polynomial_to_json(const HomogeneousPolynomial& poly) {
    Json terms = Json::array();
    for (const auto& [m, c] : poly.terms()) {
        Json term;
        term["m"] = multiindex_to_json(m);
        term["c"] = Json::array({c.real(), c.imag()});
        terms.push_back(std::move(term));
    }
    return terms;
}

HomogeneousPolynomial polynomial_from_json(const Json& j, std::uint32_t degree) {
    if (!j.is_array()) throw std::invalid_argument("HomogeneousPolynomial: expected an array");
    std::vector<HomogeneousPolynomial::Term> terms;
    for (const auto& term : j) {
        if (!term.contains("m") || !term.contains("c")) {
            throw std::invalid_argument("HomogeneousPolynomial: term needs m and c");
        }
        terms.emplace_back(multiindex_from_json(term["m"]), complex_from_json(term["c"]));
    }
    return {degree, std::move(terms)};
}

Json taylor_to_json(const TaylorTruncation& f) {
    Json parts = Json::array();
    for (const auto& part : f.parts()) parts.push_back(polynomial_to_json(part));
    return parts;
}

TaylorTruncation taylor_from_json(const Json& j) {
    if (!j.is_array()) throw std::invalid_argument("TaylorTruncation: expected an array");
    std::vector<HomogeneousPolynomial> parts;
    for (std::size_t d = 0; d < j.size(); ++d) {
        parts.push_back(polynomial_from_json(j[d], static_cast<std::uint32_t>(d)));
    }
    return TaylorTruncation(std::move(parts));
}

Json sup_estimate_to_json(const SupEstimate& estimate) {
    Json j;
    j["value"] = estimate.value;
    j["mode"] = estimate.mode == SupMode::kExactClosedForm ? "exact_closed_form" : "sampled_lower_bound";
    j["witness"] = point_to_json(estimate.witness);
    j["budget"] = estimate.budget;
    return j;
}

Json basis_report_to_json(const BasisConstantReport& report) {
    Json j;
    j["degree"] = report.degree;
    j["truncation"] = report.truncation;
    j["c_hat"] = report.c_hat;
    j["c_hat_root"] = report.c_hat_root;
    j["worst_cut"] = Json::array({report.worst_cut_s, report.worst_cut_t});
    Json coefficients = Json::array();
    for (const auto& c : report.worst_coefficients) {
        coefficients.push_back(Json::array({c.real(), c.imag()}));
    }
    j["worst_coefficients"] = std::move(coefficients);
    j["worst_witness_numerator"] = point_to_json(report.worst_witness_numerator);
    j["worst_witness_denominator"] = point_to_json(report.worst_witness_denominator);
    j["p0_estimate"] = report.p0_estimate;
    j["envelope_a"] = report.envelope_a;
    j["skipped_trials"] = report.skipped_trials;
    j["trials"] = report.trials;
    j["budget"] = report.budget;
    return j;
}

}  // namespace mbasis
