#pragma once

#include <cstdint>
#include <span>
#include <stdexcept>
#include <vector>

#include "mbasis/enumeration.hpp"
#include "mbasis/multiindex.hpp"
#include "mbasis/point.hpp"

namespace mbasis {

/// z^e by repeated squaring; z^0 = 1.
inline Complex integer_power(Complex z, std::uint32_t e) {
    Complex result(1.0, 0.0);
    while (e != 0) {
        if (e & 1U) result *= z;
        z *= z;
        e >>= 1U;
    }
    return result;
}

/// z^m, the product of the supported coordinate powers; the empty product
/// is 1.
inline Complex eval_monomial(const MultiIndex& m, const Point& z) {
    Complex product(1.0, 0.0);
    for (const auto& [index, exponent] : m.entries()) {
        product *= integer_power(z.at(index), exponent);
    }
    return product;
}

/// A degree-n homogeneous polynomial as a finite monomial-coefficient map.
/// Terms are kept in square order and zero coefficients are dropped, so
/// evaluation visits monomials in a reproducible order shared by any two
/// polynomials whose term lists agree on a prefix.
class HomogeneousPolynomial {
  public:
    using Term = std::pair<MultiIndex, Complex>;

    explicit HomogeneousPolynomial(std::uint32_t degree) : degree_(degree) {}

    HomogeneousPolynomial(std::uint32_t degree, std::vector<Term> terms)
        : degree_(degree), terms_(std::move(terms)) {
        for (const auto& [m, c] : terms_) {
            if (m.degree() != degree_) {
                throw std::invalid_argument("HomogeneousPolynomial: term of wrong degree");
            }
            if (!std::isfinite(c.real()) || !std::isfinite(c.imag())) {
                throw std::invalid_argument("HomogeneousPolynomial: coefficient must be finite");
            }
        }
        std::sort(terms_.begin(), terms_.end(),
                  [](const Term& a, const Term& b) { return square_less(a.first, b.first); });
        for (std::size_t i = 1; i < terms_.size(); ++i) {
            if (terms_[i].first == terms_[i - 1].first) {
                throw std::invalid_argument("HomogeneousPolynomial: duplicate monomial");
            }
        }
        std::erase_if(terms_, [](const Term& t) { return t.second == Complex(0.0, 0.0); });
    }

    std::uint32_t degree() const { return degree_; }
    const std::vector<Term>& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    std::size_t term_count() const { return terms_.size(); }

    Complex coefficient(const MultiIndex& m) const {
        for (const auto& [mi, c] : terms_) {
            if (mi == m) return c;
        }
        return {0.0, 0.0};
    }

    /// Largest monomial length appearing; 0 for the zero polynomial.
    std::uint32_t max_length() const {
        return terms_.empty() ? 0 : terms_.back().first.length();
    }

    HomogeneousPolynomial scaled(Complex factor) const {
        std::vector<Term> t = terms_;
        for (auto& [m, c] : t) c *= factor;
        return {degree_, std::move(t)};
    }

    /// The product with the coordinate functional z_index, one degree up.
    HomogeneousPolynomial times_coordinate(std::uint32_t index) const {
        std::vector<Term> t;
        t.reserve(terms_.size());
        for (const auto& [m, c] : terms_) t.emplace_back(m.times_coordinate(index), c);
        return {degree_ + 1, std::move(t)};
    }

    friend HomogeneousPolynomial operator+(const HomogeneousPolynomial& a,
                                           const HomogeneousPolynomial& b) {
        if (a.degree_ != b.degree_) {
            throw std::invalid_argument("HomogeneousPolynomial: degree mismatch in sum");
        }
        std::vector<Term> t = a.terms_;
        for (const auto& [m, c] : b.terms_) {
            bool found = false;
            for (auto& [ma, ca] : t) {
                if (ma == m) {
                    ca += c;
                    found = true;
                    break;
                }
            }
            if (!found) t.emplace_back(m, c);
        }
        return {a.degree_, std::move(t)};
    }

    bool operator==(const HomogeneousPolynomial& other) const {
        return degree_ == other.degree_ && terms_ == other.terms_;
    }

  private:
    std::uint32_t degree_;
    std::vector<Term> terms_;
};

/// Sum of the terms in square order. Deterministic for fixed inputs.
inline Complex eval(const HomogeneousPolynomial& poly, const Point& z) {
    Complex sum(0.0, 0.0);
    for (const auto& [m, c] : poly.terms()) sum += c * eval_monomial(m, z);
    return sum;
}

/// Taylor parts P_0, ..., P_N of an entire function, slot d holding the
/// degree-d part.
class TaylorTruncation {
  public:
    TaylorTruncation() = default;

    explicit TaylorTruncation(std::vector<HomogeneousPolynomial> parts) : parts_(std::move(parts)) {
        for (std::size_t d = 0; d < parts_.size(); ++d) {
            if (parts_[d].degree() != d) {
                throw std::invalid_argument("TaylorTruncation: part in the wrong slot");
            }
        }
    }

    /// Zero truncation with slots 0..max_degree.
    static TaylorTruncation zeros(std::uint32_t max_degree) {
        std::vector<HomogeneousPolynomial> parts;
        parts.reserve(max_degree + 1);
        for (std::uint32_t d = 0; d <= max_degree; ++d) parts.emplace_back(d);
        return TaylorTruncation(std::move(parts));
    }

    const std::vector<HomogeneousPolynomial>& parts() const { return parts_; }
    std::uint32_t max_degree() const {
        return parts_.empty() ? 0 : static_cast<std::uint32_t>(parts_.size() - 1);
    }
    const HomogeneousPolynomial& part(std::uint32_t degree) const { return parts_.at(degree); }

    std::size_t total_term_count() const {
        std::size_t n = 0;
        for (const auto& p : parts_) n += p.term_count();
        return n;
    }

    bool operator==(const TaylorTruncation& other) const { return parts_ == other.parts_; }

  private:
    std::vector<HomogeneousPolynomial> parts_;
};

inline Complex eval(const TaylorTruncation& f, const Point& z) {
    Complex sum(0.0, 0.0);
    for (const auto& part : f.parts()) sum += eval(part, z);
    return sum;
}

/// Taylor truncation of exp(phi_1 z_1 + ... + phi_d z_d) up to degree
/// max_degree: the coefficient of z^m is prod_i phi_i^{m_i} / m_i!.
TaylorTruncation exp_functional_taylor(std::span<const Complex> phi, std::uint32_t max_degree);

/// The first n_monomials terms of f under the global compatible order
/// (diagonal over degrees, square order within a degree); everything else is
/// dropped. n_monomials >= the term count returns f unchanged.
TaylorTruncation partial_sum(const TaylorTruncation& f, std::uint64_t n_monomials);

/// Head and tail of f around the same cut: head = partial_sum(f, n),
/// tail = f - head, returned as truncations with the same slot count.
std::pair<TaylorTruncation, TaylorTruncation> split_at(const TaylorTruncation& f,
                                                       std::uint64_t n_monomials);

}  // namespace mbasis
