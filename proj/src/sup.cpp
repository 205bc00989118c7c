#include "mbasis/sup.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <map>

#include "mbasis/rng.hpp"

namespace mbasis {

SupEstimate monomial_sup_block(const MultiIndex& m, const CompactSetSpec& spec) {
    if (!spec.is_block()) throw std::invalid_argument("monomial_sup_block: block spec required");
    const double pe = spec.p().value();
    const auto& lambda = spec.lambda();

    // Group the exponents by block.
    std::map<std::uint32_t, std::vector<MultiIndex::Entry>> by_block;
    for (const auto& entry : m.entries()) {
        by_block[block_layout::block_of_index(entry.first)].push_back(entry);
    }

    double value = 1.0;
    std::vector<Point::Entry> witness;
    for (const auto& [block, entries] : by_block) {
        double cap = block <= lambda.size() ? lambda[block - 1] : 0.0;
        std::uint32_t block_degree = 0;
        for (const auto& [index, exponent] : entries) block_degree += exponent;
        if (cap == 0.0) {
            return {0.0, SupMode::kExactClosedForm, Point{}, 0};
        }
        double factor = std::pow(cap, static_cast<double>(block_degree));
        for (const auto& [index, exponent] : entries) {
            double share = static_cast<double>(exponent) / block_degree;
            factor *= std::pow(share, exponent / pe);
            witness.emplace_back(index, Complex(cap * std::pow(share, 1.0 / pe), 0.0));
        }
        value *= factor;
    }
    return {value, SupMode::kExactClosedForm, Point(std::move(witness)), 0};
}

namespace {

/// Objective log |z^m| for nonnegative moduli x on the support of m.
double log_objective(const MultiIndex& m, const std::vector<double>& x) {
    double sum = 0.0;
    for (std::size_t j = 0; j < x.size(); ++j) {
        if (x[j] <= 0.0) return -std::numeric_limits<double>::infinity();
        sum += m.entries()[j].second * std::log(x[j]);
    }
    return sum;
}

Point point_from_moduli(const MultiIndex& m, const std::vector<double>& x) {
    std::vector<Point::Entry> entries;
    for (std::size_t j = 0; j < x.size(); ++j) {
        if (x[j] != 0.0) entries.emplace_back(m.entries()[j].first, Complex(x[j], 0.0));
    }
    return Point(std::move(entries));
}

}  // namespace

namespace {

/// Feasibility of a nonnegative moduli vector (implicitly zero elsewhere)
/// against the rearranged partial-sum constraints, without building a Point.
class LorentzFeasibility {
  public:
    explicit LorentzFeasibility(const CompactSetSpec& spec) {
        // No tolerance slack here: converged witnesses then sit on the true
        // boundary, strictly inside what in_compact_set accepts.
        for (std::size_t k = 1; k <= spec.lambda().size(); ++k) {
            bounds_.push_back(spec.lambda()[k - 1] * spec.weights().partial_sum(k));
        }
    }

    bool operator()(const std::vector<double>& x) const {
        scratch_ = x;
        std::sort(scratch_.begin(), scratch_.end(), std::greater<double>());
        double prefix = 0.0;
        for (std::size_t k = 0; k < bounds_.size(); ++k) {
            if (k < scratch_.size()) prefix += scratch_[k];
            if (prefix > bounds_[k]) return false;
        }
        return true;
    }

  private:
    std::vector<double> bounds_;
    mutable std::vector<double> scratch_;
};

}  // namespace

SupEstimate monomial_sup_lorentz(const MultiIndex& m, const CompactSetSpec& spec,
                                 const AscentOptions& options) {
    if (!spec.is_lorentz()) throw std::invalid_argument("monomial_sup_lorentz: Lorentz spec required");
    if (m.entries().empty()) {
        return {1.0, SupMode::kSampledLowerBound, Point{}, 0};
    }
    const double cap = spec.coordinate_cap();
    if (cap == 0.0 || m.length() > spec.dimension()) {
        // A_lambda is {0}, or the monomial uses a coordinate no member has.
        return {0.0, SupMode::kSampledLowerBound, Point{}, 0};
    }

    const std::size_t support = m.entries().size();
    LorentzFeasibility feasible(spec);

    // Largest feasible value of coordinate j with the others held fixed; the
    // constraints are monotone in each modulus, so bisection suffices.
    auto maximize_coordinate = [&](std::vector<double>& x, std::size_t j) {
        double lo = x[j], hi = cap * (1.0 + 1e-9);
        x[j] = hi;
        if (feasible(x)) return;
        for (int i = 0; i < 50; ++i) {
            double mid = 0.5 * (lo + hi);
            x[j] = mid;
            (feasible(x) ? lo : hi) = mid;
        }
        x[j] = lo;
    };

    std::vector<double> best_x;
    double best_log = -std::numeric_limits<double>::infinity();
    for (int restart = 0; restart < options.restarts; ++restart) {
        std::vector<double> x(support, 0.0);
        if (restart == 0) {
            // Equal moduli scaled onto the boundary.
            double lo = 0.0, hi = cap;
            for (int i = 0; i < 50; ++i) {
                double mid = 0.5 * (lo + hi);
                std::fill(x.begin(), x.end(), mid);
                (feasible(x) ? lo : hi) = mid;
            }
            std::fill(x.begin(), x.end(), lo);
        } else {
            Point start = sample_point(spec, mix_seed(options.seed, restart),
                                       SampleOptions{.boundary_fraction = 0.5, .nonneg = true});
            for (std::size_t j = 0; j < support; ++j) {
                x[j] = std::abs(start.at(m.entries()[j].first));
                if (x[j] == 0.0) x[j] = cap * 1e-6;
            }
            if (!feasible(x)) {
                for (auto& v : x) v *= 0.25;
                if (!feasible(x)) std::fill(x.begin(), x.end(), 0.0);
            }
        }

        double current = log_objective(m, x);
        for (int pass = 0; pass < options.max_passes; ++pass) {
            for (std::size_t j = 0; j < support; ++j) maximize_coordinate(x, j);

            // Single-coordinate moves stall on the faces where a shared
            // budget is exhausted; redistributing mass between a pair of
            // coordinates walks along such a face. Ternary search over the
            // amount taken from i, with j re-maximized at each probe.
            for (std::size_t i = 0; i < support; ++i) {
                for (std::size_t j = 0; j < support; ++j) {
                    if (i == j || x[i] == 0.0) continue;
                    auto transferred = [&](double delta) {
                        std::vector<double> probe = x;
                        probe[i] = x[i] - delta;
                        maximize_coordinate(probe, j);
                        return std::pair(log_objective(m, probe), std::move(probe));
                    };
                    double lo = 0.0, hi = x[i];
                    for (int it = 0; it < 40; ++it) {
                        double d1 = lo + (hi - lo) / 3.0;
                        double d2 = hi - (hi - lo) / 3.0;
                        if (transferred(d1).first < transferred(d2).first) {
                            lo = d1;
                        } else {
                            hi = d2;
                        }
                    }
                    auto [value, probe] = transferred(0.5 * (lo + hi));
                    if (value > log_objective(m, x)) x = std::move(probe);
                }
            }

            double updated = log_objective(m, x);
            if (updated <= current + options.tolerance) {
                current = updated;
                break;
            }
            current = updated;
        }
        if (current > best_log) {
            best_log = current;
            best_x = x;
        }
    }

    Point witness = point_from_moduli(m, best_x);
    double value = std::abs(eval_monomial(m, witness));
    return {value, SupMode::kSampledLowerBound, std::move(witness),
            static_cast<std::uint64_t>(options.restarts)};
}

SupEstimate monomial_sup(const MultiIndex& m, const CompactSetSpec& spec) {
    return spec.is_block() ? monomial_sup_block(m, spec) : monomial_sup_lorentz(m, spec);
}

std::string Cloud::point_key(const Point& p) {
    std::string key;
    key.reserve(p.entries().size() * 20);
    for (const auto& [index, value] : p.entries()) {
        std::uint64_t re = std::bit_cast<std::uint64_t>(value.real());
        std::uint64_t im = std::bit_cast<std::uint64_t>(value.imag());
        key.append(reinterpret_cast<const char*>(&index), sizeof index);
        key.append(reinterpret_cast<const char*>(&re), sizeof re);
        key.append(reinterpret_cast<const char*>(&im), sizeof im);
    }
    return key;
}

Cloud Cloud::generate(const CompactSetSpec& spec, std::uint64_t budget, std::uint64_t seed,
                      std::span<const std::uint32_t> cuts, const SampleOptions& options) {
    std::vector<Point> points;
    std::unordered_set<std::string> keys;
    auto add = [&](Point p) {
        auto key = point_key(p);
        if (keys.insert(std::move(key)).second) points.push_back(std::move(p));
    };
    for (Point& z : sample_points(spec, budget, seed, options)) {
        for (std::uint32_t cut : cuts) add(z.truncated(cut));
        add(std::move(z));
    }
    if (budget > 0) add(Point{});  // the zero point closes every truncation chain
    return Cloud(spec, budget, std::move(points), std::move(keys));
}

bool Cloud::truncation_closed(std::span<const std::uint32_t> cuts) const {
    for (const auto& p : points_) {
        for (std::uint32_t cut : cuts) {
            if (!contains(p.truncated(cut))) return false;
        }
    }
    return true;
}

SupEstimate poly_sup_estimate(const HomogeneousPolynomial& poly, const Cloud& cloud) {
    double best = 0.0;
    const Point* witness = nullptr;
    for (const auto& z : cloud.points()) {
        double value = std::abs(eval(poly, z));
        if (value > best || witness == nullptr) {
            best = value;
            witness = &z;
        }
    }
    return {best, SupMode::kSampledLowerBound, witness ? *witness : Point{},
            static_cast<std::uint64_t>(cloud.points().size())};
}

SupEstimate poly_sup_estimate(const HomogeneousPolynomial& poly, const CompactSetSpec& spec,
                              std::uint64_t budget, std::span<const std::uint32_t> cuts,
                              std::uint64_t seed) {
    return poly_sup_estimate(poly, Cloud::generate(spec, budget, seed, cuts));
}

}  // namespace mbasis
