#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "mbasis/serialization.hpp"

namespace mbasis {

inline constexpr const char* kVersion = "0.1.0";

/// Config validation failure carrying the JSON path of the offending field.
class ConfigError : public std::runtime_error {
  public:
    ConfigError(std::string path, const std::string& message)
        : std::runtime_error(path + ": " + message), path_(std::move(path)) {}

    const std::string& path() const { return path_; }

  private:
    std::string path_;
};

/// One experiment request. Everything an invocation depends on lives here,
/// including the seed; there are no wall-clock defaults anywhere.
struct ExperimentConfig {
    std::string kind;  // converge | basis-constant | p0 | net | invariants | enumerate | norm
    std::optional<CompactSetSpec> space;
    std::uint64_t seed = 0;

    std::vector<double> phi;        // converge: nonnegative real functional coefficients
    std::uint32_t max_degree = 0;   // converge: Taylor truncation degree (key "N")
    std::uint64_t stride = 1;       // converge: row stride over the monomial count

    std::uint32_t n_min = 1, n_max = 1;  // basis-constant / p0 degree range (key "n")
    std::uint32_t k = 0;                 // basis-constant / p0 length truncation
    std::uint64_t trials = 16;
    std::uint64_t budget = 2000;

    std::vector<double> eps_values;  // net (key "eps", scalar or list)
    std::uint64_t samples = 10000;   // net coverage draws per eps

    bool perturb = false;  // invariants: self-test switch that breaks solidity

    std::uint32_t degree = 0;      // enumerate
    std::uint32_t max_length = 0;  // enumerate

    std::string out;                // output path, empty = stdout
    std::string format = "csv";    // csv | json
    std::string report;             // basis-constant: optional JSON report path

    bool operator==(const ExperimentConfig& other) const;
};

/// Parses and validates a config object; throws ConfigError with the field
/// path on the first violation. Unknown keys are rejected.
ExperimentConfig parse_experiment_config(const Json& j);

/// Canonical echo; parse_experiment_config(config_to_json(c)) == c.
Json config_to_json(const ExperimentConfig& config);

using Cell = std::variant<std::int64_t, double, std::string>;

/// Rectangular result set plus the metadata (config echo, library version)
/// that makes the file self-describing. Rendering is fully deterministic:
/// doubles print with 17 significant digits in both formats.
struct ResultTable {
    std::vector<std::string> columns;
    std::vector<std::vector<Cell>> rows;
    Json config_echo;

    std::string to_csv() const;
    std::string to_json_text() const;
    std::string render(const std::string& format) const;
};

ResultTable cmd_converge(const ExperimentConfig& config);
ResultTable cmd_basis_constant(const ExperimentConfig& config,
                               std::vector<BasisConstantReport>* reports = nullptr);
ResultTable cmd_p0(const ExperimentConfig& config);
ResultTable cmd_net(const ExperimentConfig& config);
ResultTable cmd_invariants(const ExperimentConfig& config, bool* any_failure = nullptr);

/// Square-ordered multi-indices of one degree, one sparse JSON object per
/// line.
std::vector<std::string> cmd_enumerate(std::uint32_t degree, std::uint32_t max_length);

/// The ambient norm of a point in the requested space; `dual` asks the
/// Lorentz variant for the d(w,1) norm instead of the predual norm.
double cmd_norm(const CompactSetSpec& spec, const Point& z, bool dual = false);

/// Runs the command a config describes and renders its output. Invariant
/// failures are reported through any_failure.
std::string run_experiment(const ExperimentConfig& config, bool* any_failure = nullptr);

}  // namespace mbasis
