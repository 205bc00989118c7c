#include "mbasis/experiment.hpp"

#include <algorithm>
#include <cmath>
#include <set>

#include "mbasis/invariants.hpp"
#include "mbasis/net.hpp"
#include "mbasis/rng.hpp"
#include "mbasis/seminorm.hpp"

namespace mbasis {

bool ExperimentConfig::operator==(const ExperimentConfig& other) const {
    return config_to_json(*this) == config_to_json(other);
}

namespace {

const std::set<std::string> kKinds = {"converge", "basis-constant", "p0",  "net",
                                      "invariants", "enumerate", "norm"};

void require_keys(const Json& j, const std::set<std::string>& allowed) {
    for (const auto& [key, value] : j.items()) {
        if (!allowed.contains(key)) throw ConfigError("/" + key, "unknown field");
    }
}

std::uint64_t get_u64(const Json& j, const std::string& key, std::optional<std::uint64_t> fallback) {
    if (!j.contains(key)) {
        if (fallback) return *fallback;
        throw ConfigError("/" + key, "required field is missing");
    }
    if (!j[key].is_number_unsigned()) throw ConfigError("/" + key, "expected a nonnegative integer");
    return j[key].get<std::uint64_t>();
}

std::uint32_t get_u32(const Json& j, const std::string& key, std::optional<std::uint32_t> fallback) {
    auto v = get_u64(j, key, fallback ? std::optional<std::uint64_t>(*fallback) : std::nullopt);
    if (v > std::numeric_limits<std::uint32_t>::max()) throw ConfigError("/" + key, "value too large");
    return static_cast<std::uint32_t>(v);
}

std::string get_string(const Json& j, const std::string& key, const std::string& fallback) {
    if (!j.contains(key)) return fallback;
    if (!j[key].is_string()) throw ConfigError("/" + key, "expected a string");
    return j[key].get<std::string>();
}

}  // namespace

ExperimentConfig parse_experiment_config(const Json& j) {
    if (!j.is_object()) throw ConfigError("", "config must be a JSON object");
    if (!j.contains("kind") || !j["kind"].is_string()) {
        throw ConfigError("/kind", "required field is missing or not a string");
    }
    ExperimentConfig config;
    config.kind = j["kind"].get<std::string>();
    if (!kKinds.contains(config.kind)) throw ConfigError("/kind", "unknown kind '" + config.kind + "'");

    config.seed = get_u64(j, "seed", std::nullopt);
    config.out = get_string(j, "out", "");
    config.format = get_string(j, "format", "csv");
    if (config.format != "csv" && config.format != "json") {
        throw ConfigError("/format", "expected 'csv' or 'json'");
    }

    std::set<std::string> allowed = {"kind", "seed", "out", "format"};
    auto parse_space = [&]() {
        if (!j.contains("space")) throw ConfigError("/space", "required field is missing");
        try {
            config.space = spec_from_json(j["space"]);
        } catch (const std::exception& e) {
            throw ConfigError("/space", e.what());
        }
    };

    if (config.kind == "converge") {
        allowed.insert({"space", "phi", "N", "budget", "stride"});
        require_keys(j, allowed);
        parse_space();
        if (!j.contains("phi") || !j["phi"].is_array()) {
            throw ConfigError("/phi", "required array of nonnegative reals is missing");
        }
        for (std::size_t i = 0; i < j["phi"].size(); ++i) {
            const auto& c = j["phi"][i];
            if (!c.is_number() || c.get<double>() < 0.0) {
                throw ConfigError("/phi/" + std::to_string(i), "expected a nonnegative real");
            }
            config.phi.push_back(c.get<double>());
        }
        config.max_degree = get_u32(j, "N", std::nullopt);
        config.budget = get_u64(j, "budget", config.budget);
        config.stride = std::max<std::uint64_t>(1, get_u64(j, "stride", config.stride));
    } else if (config.kind == "basis-constant" || config.kind == "p0") {
        allowed.insert({"space", "n", "k", "trials", "budget"});
        if (config.kind == "basis-constant") allowed.insert("report");
        require_keys(j, allowed);
        parse_space();
        if (!j.contains("n")) throw ConfigError("/n", "required field is missing");
        if (j["n"].is_number_unsigned()) {
            config.n_min = config.n_max = j["n"].get<std::uint32_t>();
        } else if (j["n"].is_array() && j["n"].size() == 2 && j["n"][0].is_number_unsigned() &&
                   j["n"][1].is_number_unsigned()) {
            config.n_min = j["n"][0].get<std::uint32_t>();
            config.n_max = j["n"][1].get<std::uint32_t>();
        } else {
            throw ConfigError("/n", "expected a degree or a [min, max] pair");
        }
        if (config.n_min == 0 || config.n_min > config.n_max) {
            throw ConfigError("/n", "degrees must satisfy 1 <= min <= max");
        }
        config.k = get_u32(j, "k", std::nullopt);
        if (config.k == 0) throw ConfigError("/k", "k must be >= 1");
        config.trials = get_u64(j, "trials", config.trials);
        config.budget = get_u64(j, "budget", config.budget);
        config.report = get_string(j, "report", "");
        if (config.space->dimension() < config.k + 1) {
            throw ConfigError("/k", "the space prefix must cover coordinate k+1");
        }
    } else if (config.kind == "net") {
        allowed.insert({"space", "eps", "samples"});
        require_keys(j, allowed);
        parse_space();
        if (!j.contains("eps")) throw ConfigError("/eps", "required field is missing");
        auto check = [](double e, const std::string& path) {
            if (!(e > 0.0) || !std::isfinite(e)) throw ConfigError(path, "eps must be positive");
            return e;
        };
        if (j["eps"].is_number()) {
            config.eps_values.push_back(check(j["eps"].get<double>(), "/eps"));
        } else if (j["eps"].is_array() && !j["eps"].empty()) {
            for (std::size_t i = 0; i < j["eps"].size(); ++i) {
                if (!j["eps"][i].is_number()) throw ConfigError("/eps/" + std::to_string(i), "expected a number");
                config.eps_values.push_back(
                    check(j["eps"][i].get<double>(), "/eps/" + std::to_string(i)));
            }
        } else {
            throw ConfigError("/eps", "expected a positive number or a list of them");
        }
        config.samples = get_u64(j, "samples", config.samples);
    } else if (config.kind == "invariants") {
        allowed.insert({"perturb"});
        require_keys(j, allowed);
        if (j.contains("perturb")) {
            if (!j["perturb"].is_boolean()) throw ConfigError("/perturb", "expected a boolean");
            config.perturb = j["perturb"].get<bool>();
        }
    } else if (config.kind == "enumerate") {
        allowed.insert({"degree", "max_length"});
        require_keys(j, allowed);
        config.degree = get_u32(j, "degree", std::nullopt);
        config.max_length = get_u32(j, "max_length", std::nullopt);
        if (config.max_length == 0) throw ConfigError("/max_length", "must be >= 1");
    } else if (config.kind == "norm") {
        allowed.insert({"space"});
        require_keys(j, allowed);
        parse_space();
    }
    return config;
}

Json config_to_json(const ExperimentConfig& config) {
    Json j;
    j["kind"] = config.kind;
    j["seed"] = config.seed;
    if (!config.out.empty()) j["out"] = config.out;
    j["format"] = config.format;
    if (config.kind == "converge") {
        j["space"] = spec_to_json(*config.space);
        j["phi"] = config.phi;
        j["N"] = config.max_degree;
        j["budget"] = config.budget;
        j["stride"] = config.stride;
    } else if (config.kind == "basis-constant" || config.kind == "p0") {
        j["space"] = spec_to_json(*config.space);
        j["n"] = Json::array({config.n_min, config.n_max});
        j["k"] = config.k;
        j["trials"] = config.trials;
        j["budget"] = config.budget;
        if (!config.report.empty()) j["report"] = config.report;
    } else if (config.kind == "net") {
        j["space"] = spec_to_json(*config.space);
        j["eps"] = config.eps_values;
        j["samples"] = config.samples;
    } else if (config.kind == "invariants") {
        j["perturb"] = config.perturb;
    } else if (config.kind == "enumerate") {
        j["degree"] = config.degree;
        j["max_length"] = config.max_length;
    } else if (config.kind == "norm") {
        j["space"] = spec_to_json(*config.space);
    }
    return j;
}

namespace {

std::string cell_to_csv(const Cell& cell) {
    if (std::holds_alternative<std::int64_t>(cell)) return std::to_string(std::get<std::int64_t>(cell));
    if (std::holds_alternative<double>(cell)) return format_double(std::get<double>(cell));
    return std::get<std::string>(cell);
}

std::string cell_to_json(const Cell& cell) {
    if (std::holds_alternative<std::int64_t>(cell)) return std::to_string(std::get<std::int64_t>(cell));
    if (std::holds_alternative<double>(cell)) return format_double(std::get<double>(cell));
    return "\"" + std::get<std::string>(cell) + "\"";
}

}  // namespace

std::string ResultTable::to_csv() const {
    std::string out;
    out += std::string("# mbasis ") + kVersion + "\n";
    out += "# config " + config_echo.dump() + "\n";
    for (std::size_t c = 0; c < columns.size(); ++c) {
        if (c) out += ",";
        out += columns[c];
    }
    out += "\n";
    for (const auto& row : rows) {
        for (std::size_t c = 0; c < row.size(); ++c) {
            if (c) out += ",";
            out += cell_to_csv(row[c]);
        }
        out += "\n";
    }
    return out;
}

std::string ResultTable::to_json_text() const {
    std::string out = "{\"metadata\":{\"version\":\"";
    out += kVersion;
    out += "\",\"config\":" + config_echo.dump() + "},\"columns\":[";
    for (std::size_t c = 0; c < columns.size(); ++c) {
        if (c) out += ",";
        out += "\"" + columns[c] + "\"";
    }
    out += "],\"rows\":[";
    for (std::size_t r = 0; r < rows.size(); ++r) {
        if (r) out += ",";
        out += "[";
        for (std::size_t c = 0; c < rows[r].size(); ++c) {
            if (c) out += ",";
            out += cell_to_json(rows[r][c]);
        }
        out += "]";
    }
    out += "]}\n";
    return out;
}

std::string ResultTable::render(const std::string& format) const {
    return format == "json" ? to_json_text() : to_csv();
}

ResultTable cmd_converge(const ExperimentConfig& config) {
    std::vector<Complex> phi;
    phi.reserve(config.phi.size());
    for (double c : config.phi) phi.emplace_back(c, 0.0);
    auto f = exp_functional_taylor(phi, config.max_degree);

    // Nonnegative coordinates keep every term of the nonnegative-coefficient
    // series nonnegative on the cloud, which is what makes the tail column
    // decrease monotonically row by row.
    Cloud cloud = Cloud::generate(*config.space, config.budget, config.seed, {},
                                  SampleOptions{.nonneg = true});
    auto curve = tail_seminorm_curve(f, cloud);
    const auto total = static_cast<std::uint64_t>(curve.size() - 1);

    ResultTable table;
    table.config_echo = config_to_json(config);
    table.columns = {"n_monomials", "tail_seminorm", "evals"};
    for (std::uint64_t n = 0; n <= total; n += config.stride) {
        table.rows.push_back({static_cast<std::int64_t>(n), curve[n],
                              static_cast<std::int64_t>((total - n) * cloud.points().size())});
    }
    if ((total % config.stride) != 0) {
        table.rows.push_back({static_cast<std::int64_t>(total), curve[total], std::int64_t(0)});
    }
    return table;
}

ResultTable cmd_basis_constant(const ExperimentConfig& config,
                               std::vector<BasisConstantReport>* reports) {
    ResultTable table;
    table.config_echo = config_to_json(config);
    table.columns = {"n", "c_hat", "c_hat_root", "p0_estimate", "envelope_a", "skipped_trials"};
    double max_root = 0.0;
    for (std::uint32_t n = config.n_min; n <= config.n_max; ++n) {
        auto report = basis_constant_estimate(n, config.k, *config.space, config.trials,
                                              config.budget, mix_seed(config.seed, n));
        max_root = std::max(max_root, report.c_hat_root);
        table.rows.push_back({std::string(std::to_string(n)), report.c_hat, report.c_hat_root,
                              report.p0_estimate, report.envelope_a,
                              static_cast<std::int64_t>(report.skipped_trials)});
        if (reports) reports->push_back(std::move(report));
    }
    table.rows.push_back({std::string("summary"), std::string(""), max_root, std::string(""),
                          std::string(""), std::string("")});
    return table;
}

ResultTable cmd_p0(const ExperimentConfig& config) {
    ResultTable table;
    table.config_echo = config_to_json(config);
    table.columns = {"n", "p0_estimate", "skipped_trials"};
    for (std::uint32_t n = config.n_min; n <= config.n_max; ++n) {
        std::uint64_t skipped = 0;
        double estimate = estimate_p0(*config.space, n, config.k, config.trials, config.budget,
                                      mix_seed(config.seed, n), &skipped);
        table.rows.push_back(
            {static_cast<std::int64_t>(n), estimate, static_cast<std::int64_t>(skipped)});
    }
    return table;
}

ResultTable cmd_net(const ExperimentConfig& config) {
    ResultTable table;
    table.config_echo = config_to_json(config);
    table.columns = {"eps", "net_size", "max_distance_from_net_over_samples", "covered_fraction"};
    for (std::size_t e = 0; e < config.eps_values.size(); ++e) {
        double eps = config.eps_values[e];
        EpsilonNet net(*config.space, eps);
        std::uint64_t covered = 0;
        double max_distance = 0.0;
        std::uint64_t base = mix_seed(config.seed, 5000 + e);
        for (std::uint64_t i = 0; i < config.samples; ++i) {
            Point z = sample_point(*config.space, mix_seed(base, i));
            Point q = net.snap(z);
            double distance = config.space->ambient_norm(z - q);
            max_distance = std::max(max_distance, distance);
            if (net.contains(q) && distance <= eps) ++covered;
        }
        double fraction = config.samples == 0
                              ? 1.0
                              : static_cast<double>(covered) / static_cast<double>(config.samples);
        table.rows.push_back({eps, static_cast<std::int64_t>(net.points().size()), max_distance,
                              fraction});
    }
    return table;
}

ResultTable cmd_invariants(const ExperimentConfig& config, bool* any_failure) {
    auto results = run_invariants({.seed = config.seed, .perturb_solidity = config.perturb});
    ResultTable table;
    table.config_echo = config_to_json(config);
    table.columns = {"suite", "pass", "worst_residual"};
    bool failed = false;
    for (const auto& result : results) {
        failed = failed || !result.pass;
        table.rows.push_back(
            {result.suite, std::string(result.pass ? "pass" : "fail"), result.residual});
    }
    if (any_failure) *any_failure = failed;
    return table;
}

std::vector<std::string> cmd_enumerate(std::uint32_t degree, std::uint32_t max_length) {
    std::vector<std::string> lines;
    SquareOrderGenerator generator(degree, max_length);
    while (auto m = generator.next()) lines.push_back(multiindex_to_text(*m));
    return lines;
}

double cmd_norm(const CompactSetSpec& spec, const Point& z, bool dual) {
    if (spec.is_block()) return block_space_norm(z, spec.p());
    if (dual) return lorentz_norm(z, spec.weights());
    return lorentz_predual_norm(z, spec.weights());
}

std::string run_experiment(const ExperimentConfig& config, bool* any_failure) {
    if (any_failure) *any_failure = false;
    if (config.kind == "converge") return cmd_converge(config).render(config.format);
    if (config.kind == "basis-constant") return cmd_basis_constant(config).render(config.format);
    if (config.kind == "p0") return cmd_p0(config).render(config.format);
    if (config.kind == "net") return cmd_net(config).render(config.format);
    if (config.kind == "invariants") return cmd_invariants(config, any_failure).render(config.format);
    if (config.kind == "enumerate") {
        std::string out;
        for (const auto& line : cmd_enumerate(config.degree, config.max_length)) out += line + "\n";
        return out;
    }
    throw ConfigError("/kind", "'" + config.kind + "' is not runnable from a config alone");
}

}  // namespace mbasis
