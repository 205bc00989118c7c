#include <chrono>
#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>

#include "mbasis/experiment.hpp"

namespace {

constexpr int kExitConfigError = 2;
constexpr int kExitInvariantFailure = 3;

struct Overrides {
    std::optional<std::uint64_t> seed;
    std::optional<std::uint64_t> budget;
    std::optional<std::uint64_t> trials;
    std::optional<std::string> out;
    std::optional<std::string> format;
    bool perturb = false;
};

mbasis::Json load_config(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw mbasis::ConfigError("", "cannot open config file '" + path + "'");
    try {
        return mbasis::Json::parse(in);
    } catch (const std::exception& e) {
        throw mbasis::ConfigError("", std::string("config is not valid JSON: ") + e.what());
    }
}

mbasis::ExperimentConfig parse_with_overrides(const std::string& path, const Overrides& overrides) {
    mbasis::Json j = load_config(path);
    if (overrides.seed) j["seed"] = *overrides.seed;
    if (overrides.budget) j["budget"] = *overrides.budget;
    if (overrides.trials) j["trials"] = *overrides.trials;
    if (overrides.out) j["out"] = *overrides.out;
    if (overrides.format) j["format"] = *overrides.format;
    if (overrides.perturb) j["perturb"] = true;
    return mbasis::parse_experiment_config(j);
}

void write_output(const std::string& path, const std::string& content) {
    if (path.empty()) {
        std::cout << content;
        return;
    }
    std::ofstream out(path, std::ios::binary);
    if (!out) throw std::runtime_error("cannot open output file '" + path + "'");
    out << content;
}

int run_config_command(const std::string& config_path, const Overrides& overrides) {
    auto started = std::chrono::steady_clock::now();
    auto config = parse_with_overrides(config_path, overrides);

    std::string rendered;
    bool invariants_failed = false;
    if (config.kind == "basis-constant" && !config.report.empty()) {
        std::vector<mbasis::BasisConstantReport> reports;
        rendered = mbasis::cmd_basis_constant(config, &reports).render(config.format);
        mbasis::Json report_json = mbasis::Json::array();
        for (const auto& report : reports) report_json.push_back(mbasis::basis_report_to_json(report));
        write_output(config.report, report_json.dump(2) + "\n");
    } else {
        rendered = mbasis::run_experiment(config, &invariants_failed);
    }
    write_output(config.out, rendered);

    auto elapsed = std::chrono::duration<double>(std::chrono::steady_clock::now() - started);
    std::cerr << config.kind << ": done in " << elapsed.count() << " s\n";
    return invariants_failed ? kExitInvariantFailure : 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Experiments with monomial bases on two sequence spaces"};
    app.require_subcommand(1);

    std::string config_path;
    Overrides overrides;
    auto add_common = [&](CLI::App* sub) {
        sub->add_option("--config", config_path, "JSON experiment config")->required();
        sub->add_option("--seed", overrides.seed, "override the config seed");
        sub->add_option("--budget", overrides.budget, "override the sample budget");
        sub->add_option("--trials", overrides.trials, "override the trial count");
        sub->add_option("--out", overrides.out, "output path (default stdout)");
        sub->add_option("--format", overrides.format, "csv or json");
    };
    for (const char* name : {"converge", "basis-constant", "p0", "net", "invariants"}) {
        auto* sub = app.add_subcommand(name);
        add_common(sub);
        if (std::string(name) == "invariants") {
            sub->add_flag("--perturb", overrides.perturb,
                          "break the solidity suite on purpose (checker self-test)");
        }
    }

    auto* enumerate = app.add_subcommand("enumerate", "print square-ordered multi-indices");
    std::uint32_t degree = 0;
    std::uint32_t max_length = 0;
    std::string enum_out;
    enumerate->add_option("--degree", degree, "monomial degree")->required();
    enumerate->add_option("--max-length", max_length, "largest monomial length")
        ->required()
        ->check(CLI::PositiveNumber);
    enumerate->add_option("--out", enum_out, "output path (default stdout)");

    auto* norm = app.add_subcommand("norm", "read a point from stdin, print its norm");
    std::string space_kind;
    double p_value = 2.0;
    bool dual = false;
    norm->add_option("--space", space_kind, "block or lorentz")
        ->required()
        ->check(CLI::IsMember({"block", "lorentz"}));
    norm->add_option("--p", p_value, "block space exponent (default 2)");
    norm->add_flag("--dual", dual, "print the d(w,1) norm instead of the predual norm");

    CLI11_PARSE(app, argc, argv);

    try {
        if (enumerate->parsed()) {
            std::string out;
            for (const auto& line : mbasis::cmd_enumerate(degree, max_length)) out += line + "\n";
            write_output(enum_out, out);
            return 0;
        }
        if (norm->parsed()) {
            std::stringstream buffer;
            buffer << std::cin.rdbuf();
            mbasis::Point z;
            try {
                z = mbasis::point_from_json(mbasis::Json::parse(buffer.str()));
            } catch (const std::exception& e) {
                std::cerr << "config error: invalid point on stdin: " << e.what() << "\n";
                return kExitConfigError;
            }
            mbasis::CompactSetSpec spec =
                space_kind == "block"
                    ? mbasis::CompactSetSpec::block({}, mbasis::PExponent(p_value))
                    : mbasis::CompactSetSpec::lorentz(
                          {}, mbasis::LorentzWeights::harmonic(std::max<std::size_t>(1, z.nnz())));
            std::cout << mbasis::format_double(mbasis::cmd_norm(spec, z, dual)) << "\n";
            return 0;
        }
        return run_config_command(config_path, overrides);
    } catch (const mbasis::ConfigError& e) {
        std::cerr << "config error at " << (e.path().empty() ? "/" : e.path()) << ": " << e.what()
                  << "\n";
        return kExitConfigError;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
}
