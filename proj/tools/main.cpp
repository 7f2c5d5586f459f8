#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "lightframe/report.hpp"

namespace {

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) {
        throw lightframe::ConfigError("cannot open config file '" + path + "'");
    }
    std::ostringstream buffer;
    buffer << in.rdbuf();
    return buffer.str();
}

void write_file(const std::string& path, const std::string& content) {
    std::ofstream out(path, std::ios::binary);
    if (!out) {
        throw lightframe::ConfigError("cannot open output file '" + path + "'");
    }
    out << content;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"time contraction in a light clock with finite-mass plates"};
    app.require_subcommand(1);

    std::string config_path;
    std::string out_path;

    CLI::App* run =
        app.add_subcommand("run", "run one scenario and print a report");
    run->add_option("config", config_path, "scenario config file")->required();
    run->add_option("--out", out_path, "write the scenario's CSV row here");

    lightframe::SweepSpec spec;
    bool log_scale = false;
    CLI::App* sweep = app.add_subcommand(
        "sweep", "run an (eps_lab, beta_u) grid and emit CSV");
    sweep->add_option("config", config_path, "base scenario config file")
        ->required();
    sweep->add_option("--eps-min", spec.eps_min, "lowest eps_lab")->required();
    sweep->add_option("--eps-max", spec.eps_max, "highest eps_lab")->required();
    sweep->add_option("--eps-steps", spec.eps_steps, "grid size, >= 2")
        ->required();
    sweep
        ->add_option("--beta", spec.beta_values,
                     "comma-separated beta_u values")
        ->required()
        ->delimiter(',');
    sweep->add_flag("--log", log_scale, "space the eps grid logarithmically");
    sweep->add_option("--out", out_path,
                      "write CSV to a file instead of standard output");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : 1;
    }

    try {
        const lightframe::ScenarioConfig config =
            lightframe::parse_config(read_file(config_path), &std::cerr);

        if (run->parsed()) {
            const lightframe::SingleRunOutput output =
                lightframe::run_single(config);
            std::cout << output.report;
            if (!out_path.empty()) {
                write_file(out_path, output.csv);
            }
        } else {
            spec.scale = log_scale ? lightframe::SweepSpec::Scale::Log
                                   : lightframe::SweepSpec::Scale::Linear;
            const std::string csv = lightframe::run_sweep(spec, config);
            if (out_path.empty()) {
                std::cout << csv;
            } else {
                write_file(out_path, csv);
            }
        }
    } catch (const lightframe::ParseError& e) {
        std::cerr << e.name() << ": " << e.what() << '\n';
        return 1;
    } catch (const lightframe::ConfigError& e) {
        std::cerr << e.name() << ": " << e.what() << '\n';
        return 1;
    } catch (const lightframe::Error& e) {
        std::cerr << e.name() << ": " << e.what() << '\n';
        return 2;
    }
    return 0;
}
