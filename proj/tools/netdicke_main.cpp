#include <fstream>
#include <iostream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "netdicke/sweep.hpp"

namespace {

struct CliArgs {
    std::string config_path;
    std::vector<std::string> sets;
    std::string out_path;
    std::string format = "csv";
    int workers = 0;
    long long seed = 0;
    std::string presets = NETDICKE_PRESET_FILE;
    std::string figure_id;
};

void add_common_options(CLI::App* sub, CliArgs& args, bool config_required) {
    auto* config =
        sub->add_option("--config", args.config_path, "Key/value config file");
    if (config_required) config->required();
    sub->add_option("--set", args.sets,
                    "Override a config key, e.g. --set model.t=0.8");
    sub->add_option("--out", args.out_path, "Output path ('-' for stdout)")
        ->required();
    sub->add_option("--format", args.format, "Output format")
        ->check(CLI::IsMember({"csv", "json"}));
    sub->add_option("--workers", args.workers,
                    "Worker threads for sweep rows (0 = all)");
    sub->add_option("--seed", args.seed, "RNG seed (netgen)");
}

netdicke::Config build_config(const CliArgs& args, const CLI::App* sub) {
    netdicke::Config cfg;
    if (!args.config_path.empty())
        cfg = netdicke::Config::from_file(args.config_path);
    for (const std::string& kv : args.sets) {
        const auto eq = kv.find('=');
        if (eq == std::string::npos || eq == 0)
            throw netdicke::ConfigError("--set expects key=value, got '" + kv +
                                        "'");
        cfg.set(kv.substr(0, eq), kv.substr(eq + 1));
    }
    if (sub->count("--seed") > 0) cfg.set("seed", std::to_string(args.seed));
    return cfg;
}

int write_output(const netdicke::Dataset& ds, const CliArgs& args) {
    const bool to_stdout = args.out_path == "-";
    std::ofstream file;
    if (!to_stdout) {
        file.open(args.out_path);
        if (!file) {
            std::cerr << "error: cannot open output path " << args.out_path
                      << "\n";
            return 1;
        }
    }
    std::ostream& out = to_stdout ? std::cout : file;
    if (args.format == "json")
        netdicke::write_json(out, ds);
    else
        netdicke::write_csv(out, ds);
    return netdicke::all_rows_failed(ds) ? 2 : 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Dicke-Ising mean-field theory on annealed complex networks"};
    app.require_subcommand(1);
    CliArgs args;

    CLI::App* solve = app.add_subcommand(
        "solve", "Equilibrium order parameters, optionally swept");
    CLI::App* boundary = app.add_subcommand(
        "boundary", "Critical temperature by bisection on the solver");
    CLI::App* quantum = app.add_subcommand(
        "quantum", "Zero-temperature order parameter, closed form vs solver");
    CLI::App* stats =
        app.add_subcommand("stats", "Degree distribution statistics");
    CLI::App* netgen =
        app.add_subcommand("netgen", "Generate a network edge list");
    CLI::App* oracle = app.add_subcommand(
        "oracle", "Exact diagonalization scan over temperature");
    CLI::App* figure =
        app.add_subcommand("figure", "Figure-reproduction dataset");
    for (CLI::App* sub :
         {solve, boundary, quantum, stats, netgen, oracle, figure})
        add_common_options(sub, args, sub != figure);
    figure->add_option("id", args.figure_id, "Figure id (fig2..fig6)")
        ->required();
    figure->add_option("--presets", args.presets, "Figure preset file");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : 1;
    }
    const CLI::App* sub = app.get_subcommands().front();

    try {
        const netdicke::Config cfg = build_config(args, sub);

        if (sub == netgen) {
            const netdicke::NetworkSample sample = netdicke::run_netgen(cfg);
            const bool to_stdout = args.out_path == "-";
            std::ofstream file;
            if (!to_stdout) {
                file.open(args.out_path);
                if (!file) {
                    std::cerr << "error: cannot open output path "
                              << args.out_path << "\n";
                    return 1;
                }
            }
            netdicke::write_netgen_output(to_stdout ? std::cout : file,
                                          sample);
            return 0;
        }

        netdicke::Dataset ds;
        if (sub == solve)
            ds = netdicke::run_solve(cfg, args.workers);
        else if (sub == boundary)
            ds = netdicke::run_boundary(cfg, args.workers);
        else if (sub == quantum)
            ds = netdicke::run_quantum(cfg, args.workers);
        else if (sub == stats)
            ds = netdicke::run_stats(cfg, args.workers);
        else if (sub == oracle)
            ds = netdicke::run_oracle(cfg, args.workers);
        else
            ds = netdicke::run_figure(args.figure_id, cfg, args.presets,
                                      args.workers);
        return write_output(ds, args);
    } catch (const netdicke::ConfigError& e) {
        std::cerr << "config error: " << e.what() << "\n";
        return 1;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
}
