#include "nbrw/cli.hpp"
#include "nbrw/error.hpp"

#include <CLI11.hpp>

#include <cstdlib>
#include <iostream>

int main(int argc, char** argv)
{
    CLI::App app{"Non-backtracking random walks on multigraphs"};
    app.set_version_flag("--version", nbrw::library_version());

    nbrw::RunConfig cfg;
    std::string command;
    std::string format;
    std::string mode = "ordinary";
    std::string walk = "nbrw";
    bool exact = false;
    std::uint64_t seed = 0;

    app.add_option("command", command, "analyze | limits | spectral | cogrowth | simulate | amenability | check")
        ->required()
        ->check(CLI::IsMember({"analyze", "limits", "spectral", "cogrowth", "simulate", "amenability", "check"}));
    auto* graph = app.add_option("--graph", cfg.graph_file, "edge-list file, - for stdin");
    auto* builtin = app.add_option("--builtin", cfg.builtin, "builtin graph, name[:p1,p2,...]");
    graph->excludes(builtin);
    app.add_option("--from", cfg.from, "start vertex");
    app.add_option("--to", cfg.to, "target vertex");
    app.add_option("--nmax", cfg.nmax, "number of steps / series degree");
    app.add_option("--rmax", cfg.rmax, "largest ball radius for the Folner trend");
    app.add_option("--k", cfg.k, "subset size cap for the isoperimetric search");
    app.add_option("--trials", cfg.trials, "Monte Carlo trials");
    auto* seed_opt = app.add_option("--seed", seed, "random seed");
    app.add_flag("--exact", exact, "exact rational arithmetic");
    app.add_option("--format", format, "json | csv")->check(CLI::IsMember({"json", "csv"}));
    app.add_option("--output,-o", cfg.output, "write the report here instead of stdout");
    app.add_option("--mode", mode, "cogrowth mode")->check(CLI::IsMember({"ordinary", "weighted"}));
    app.add_flag("--check-functional-equation", cfg.check_functional_equation);
    app.add_option("--walk", walk, "nbrw | srw")->check(CLI::IsMember({"nbrw", "srw"}));

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int rc = app.exit(e);
        return rc == 0 ? 0 : 2;
    }

    cfg.command = nbrw::parse_command(command);
    cfg.numeric_mode = exact ? nbrw::NumericMode::rational : nbrw::NumericMode::floating;
    if (seed_opt->count() > 0) cfg.seed = seed;
    if (!format.empty()) cfg.format = format == "json" ? nbrw::OutputFormat::json : nbrw::OutputFormat::csv;
    cfg.cogrowth_mode = nbrw::parse_cogrowth_mode(mode);
    cfg.walk = walk == "srw" ? nbrw::WalkKind::srw : nbrw::WalkKind::nbrw;
    if (const char* budget = std::getenv("NBRW_BUDGET")) {
        try {
            cfg.budget = std::stoull(budget);
        } catch (const std::exception&) {
            std::cerr << "nbrw: NBRW_BUDGET must be a positive integer\n";
            return 2;
        }
    }
    return nbrw::run(cfg, std::cin, std::cout, std::cerr);
}
