#include <CLI11.hpp>
#include <iostream>

#include "hfk/pipeline.hpp"

int main(int argc, char** argv) {
    CLI::App app{"Knot Floer homology from grid diagrams"};
    std::string braid, grid, coeff = "z", mode = "hfk", strategy = "faithful", skip = "auto", crosscheck = "default",
                format = "text", pipeline = "oval";
    int budget = 100000;
    bool dump = false, no_euler = false;
    auto* in = app.add_option_group("input");
    in->add_option("--braid", braid, "braid word, e.g. \"1 1 1\" or \"1,-2,1,-2\"");
    in->add_option("--grid", grid, "grid file (n / X: rows / O: rows)");
    in->require_option(1);
    app.add_option("--coeff", coeff)->check(CLI::IsMember({"z", "z2"}));
    app.add_option("--mode", mode)->check(CLI::IsMember({"hfk", "genus", "fibered", "torsion"}));
    app.add_option("--strategy", strategy)->check(CLI::IsMember({"faithful", "fast", "paths"}));
    app.add_option("--pipeline", pipeline)->check(CLI::IsMember({"oval", "mos"}));
    app.add_option("--simplify-budget", budget, "node expansions; 0 disables simplification")->check(CLI::NonNegativeNumber);
    app.add_option("--skip", skip)->check(CLI::IsMember({"auto", "none"}));
    app.add_option("--crosscheck", crosscheck, "on|off (default: on for n <= 7)")
        ->check(CLI::IsMember({"on", "off", "default"}));
    app.add_option("--format", format)->check(CLI::IsMember({"text", "machine"}));
    app.add_flag("--dump-arrangement", dump, "print the chosen short arrangement");
    app.add_flag("--no-euler", no_euler, "skip the Euler characteristic check");
    CLI11_PARSE(app, argc, argv);

    hfk::RunConfig cfg;
    try {
        if (!braid.empty()) cfg.braid = hfk::parse_braid_text(braid);
        if (!grid.empty()) cfg.grid_path = grid;
        cfg.ring = coeff == "z" ? hfk::Ring::Z : hfk::Ring::Z2;
        cfg.mode = mode == "hfk"       ? hfk::Mode::Hfk
                   : mode == "genus"   ? hfk::Mode::Genus
                   : mode == "fibered" ? hfk::Mode::Fibered
                                       : hfk::Mode::Torsion;
        cfg.strategy = strategy == "faithful" ? hfk::Strategy::Faithful
                       : strategy == "fast"   ? hfk::Strategy::Fast
                                              : hfk::Strategy::Paths;
        cfg.pipeline = pipeline == "oval" ? hfk::Pipeline::Oval : hfk::Pipeline::Mos;
        cfg.simplify_budget = budget;
        cfg.auto_skip = skip == "auto";
        if (crosscheck != "default") cfg.crosscheck = crosscheck == "on";
        cfg.euler_check = !no_euler;
        cfg.format = format == "text" ? hfk::Format::Text : hfk::Format::Machine;
        cfg.dump_arrangement = dump;
        hfk::RunReport r = hfk::run(cfg);
        std::cout << hfk::emit_report(r, cfg.format);
        for (auto& w : r.warnings)
            if (cfg.format == hfk::Format::Machine) std::cerr << "warning: " << w << '\n';
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 2;
    }
    return 0;
}
