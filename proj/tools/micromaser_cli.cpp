// micromaser: concurrence of two atoms crossing a two-photon Kerr cavity.
//
//   micromaser sweep --field thermal:0.5 --atoms eg --chi 0.5 --csv out.csv
//   micromaser figure --id 9a --plot fig9a.svg
//   micromaser verify --depth full
//   micromaser list-figures

#include <iostream>
#include <stdexcept>
#include <string>

#include <CLI11.hpp>

#include "micromaser/sweep.hpp"
#include "micromaser/verify.hpp"

using namespace micromaser;

namespace {

struct SweepFlags {
    std::string field, atoms, stark, csv, plot, config;
    double chi = 0, r = 1, t_start = 0, t_end = 10, tail = kDefaultTailTolerance;
    int steps = 1000;
    bool dump = false;
};

RunConfig config_from_flags(const CLI::App& cmd, const SweepFlags& f) {
    RunConfig cfg;
    if (!f.config.empty()) cfg = config_from_file(f.config, cfg);
    auto given = [&](const char* name) { return cmd.get_option(name)->count() > 0; };
    if (given("--field")) {
        const double tail = cfg.field.tail_tolerance;
        cfg.field = FieldSpec::parse(f.field);
        cfg.field.tail_tolerance = tail;
    }
    if (given("--atoms")) cfg.atoms = parse_atoms(f.atoms);
    if (given("--chi")) cfg.model.chi_over_kappa = f.chi;
    if (given("--r")) cfg.model.r = f.r;
    if (given("--stark")) cfg.model.stark_enabled = parse_stark(f.stark);
    if (given("--t-start")) cfg.t_start = f.t_start;
    if (given("--t-end")) cfg.t_end = f.t_end;
    if (given("--steps")) cfg.steps = f.steps;
    if (given("--csv")) cfg.csv_path = f.csv;
    if (given("--plot")) cfg.plot_path = f.plot;
    if (given("--dump-matrix")) cfg.dump_matrix = f.dump;
    if (given("--tail")) cfg.field.tail_tolerance = f.tail;
    cfg.validate();
    return cfg;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Two-atom entanglement in a two-photon Kerr micromaser"};
    app.require_subcommand(1);

    SweepFlags sf;
    auto* sweep = app.add_subcommand("sweep", "Concurrence over a grid of scaled times");
    sweep->add_option("--field", sf.field, "fock:m or thermal:nbar");
    sweep->add_option("--atoms", sf.atoms, "eg (second atom ground) or ee (both excited)");
    sweep->add_option("--chi", sf.chi, "Kerr strength chi/kappa");
    sweep->add_option("--r", sf.r, "coupling ratio kappa1/kappa2");
    sweep->add_option("--stark", sf.stark, "on or off");
    sweep->add_option("--t-start", sf.t_start, "first kappa*t");
    sweep->add_option("--t-end", sf.t_end, "last kappa*t");
    sweep->add_option("--steps", sf.steps, "number of time points");
    sweep->add_option("--csv", sf.csv, "CSV output path (default stdout)");
    sweep->add_option("--plot", sf.plot, "SVG plot path");
    sweep->add_flag("--dump-matrix", sf.dump, "append the density-matrix entries to the CSV");
    sweep->add_option("--tail", sf.tail, "discarded thermal tail tolerance");
    sweep->add_option("--config", sf.config, "JSON run configuration; flags override it");

    std::string figure_id, figure_csv, figure_plot;
    bool figure_dump = false;
    auto* figure = app.add_subcommand("figure", "Sweep with the parameters of a figure panel");
    figure->add_option("--id", figure_id, "panel id, e.g. 1a (see list-figures)")->required();
    figure->add_option("--csv", figure_csv, "CSV output path (default stdout)");
    figure->add_option("--plot", figure_plot, "SVG plot path");
    figure->add_flag("--dump-matrix", figure_dump, "append the density-matrix entries");

    std::string depth = "quick";
    auto* verify_cmd = app.add_subcommand("verify", "Compare against brute-force evolution");
    verify_cmd->add_option("--depth", depth, "quick or full");

    auto* list = app.add_subcommand("list-figures", "Print the figure presets");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : 1;
    }

    try {
        if (sweep->parsed()) {
            const RunConfig cfg = config_from_flags(*sweep, sf);
            emit(run_sweep(cfg), std::cout, describe(cfg));
        } else if (figure->parsed()) {
            RunConfig cfg = figure_preset(figure_id);
            cfg.csv_path = figure_csv;
            cfg.plot_path = figure_plot;
            cfg.dump_matrix = figure_dump;
            emit(run_sweep(cfg), std::cout, "Fig. " + figure_id + ": " + describe(cfg));
        } else if (verify_cmd->parsed()) {
            const VerifyReport report = verify(parse_depth(depth));
            std::cout << report.to_json() << '\n';
            return report.passed() ? 0 : 2;
        } else if (list->parsed()) {
            for (const std::string& id : figure_ids())
                std::cout << id << '\t' << describe(figure_preset(id)) << '\n';
        }
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 1;
    }
    return 0;
}
