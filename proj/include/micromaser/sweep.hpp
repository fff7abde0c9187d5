#pragma once

// Time sweeps of the two-atom reduced state, run configuration and the
// figure presets.

#include <iosfwd>
#include <string>
#include <vector>

#include "micromaser/cascade.hpp"
#include "micromaser/entanglement.hpp"
#include "micromaser/field.hpp"
#include "micromaser/model.hpp"

namespace micromaser {

struct RunConfig {
    FieldSpec field = FieldSpec::fock(0);
    SecondAtom atoms = SecondAtom::Ground;
    ModelParams model;
    double t_start = 0.0;
    double t_end = 10.0;
    int steps = 1000;
    std::string csv_path;   ///< empty: stdout
    std::string plot_path;  ///< empty: no plot
    bool dump_matrix = false;

    /// Throws std::invalid_argument with a message naming the bad field.
    void validate() const;

    /// Scaled time of grid point i; the grid includes both end points.
    double time_at(int i) const;
};

/// "eg" / "ee".
SecondAtom parse_atoms(const std::string& text);
std::string to_string(SecondAtom second);

/// "on" / "off".
bool parse_stark(const std::string& text);

/// Overlays the flat JSON keys field, atoms, chi_over_kappa, r, stark,
/// t_start, t_end, steps, csv, plot, dump_matrix, tail_tolerance onto
/// `base`. Unknown keys are rejected.
RunConfig config_from_json(const std::string& text, RunConfig base = {});
RunConfig config_from_file(const std::string& path, RunConfig base = {});

struct SweepRow {
    double kappa_t;
    double concurrence;
    double pop_sum;
    double ent_formation;
    TwoQubitDensity rho;
};

struct SweepResult {
    RunConfig config;
    std::vector<SweepRow> rows;  ///< ascending kappa_t, one per grid point
};

/// Evaluates the closed-form reduced state and concurrence on the grid.
/// Points are spread over worker threads; the result does not depend on
/// scheduling.
SweepResult run_sweep(const RunConfig& cfg);

/// Parameters of a published figure panel, e.g. "1a" or "14d".
/// Throws std::invalid_argument for an unknown id.
RunConfig figure_preset(const std::string& id);
std::vector<std::string> figure_ids();
/// One-line description of a preset for list-figures.
std::string describe(const RunConfig& cfg);

/// CSV with header kappa_t,concurrence,pop_sum,ent_formation and, with
/// dump_matrix, re/im of rho11..rho44 and rho14, rho41, rho23, rho32.
/// Numbers use 12 significant digits.
void write_csv(std::ostream& out, const SweepResult& result);

/// Standalone SVG: concurrence solid, rho22 + rho33 dotted.
void write_svg(std::ostream& out, const SweepResult& result, const std::string& title);

/// Writes the CSV (to stdout when csv_path is empty) and the plot if
/// requested. Throws std::runtime_error when a file cannot be opened.
void emit(const SweepResult& result, std::ostream& stdout_stream, const std::string& title);

}  // namespace micromaser
