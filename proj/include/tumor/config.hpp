#ifndef TUMOR_CONFIG_HPP
#define TUMOR_CONFIG_HPP

#include <string>
#include <vector>

#include "tumor/kinetics.hpp"
#include "tumor/momentum.hpp"
#include "tumor/penalty.hpp"

namespace tumor {

struct GridParams {
    double R = 1.0;
    int N = 64;
    int d = 2;
};

struct MotionSpec {
    std::string kind = "static"; // static | rotation | expansion
    double rate = 0.0;
    double r_support = 0.0; // 0 means "default to 0.9 R"
};

struct InitialSpec {
    std::string preset = "tumor"; // zero | rest | tumor
    double interface_radius = 0.0; // 0 means "default to 0.4 R"
    double species_radius = 0.0;   // 0 means "default to 0.35 R"
    double amp_P = 1.0;
    double amp_Q = 0.5;
    double amp_D = 0.1;
    double amp_C = 0.8; // fraction of C_bar
    double rest_density = 1.0;
};

struct RunParams {
    double t_end = 1.0;
    double cfl = 0.4;
    double dt_max = 0.02;
    double output_interval = 0.05; // 0 records every step
    unsigned long seed = 0;        // randomized property tests only
};

struct OutputParams {
    std::string dir = "out";
    std::string prefix = "run";
    std::string snapshot_format = "grid-csv"; // grid-csv | vtk-legacy
};

/// Everything one simulation needs. penalty.w is derived (width_cells * h)
/// when the config is finalized.
struct RunConfig {
    GridParams grid;
    PhysicalParams phys;
    RateConstants rates;
    PenaltyParams penalty;
    double width_cells = 2.0;
    MotionSpec motion;
    InitialSpec initial;
    RunParams run;
    OutputParams output;

    /// Fill derived fields (penalty.w, default radii) from the primary ones.
    void finalize();
    /// Full admissibility check; throws ConfigError naming the violated rule.
    void validate() const;

    double spacing() const { return 4.0 * grid.R / grid.N; }
};

/// Parse the line-based `key = value` format with [section] headers.
/// Unknown sections or keys are parse errors naming the offender and line.
RunConfig parse_config(const std::string& text, const std::string& source_name);

/// Read and parse a config file.
RunConfig load_config(const std::string& path);

/// Canonical full dump: every key written explicitly, so that
/// parse(dump(cfg)) == cfg byte-for-byte on re-dump.
std::string dump_config(const RunConfig& cfg);

/// Parse "static" / "rotation(rate)" / "expansion(rate, r_support)".
MotionSpec parse_motion_spec(const std::string& text);
std::string format_motion_spec(const MotionSpec& m);

} // namespace tumor

#endif
