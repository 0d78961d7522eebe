#ifndef TUMOR_SIMULATION_HPP
#define TUMOR_SIMULATION_HPP

#include <string>
#include <vector>

#include "tumor/config.hpp"
#include "tumor/diagnostics.hpp"
#include "tumor/state.hpp"

namespace tumor {

/// Instantiate the motion preset named by the config.
PrescribedMotion make_motion(const MotionSpec& spec);

/// Build the initial fields for the configured preset (zero | rest | tumor).
State initial_state(const RunConfig& cfg);

/// Scalars accumulated over every step of a run (the records are only
/// emitted at output intervals; these see everything).
struct RunSummary {
    std::size_t steps = 0;
    double energy_initial = 0.0;
    double energy_max = 0.0;
    double energy_final = 0.0;
    double slip_time_integral = 0.0;   // int_0^T slip_norm_sq dt
    double max_leakage_P = 0.0, max_leakage_Q = 0.0, max_leakage_D = 0.0, max_leakage_C = 0.0;
    double mass_P_max = 0.0, mass_Q_max = 0.0, mass_D_max = 0.0;
    double max_mass_budget_rel = 0.0;  // residual / current total species mass
    double max_nutrient_budget = 0.0;
    double min_species = 0.0;          // most negative species value seen
    double c_bound = 0.0;              // max(||C_0||_inf, C_bar)
    double c_max_seen = 0.0;
    double exterior_kinetic_max = 0.0; // max_t int rho |v|^2 clamp(phi/w,0,1)
    double exterior_visc_max = 0.0;    // max_t int mu_w (|grad v|^2 + |v|^2) clamp(phi/w,0,1)
};

struct RunResult {
    std::vector<DiagnosticsRecord> records;
    State final_state;
    RunSummary summary;
};

/// Deterministic time loop to t_end. The step order is fixed: level set,
/// species transport + reaction, nutrient, momentum — every stage reads the
/// start-of-step velocity and interface. dt is the smallest of dt_max, the
/// advective/acoustic CFL bound, and the remaining time. Fails fast
/// (NumericalError) on nonfinite fields or a maximum-principle violation.
RunResult run_simulation(const RunConfig& cfg);

struct SweepSpec {
    std::string param;          // epsilon | omega | delta | resolution
    std::vector<double> values; // >= 3, strictly decreasing for limit sweeps
    RunConfig base;

    void validate() const;
};

struct SweepRow {
    double value = 0.0;
    double slip_time_integral = 0.0;
    double max_leakage_P = 0.0, max_leakage_Q = 0.0, max_leakage_D = 0.0;
    double max_leakage_rel_P = 0.0, max_leakage_rel_Q = 0.0, max_leakage_rel_D = 0.0;
    double final_energy = 0.0;
    double energy_initial = 0.0;
    double energy_max = 0.0;
    double exterior_kinetic_max = 0.0;
    double exterior_visc_max = 0.0;
};

struct SweepResult {
    std::string param;
    std::vector<SweepRow> rows;
    double slip_slope = 0.0;            // log-log LSQ slope of slip vs value
    bool slip_strictly_decreasing = false;
    bool leakage_nonincreasing = false; // per species, across all rows
    bool exterior_visc_nonincreasing = false; // the omega-weighted exterior norm
};

/// Run every value with all other settings identical (checked by hashing the
/// config dump with the swept key removed) and tabulate the limit metrics.
SweepResult parameter_sweep(const SweepSpec& spec);

/// CSV table of a sweep result (header + one row per value + slope line).
std::string sweep_csv(const SweepResult& r);

struct ConvergenceResult {
    std::string case_name;
    std::vector<int> resolutions;
    std::vector<double> errors;  // one per resolution, vs the analytic oracle
    std::vector<double> orders;  // log2(e[i]/e[i+1]) per refinement
    double observed_order = 0.0; // mean of the successive orders
};

/// Manufactured-solution verification. Cases:
///   advection-rotation : upwind transport of a Gaussian in a rigid rotation
///   diffusion-eigenmode: decaying Dirichlet sine mode of the nutrient step
///   levelset-rotation  : full rigid rotation of a circle level set
/// resolutions must be >= 3 entries, each double the last.
ConvergenceResult convergence_study(const std::string& case_name,
                                    const std::vector<int>& resolutions);

std::string convergence_csv(const ConvergenceResult& r);

} // namespace tumor

#endif
