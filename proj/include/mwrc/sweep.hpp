#pragma once

// SNR-sweep experiment engine behind the CLI: builds CSV documents for the
// rate, cooperative-GEE, game and board-to-board experiments. Sweep points
// are evaluated concurrently; output row order is deterministic.

#include <iosfwd>
#include <string>
#include <vector>

#include "mwrc/core.hpp"
#include "mwrc/gee.hpp"
#include "mwrc/power_model.hpp"

namespace mwrc::sweep {

struct SnrRange {
    double start_db = 0.0;
    double stop_db = 30.0;
    double step_db = 1.0;

    std::vector<double> points() const;  // inclusive of stop (within half a step)
};

enum class CostSource {
    Manual,        // phi/psi and static powers given directly
    BoardToBoard,  // derived from ComponentPowers per scheme
};

enum class NoiseSource {
    Value,    // fixed noise power in watts (1.0 reproduces unit-noise plots)
    Thermal,  // k_B T B referred through the link-budget gain
};

enum class GeeSolver {
    Alternating,
    Monotonic,
    Both,
};

struct SweepConfig {
    SnrRange range;
    std::vector<SchemeId> schemes;

    CostSource cost_source = CostSource::Manual;
    double phi = 3.0, psi = 1.0, p_c = 1.0;  // manual cost (equal share per node)
    double p_c_s = 0.75, p_c_r = 0.25;       // game-side static terms, manual mode
    bool pessimistic_nnc = false;  // board-to-board: add a pessimistic NNC series

    NoiseSource noise_source = NoiseSource::Value;
    double noise_w = 1.0;
    power_model::LinkBudget link;

    GeeSolver solver = GeeSolver::Both;
    std::vector<double> game_relay_inits;  // relay starting powers; empty = cap

    double bandwidth_factor = 1.0;  // scales rates and GEE to absolute units
    int threads = 0;                // 0 = hardware concurrency
};

// CSV with '#'-prefixed metadata lines, a header row, and string cells.
struct CsvDocument {
    std::vector<std::string> metadata;
    std::vector<std::string> header;
    std::vector<std::vector<std::string>> rows;

    void write(std::ostream& os) const;
    std::string to_string() const;
};

// Column layout shared by all modes:
//   snr_db, scheme, solver, sum_rate_bps_hz, gee, p_s_w, p_r_w, iterations,
//   branch, u_s, u_r
// Cells that do not apply to a mode are left empty. u_s/u_r are the per-player
// efficiencies of game rows.
std::vector<std::string> csv_header();

CsvDocument run_rates_sweep(const SweepConfig& cfg);
CsvDocument run_gee_coop_sweep(const SweepConfig& cfg);
CsvDocument run_game_sweep(const SweepConfig& cfg);

// Python/matplotlib companion script that renders one figure from the CSV.
std::string plot_script_for(const std::string& csv_filename, const CsvDocument& doc);

}  // namespace mwrc::sweep
