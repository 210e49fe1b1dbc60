// Command-line front end: SNR sweeps (rates, cooperative GEE, power-control
// game, board-to-board hardware model) written as CSV plus a companion
// matplotlib script, and a self-check runner.
//
// Exit codes: 0 success, 1 failed checks or runtime failure, 2 usage errors.

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "mwrc/sweep.hpp"
#include "mwrc/verify.hpp"

namespace {

using mwrc::SchemeId;
using mwrc::sweep::SweepConfig;

std::vector<SchemeId> parse_schemes(const std::vector<std::string>& names) {
    std::vector<SchemeId> out;
    for (const auto& n : names) {
        const auto id = mwrc::scheme_from_name(n);
        if (!id) {
            throw CLI::ValidationError("schemes", "unknown scheme '" + n +
                                                      "' (outer_bound, df, nnc, af_snd, "
                                                      "af_ian)");
        }
        out.push_back(*id);
    }
    return out;
}

void add_range_options(CLI::App* cmd, mwrc::sweep::SnrRange& range) {
    cmd->add_option("--start-db", range.start_db, "Sweep start [dB]")
        ->capture_default_str();
    cmd->add_option("--stop-db", range.stop_db, "Sweep stop, inclusive [dB]")
        ->capture_default_str();
    cmd->add_option("--step-db", range.step_db, "Sweep step [dB]")
        ->check(CLI::PositiveNumber)
        ->capture_default_str();
}

int write_outputs(const std::string& out_dir, const std::string& name,
                  const mwrc::sweep::CsvDocument& doc) {
    namespace fs = std::filesystem;
    std::error_code ec;
    fs::create_directories(out_dir, ec);  // best effort; open() reports failure

    const fs::path csv_path = fs::path(out_dir) / name;
    {
        std::ofstream out(csv_path);
        if (!out) {
            std::cerr << "error: cannot write " << csv_path.string() << "\n";
            return 2;
        }
        doc.write(out);
    }
    const fs::path plot_path = fs::path(out_dir) / (name + ".plot.py");
    {
        std::ofstream out(plot_path);
        if (!out) {
            std::cerr << "error: cannot write " << plot_path.string() << "\n";
            return 2;
        }
        out << mwrc::sweep::plot_script_for(name, doc);
    }
    std::cout << "wrote " << csv_path.string() << "\n";
    std::cout << "wrote " << plot_path.string() << " (python3 " << plot_path.string()
              << " renders a png)\n";
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{
        "Symmetric three-user relay network: sum rates, energy efficiency and "
        "competitive power control"};
    app.require_subcommand(1);
    app.set_config("--config", "", "Read options from a key=value file (flags win)");

    std::string out_dir = ".";
    app.add_option("--out-dir", out_dir, "Directory for generated files")
        ->envname("MWRC_OUT_DIR")
        ->capture_default_str();

    // ---- rates ----
    SweepConfig rates_cfg;
    rates_cfg.range = {-10.0, 40.0, 0.5};
    std::vector<std::string> rates_schemes = {"outer_bound", "df", "nnc", "af_snd",
                                              "af_ian"};
    std::string rates_out = "rates.csv";
    auto* rates = app.add_subcommand("rates", "Sum-rate sweep over the common SNR");
    add_range_options(rates, rates_cfg.range);
    rates->add_option("--schemes", rates_schemes, "Schemes to evaluate")
        ->delimiter(',')
        ->capture_default_str();
    rates->add_option("--noise-w", rates_cfg.noise_w, "Noise power at every node [W]")
        ->check(CLI::PositiveNumber)
        ->capture_default_str();
    rates->add_option("--bandwidth-factor", rates_cfg.bandwidth_factor,
                      "Scale rates by this factor (e.g. a bandwidth in Hz)")
        ->capture_default_str();
    rates->add_option("--threads", rates_cfg.threads, "Worker threads (0 = auto)")
        ->capture_default_str();
    rates->add_option("--out", rates_out, "Output CSV name")->capture_default_str();

    // ---- gee-coop ----
    SweepConfig coop_cfg;
    coop_cfg.range = {0.0, 30.0, 0.5};
    std::vector<std::string> coop_schemes = {"outer_bound", "df", "nnc", "af_snd",
                                             "af_ian"};
    std::string coop_solver = "both";
    std::string coop_out = "gee_coop.csv";
    auto* coop = app.add_subcommand(
        "gee-coop", "Cooperative energy-efficiency sweep (power budget = SNR * noise)");
    add_range_options(coop, coop_cfg.range);
    coop->add_option("--schemes", coop_schemes, "Schemes to evaluate")
        ->delimiter(',')
        ->capture_default_str();
    coop->add_option("--noise-w", coop_cfg.noise_w, "Noise power at every node [W]")
        ->check(CLI::PositiveNumber)
        ->capture_default_str();
    coop->add_option("--phi", coop_cfg.phi, "Source power scaling in the cost")
        ->capture_default_str();
    coop->add_option("--psi", coop_cfg.psi, "Relay power scaling in the cost")
        ->capture_default_str();
    coop->add_option("--p-c", coop_cfg.p_c, "Total static circuit power [W]")
        ->check(CLI::PositiveNumber)
        ->capture_default_str();
    coop->add_option("--solver", coop_solver,
                     "Solver for single-ratio schemes: alternating | monotonic | both")
        ->check(CLI::IsMember({"alternating", "monotonic", "both"}))
        ->capture_default_str();
    coop->add_option("--bandwidth-factor", coop_cfg.bandwidth_factor,
                     "Scale rates and GEE by this factor")
        ->capture_default_str();
    coop->add_option("--threads", coop_cfg.threads, "Worker threads (0 = auto)")
        ->capture_default_str();
    coop->add_option("--out", coop_out, "Output CSV name")->capture_default_str();

    // ---- game ----
    SweepConfig game_cfg;
    game_cfg.range = {0.0, 30.0, 1.0};
    std::vector<std::string> game_schemes = {"df", "nnc", "af_snd", "af_ian"};
    std::string game_out = "game.csv";
    auto* game = app.add_subcommand(
        "game", "Competitive power control: equilibria vs the cooperative optimum");
    add_range_options(game, game_cfg.range);
    game->add_option("--schemes", game_schemes, "Schemes to evaluate")
        ->delimiter(',')
        ->capture_default_str();
    game->add_option("--noise-w", game_cfg.noise_w, "Noise power at every node [W]")
        ->check(CLI::PositiveNumber)
        ->capture_default_str();
    game->add_option("--phi", game_cfg.phi, "Source power scaling (cooperative cost)")
        ->capture_default_str();
    game->add_option("--psi", game_cfg.psi, "Relay power scaling (cooperative cost)")
        ->capture_default_str();
    game->add_option("--p-c", game_cfg.p_c, "Total static circuit power [W]")
        ->check(CLI::PositiveNumber)
        ->capture_default_str();
    game->add_option("--p-c-s", game_cfg.p_c_s, "Static power in the sources' utility [W]")
        ->check(CLI::PositiveNumber)
        ->capture_default_str();
    game->add_option("--p-c-r", game_cfg.p_c_r, "Static power in the relay's utility [W]")
        ->check(CLI::PositiveNumber)
        ->capture_default_str();
    game->add_option("--relay-init", game_cfg.game_relay_inits,
                     "Starting relay powers for best-response dynamics [W] "
                     "(default: the relay power cap)")
        ->delimiter(',');
    game->add_option("--bandwidth-factor", game_cfg.bandwidth_factor,
                     "Scale rates, GEE and utilities by this factor")
        ->capture_default_str();
    game->add_option("--threads", game_cfg.threads, "Worker threads (0 = auto)")
        ->capture_default_str();
    game->add_option("--out", game_out, "Output CSV name")->capture_default_str();

    // ---- b2b ----
    SweepConfig b2b_cfg;
    b2b_cfg.range = {0.0, 50.0, 1.0};
    b2b_cfg.cost_source = mwrc::sweep::CostSource::BoardToBoard;
    b2b_cfg.noise_source = mwrc::sweep::NoiseSource::Thermal;
    b2b_cfg.pessimistic_nnc = true;
    std::vector<std::string> b2b_schemes = {"df", "nnc", "af_snd", "af_ian"};
    std::string b2b_solver = "alternating";
    std::string b2b_out = "b2b.csv";
    auto* b2b = app.add_subcommand(
        "b2b", "Board-to-board link: per-scheme hardware power costs, thermal noise");
    add_range_options(b2b, b2b_cfg.range);
    b2b->add_option("--schemes", b2b_schemes, "Schemes to evaluate")
        ->delimiter(',')
        ->capture_default_str();
    b2b->add_option("--gain-db", b2b_cfg.link.gain_db, "End-to-end channel gain [dB]")
        ->capture_default_str();
    b2b->add_option("--bandwidth-hz", b2b_cfg.link.bandwidth_hz, "Bandwidth [Hz]")
        ->check(CLI::PositiveNumber)
        ->capture_default_str();
    b2b->add_option("--temperature-k", b2b_cfg.link.temperature_k, "Noise temperature [K]")
        ->check(CLI::PositiveNumber)
        ->capture_default_str();
    b2b->add_flag("--pessimistic-nnc,!--no-pessimistic-nnc", b2b_cfg.pessimistic_nnc,
                  "Also emit the pessimistic NNC costing as its own series")
        ->capture_default_str();
    b2b->add_option("--solver", b2b_solver,
                    "Solver for single-ratio schemes: alternating | monotonic | both")
        ->check(CLI::IsMember({"alternating", "monotonic", "both"}))
        ->capture_default_str();
    b2b->add_option("--bandwidth-factor", b2b_cfg.bandwidth_factor,
                    "Scale rates and GEE by this factor")
        ->capture_default_str();
    b2b->add_option("--threads", b2b_cfg.threads, "Worker threads (0 = auto)")
        ->capture_default_str();
    b2b->add_option("--out", b2b_out, "Output CSV name")->capture_default_str();

    // ---- verify ----
    int verify_only = 0;
    auto* verify = app.add_subcommand("verify", "Run the numbered self-checks");
    verify->add_option("--only", verify_only, "Run a single check (1..11)")
        ->check(CLI::Range(1, 11));

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    const auto solver_from = [](const std::string& s) {
        if (s == "alternating") return mwrc::sweep::GeeSolver::Alternating;
        if (s == "monotonic") return mwrc::sweep::GeeSolver::Monotonic;
        return mwrc::sweep::GeeSolver::Both;
    };

    try {
        if (rates->parsed()) {
            rates_cfg.schemes = parse_schemes(rates_schemes);
            return write_outputs(out_dir, rates_out,
                                 mwrc::sweep::run_rates_sweep(rates_cfg));
        }
        if (coop->parsed()) {
            coop_cfg.schemes = parse_schemes(coop_schemes);
            coop_cfg.solver = solver_from(coop_solver);
            return write_outputs(out_dir, coop_out,
                                 mwrc::sweep::run_gee_coop_sweep(coop_cfg));
        }
        if (game->parsed()) {
            game_cfg.schemes = parse_schemes(game_schemes);
            return write_outputs(out_dir, game_out,
                                 mwrc::sweep::run_game_sweep(game_cfg));
        }
        if (b2b->parsed()) {
            b2b_cfg.schemes = parse_schemes(b2b_schemes);
            b2b_cfg.solver = solver_from(b2b_solver);
            return write_outputs(out_dir, b2b_out,
                                 mwrc::sweep::run_gee_coop_sweep(b2b_cfg));
        }
        if (verify->parsed()) {
            std::vector<mwrc::verify::CheckResult> results;
            if (verify_only > 0) {
                results.push_back(mwrc::verify::run_check(verify_only));
            } else {
                results = mwrc::verify::run_all_checks();
            }
            int failed = 0;
            for (const auto& r : results) {
                std::cout << mwrc::verify::format_result(r) << "\n";
                if (!r.passed) ++failed;
            }
            std::cout << (results.size() - failed) << "/" << results.size()
                      << " checks passed\n";
            return failed == 0 ? 0 : 1;
        }
    } catch (const CLI::ValidationError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 2;
}
