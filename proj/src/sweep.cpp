#include "mwrc/sweep.hpp"

#include <atomic>
#include <cstdio>
#include <exception>
#include <mutex>
#include <ostream>
#include <sstream>
#include <thread>

#include "mwrc/fractional.hpp"
#include "mwrc/game.hpp"
#include "mwrc/monotonic.hpp"
#include "mwrc/rates.hpp"

namespace mwrc::sweep {

namespace {

std::string num(double v) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.12g", v);
    return buf;
}

using Row = std::vector<std::string>;

// Evaluate fn(i) for i in [0, n) on a small thread pool; any exception is
// rethrown on the calling thread.
template <class Fn>
void parallel_for(int n, int threads_cfg, Fn&& fn) {
    int threads = threads_cfg > 0 ? threads_cfg
                                  : static_cast<int>(std::thread::hardware_concurrency());
    threads = std::max(1, std::min(threads, n));
    if (threads == 1) {
        for (int i = 0; i < n; ++i) fn(i);
        return;
    }
    std::atomic<int> next{0};
    std::exception_ptr error;
    std::mutex error_mutex;
    std::vector<std::thread> pool;
    pool.reserve(threads);
    for (int t = 0; t < threads; ++t) {
        pool.emplace_back([&] {
            for (int i = next.fetch_add(1); i < n; i = next.fetch_add(1)) {
                try {
                    fn(i);
                } catch (...) {
                    std::lock_guard<std::mutex> lock(error_mutex);
                    if (!error) error = std::current_exception();
                }
            }
        });
    }
    for (auto& th : pool) th.join();
    if (error) std::rethrow_exception(error);
}

double resolve_noise(const SweepConfig& cfg) {
    if (cfg.noise_source == NoiseSource::Thermal) {
        return power_model::effective_noise_w(cfg.link);
    }
    if (!(cfg.noise_w > 0.0)) {
        throw std::invalid_argument("sweep: noise_w must be > 0");
    }
    return cfg.noise_w;
}

gee::PowerCost cost_for(const SweepConfig& cfg, SchemeId id, bool pessimistic) {
    if (cfg.cost_source == CostSource::Manual) {
        return gee::PowerCost(cfg.phi, cfg.psi, cfg.p_c, cfg.p_c_s, cfg.p_c_r);
    }
    // The outer bound is not a real transceiver chain; price it like DF so
    // it can still serve as a reference curve (flagged in the metadata).
    const SchemeId hw = (id == SchemeId::OuterBound) ? SchemeId::Df : id;
    return power_model::scheme_power_profile(hw, pessimistic);
}

std::vector<std::string> base_metadata(const SweepConfig& cfg, std::string_view mode,
                                       double noise) {
    std::vector<std::string> md;
    md.push_back(std::string("mode=") + std::string(mode));
    md.push_back("snr_db is the common per-link SNR: p/n with p_s=p_r=p, n_s=n_r=n");
    std::string schemes = "schemes=";
    for (size_t i = 0; i < cfg.schemes.size(); ++i) {
        if (i) schemes += "|";
        schemes += scheme_name(cfg.schemes[i]);
    }
    md.push_back(schemes);
    md.push_back("range_db=" + num(cfg.range.start_db) + ":" + num(cfg.range.step_db) +
                 ":" + num(cfg.range.stop_db));
    md.push_back("noise_w=" + num(noise));
    if (cfg.noise_source == NoiseSource::Thermal) {
        md.push_back("noise_source=thermal gain_db=" + num(cfg.link.gain_db) +
                     " bandwidth_hz=" + num(cfg.link.bandwidth_hz) +
                     " temperature_k=" + num(cfg.link.temperature_k));
    }
    if (cfg.cost_source == CostSource::Manual) {
        md.push_back("cost=manual phi=" + num(cfg.phi) + " psi=" + num(cfg.psi) +
                     " p_c=" + num(cfg.p_c) + " p_c_s=" + num(cfg.p_c_s) +
                     " p_c_r=" + num(cfg.p_c_r));
    } else {
        md.push_back("cost=board_to_board (per-scheme circuit power; "
                     "outer_bound priced with the df chain)");
    }
    if (cfg.bandwidth_factor != 1.0) {
        md.push_back("rates and gee scaled by bandwidth_factor=" +
                     num(cfg.bandwidth_factor));
    }
    return md;
}

Row make_row(double snr_db, std::string_view scheme, std::string_view solver,
             std::string sum_rate, std::string gee, std::string p_s, std::string p_r,
             std::string iterations, std::string branch, std::string u_s,
             std::string u_r) {
    return Row{num(snr_db),       std::string(scheme), std::string(solver),
               std::move(sum_rate), std::move(gee),     std::move(p_s),
               std::move(p_r),      std::move(iterations), std::move(branch),
               std::move(u_s),      std::move(u_r)};
}

}  // namespace

std::vector<double> SnrRange::points() const {
    if (!(step_db > 0.0)) {
        throw std::invalid_argument("SnrRange: step_db must be > 0");
    }
    if (stop_db < start_db) {
        throw std::invalid_argument("SnrRange: stop_db must be >= start_db");
    }
    std::vector<double> pts;
    for (int i = 0;; ++i) {
        const double x = start_db + i * step_db;
        if (x > stop_db + 0.5 * step_db) break;
        pts.push_back(x);
    }
    return pts;
}

std::vector<std::string> csv_header() {
    return {"snr_db", "scheme", "solver",     "sum_rate_bps_hz", "gee",
            "p_s_w",  "p_r_w",  "iterations", "branch",          "u_s",
            "u_r"};
}

void CsvDocument::write(std::ostream& os) const {
    for (const auto& m : metadata) {
        os << "# " << m << "\n";
    }
    const auto join = [&](const std::vector<std::string>& cells) {
        for (size_t i = 0; i < cells.size(); ++i) {
            if (i) os << ",";
            os << cells[i];
        }
        os << "\n";
    };
    join(header);
    for (const auto& r : rows) {
        join(r);
    }
}

std::string CsvDocument::to_string() const {
    std::ostringstream ss;
    write(ss);
    return ss.str();
}

CsvDocument run_rates_sweep(const SweepConfig& cfg) {
    const double n = resolve_noise(cfg);
    const double bf = cfg.bandwidth_factor;
    const auto pts = cfg.range.points();

    std::vector<std::vector<Row>> per_point(pts.size());
    parallel_for(static_cast<int>(pts.size()), cfg.threads, [&](int i) {
        const double p = snr_db_to_linear(pts[i]) * n;
        const SymmetricChannel ch(p, p, n, n);
        for (const SchemeId id : cfg.schemes) {
            const auto sr = rates::sum_rate_for(id, ch);
            const std::string branch =
                sr.active_branch ? std::string(rates::branch_name(*sr.active_branch)) : "";
            per_point[i].push_back(make_row(pts[i], scheme_name(id), "",
                                            num(sr.value * bf), "", num(p), num(p), "",
                                            branch, "", ""));
        }
    });

    CsvDocument doc;
    doc.metadata = base_metadata(cfg, "rates", n);
    doc.header = csv_header();
    for (auto& rows : per_point) {
        for (auto& r : rows) doc.rows.push_back(std::move(r));
    }
    return doc;
}

namespace {

// One cooperative GEE row; family-1 schemes use the exact one-dimensional
// solver, family-2 schemes the requested solver(s).
void coop_rows_for(const SweepConfig& cfg, double snr_db, double n, SchemeId id,
                   std::string_view label, bool pessimistic, std::vector<Row>& out) {
    const double p_max = snr_db_to_linear(snr_db) * n;
    const PowerLimits limits(p_max, p_max);
    const gee::PowerCost cost = cost_for(cfg, id, pessimistic);
    const double bf = cfg.bandwidth_factor;

    const auto push = [&](std::string_view solver, const fractional::SolveReport& rep) {
        out.push_back(make_row(snr_db, label, solver, num(rep.rate * bf),
                               num(rep.gee * bf), num(rep.profile.p_s),
                               num(rep.profile.p_r), std::to_string(rep.iterations), "",
                               "", ""));
    };

    if (id == SchemeId::OuterBound || id == SchemeId::Df) {
        const auto q = gee::gee1_params_for(id);
        push("dinkelbach_1d", fractional::maximize_gee1(q, cost, limits, n, n));
        return;
    }
    const auto q = gee::gee2_params_for(id, n, n);
    if (cfg.solver == GeeSolver::Alternating || cfg.solver == GeeSolver::Both) {
        push("alternating", fractional::alternating_gee2(q, cost, limits));
    }
    if (cfg.solver == GeeSolver::Monotonic || cfg.solver == GeeSolver::Both) {
        push("monotonic", monotonic::gee2_global(q, cost, limits));
    }
}

}  // namespace

CsvDocument run_gee_coop_sweep(const SweepConfig& cfg) {
    const double n = resolve_noise(cfg);
    const auto pts = cfg.range.points();

    std::vector<std::vector<Row>> per_point(pts.size());
    parallel_for(static_cast<int>(pts.size()), cfg.threads, [&](int i) {
        for (const SchemeId id : cfg.schemes) {
            coop_rows_for(cfg, pts[i], n, id, scheme_name(id), false, per_point[i]);
            if (id == SchemeId::Nnc && cfg.cost_source == CostSource::BoardToBoard &&
                cfg.pessimistic_nnc) {
                coop_rows_for(cfg, pts[i], n, id, "nnc_pessimistic", true, per_point[i]);
            }
        }
    });

    CsvDocument doc;
    doc.metadata = base_metadata(cfg, "gee_coop", n);
    if (cfg.pessimistic_nnc && cfg.cost_source == CostSource::BoardToBoard) {
        doc.metadata.push_back(
            "nnc_pessimistic series: one decoder per decoded message at every node");
    }
    doc.header = csv_header();
    for (auto& rows : per_point) {
        for (auto& r : rows) doc.rows.push_back(std::move(r));
    }
    return doc;
}

CsvDocument run_game_sweep(const SweepConfig& cfg) {
    const double n = resolve_noise(cfg);
    const double bf = cfg.bandwidth_factor;
    const auto pts = cfg.range.points();

    // The cooperative reference row uses one solver per scheme so that the
    // series stays unambiguous.
    SweepConfig coop_cfg = cfg;
    coop_cfg.solver = GeeSolver::Alternating;

    std::vector<std::vector<Row>> per_point(pts.size());
    parallel_for(static_cast<int>(pts.size()), cfg.threads, [&](int i) {
        const double p_max = snr_db_to_linear(pts[i]) * n;
        const PowerLimits limits(p_max, p_max);
        for (const SchemeId id : cfg.schemes) {
            const gee::PowerCost cost = cost_for(cfg, id, false);
            const auto spec = game::make_game_spec(id, n, n, cost, limits);

            std::vector<double> inits = cfg.game_relay_inits;
            if (inits.empty()) inits.push_back(limits.p_r_max);
            for (const double init : inits) {
                const double pr0 = std::clamp(init, 0.0, limits.p_r_max);
                const auto trace = game::brd_from_relay_power(spec, pr0);
                const auto& last = trace.steps.back();
                const gee::PowerProfile ne{last.p_s, last.p_r};
                const double rate = game::rate_at(spec, ne);
                const double ee = rate / gee::consumed_power(cost, ne);
                per_point[i].push_back(make_row(
                    pts[i], scheme_name(id), "brd[p_r0=" + num(pr0) + "]", num(rate * bf),
                    num(ee * bf), num(ne.p_s), num(ne.p_r), std::to_string(trace.iterations),
                    "", num(last.u_s * bf), num(last.u_r * bf)));
            }

            coop_rows_for(coop_cfg, pts[i], n, id, scheme_name(id), false, per_point[i]);
            auto& coop = per_point[i].back();
            coop[2] = "cooperative[" + coop[2] + "]";
        }
    });

    CsvDocument doc;
    doc.metadata = base_metadata(cfg, "game", n);
    doc.metadata.push_back(
        "brd rows: best-response dynamics from relay power p_r0, sources move first; "
        "u_s/u_r are per-player efficiencies");
    doc.header = csv_header();
    for (auto& rows : per_point) {
        for (auto& r : rows) doc.rows.push_back(std::move(r));
    }
    return doc;
}

std::string plot_script_for(const std::string& csv_filename, const CsvDocument& doc) {
    std::string mode = "sweep";
    for (const auto& m : doc.metadata) {
        if (m.rfind("mode=", 0) == 0) mode = m.substr(5);
    }
    std::ostringstream py;
    py << "#!/usr/bin/env python3\n"
       << "\"\"\"Plot " << csv_filename << " (" << mode << " sweep).\"\"\"\n"
       << "import csv\n"
       << "from collections import defaultdict\n\n"
       << "import matplotlib\n"
       << "matplotlib.use(\"Agg\")\n"
       << "import matplotlib.pyplot as plt\n\n"
       << "CSV = \"" << csv_filename << "\"\n\n"
       << "with open(CSV) as fh:\n"
       << "    lines = [ln for ln in fh if ln.strip() and not ln.startswith(\"#\")]\n"
       << "series = defaultdict(list)\n"
       << "y_label = \"sum rate [bit/s/Hz]\"\n"
       << "for rec in csv.DictReader(lines):\n"
       << "    key = rec[\"scheme\"] + (\"/\" + rec[\"solver\"] if rec[\"solver\"] else \"\")\n"
       << "    y = rec[\"gee\"] or rec[\"sum_rate_bps_hz\"]\n"
       << "    if rec[\"gee\"]:\n"
       << "        y_label = \"energy efficiency [bit/s/Hz/W]\"\n"
       << "    if y:\n"
       << "        series[key].append((float(rec[\"snr_db\"]), float(y)))\n\n"
       << "plt.figure(figsize=(7.0, 4.5))\n"
       << "for key in sorted(series):\n"
       << "    pts = sorted(series[key])\n"
       << "    plt.plot([p[0] for p in pts], [p[1] for p in pts], marker=\"o\",\n"
       << "             markersize=2.5, label=key)\n"
       << "plt.xlabel(\"SNR [dB]\")\n"
       << "plt.ylabel(y_label)\n"
       << "plt.grid(True, alpha=0.4)\n"
       << "plt.legend(fontsize=8)\n"
       << "plt.tight_layout()\n"
       << "plt.savefig(CSV + \".png\", dpi=150)\n"
       << "print(\"wrote\", CSV + \".png\")\n";
    return py.str();
}

}  // namespace mwrc::sweep
