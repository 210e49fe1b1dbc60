#pragma once

// Competitive power control between the (symmetric) sources and the relay.
// Each side maximizes its own energy efficiency,
//     u_s = R(p_s, p_r) / (p_s + p_c_s),   u_r = R(p_s, p_r) / (p_r + p_c_r),
// over its own transmit power. Best responses are unique and monotone in
// the opponent's power, so best-response dynamics converge to a Nash
// equilibrium; the all-zero profile is always an equilibrium as well.

#include <variant>
#include <vector>

#include "mwrc/core.hpp"
#include "mwrc/gee.hpp"

namespace mwrc::game {

struct GameSpec {
    SchemeId scheme;
    std::variant<gee::Gee1Params, gee::Gee2Params> rate_params;
    double n_s = 1.0, n_r = 1.0;  // consumed by family-1 rate terms
    gee::PowerCost cost;
    PowerLimits limits;
};

GameSpec make_game_spec(SchemeId id, double n_s, double n_r,
                        const gee::PowerCost& cost, const PowerLimits& limits);

double rate_at(const GameSpec& spec, const gee::PowerProfile& p);
std::pair<double, double> utilities_at(const GameSpec& spec, const gee::PowerProfile& p);

// Best response of a source to the relay power p_r (both sources move
// together by symmetry). Zero opponent power forces a zero best response.
// For min-rate schemes the response also never exceeds the power at which
// the own capacity term stops binding. Throws BracketFailureError if the
// stationarity root cannot be bracketed below 2^60 times the power cap.
double br_sources(const GameSpec& spec, double p_r);

// Best response of the relay to the common source power p_s.
double br_relay(const GameSpec& spec, double p_s);

struct BrdStep {
    double p_s = 0.0, p_r = 0.0;
    double u_s = 0.0, u_r = 0.0;
};

struct BrdTrace {
    std::vector<BrdStep> steps;  // one entry per completed round
    bool converged = false;
    int iterations = 0;  // rounds played
};

// Best-response dynamics, sources move first: p_r starts at p_r_init.
BrdTrace brd_from_relay_power(const GameSpec& spec, double p_r_init,
                              double eps = 1e-9, int max_iter = 1000);

// Best-response dynamics, relay moves first: p_s starts at p_s_init.
BrdTrace brd_from_source_power(const GameSpec& spec, double p_s_init,
                               double eps = 1e-9, int max_iter = 1000);

// A profile is an equilibrium when each side's power is within tol of its
// best response, or when its utility is within tol of the best-response
// utility (covers flat regions).
bool is_nash(const GameSpec& spec, const gee::PowerProfile& p, double tol = 1e-6);

}  // namespace mwrc::game
