#include "mwrc/game.hpp"

#include <algorithm>
#include <cmath>

namespace mwrc::game {

namespace {

// Root of a nondecreasing function h on [0, inf) with h(0) < 0. Brackets by
// doubling from hi0, then bisects to machine precision.
double increasing_root(const std::function<double(double)>& h, double hi0,
                       const char* who) {
    double lo = 0.0;
    double hi = hi0;
    int doublings = 0;
    while (h(hi) < 0.0) {
        hi *= 2.0;
        if (++doublings > 60) {
            throw BracketFailureError(std::string(who) +
                                      ": stationarity root exceeds 2^60 * power cap");
        }
        lo = hi / 2.0;
    }
    for (int i = 0; i < 200 && hi - lo > 1e-15 * std::max(1.0, hi); ++i) {
        const double mid = 0.5 * (lo + hi);
        (h(mid) < 0.0 ? lo : hi) = mid;
    }
    return 0.5 * (lo + hi);
}

// Family-1 best response of the player whose own capacity term is
// a_own * C(alpha_own * p / n_own), against an opponent whose term currently
// evaluates with p_opp. own_cap is the transmit power limit, p_c_own the
// static power in the player's utility denominator.
double br_family1(double a_own, double alpha_own, double n_own, double a_opp,
                  double alpha_opp, double n_opp, double p_opp, double own_cap,
                  double p_c_own) {
    if (p_opp <= 0.0) {
        return 0.0;
    }
    // Power beyond which the own term no longer binds the min-rate: utility
    // is strictly decreasing there, so the best response never exceeds it.
    const double match =
        (n_own / alpha_own) *
        (std::pow(1.0 + alpha_opp * p_opp / n_opp, a_opp / a_own) - 1.0);
    // Interior stationarity of a_own*C(alpha_own p/n_own)/(p + p_c_own):
    // (n_own/alpha_own)(1+g)ln(1+g) - p = p_c_own with g = alpha_own p/n_own.
    const auto h = [&](double p) {
        const double g = alpha_own * p / n_own;
        return (n_own / alpha_own) * (1.0 + g) * std::log1p(g) - p - p_c_own;
    };
    const double root = increasing_root(h, own_cap, "br_family1");
    return std::min({own_cap, match, root});
}

}  // namespace

GameSpec make_game_spec(SchemeId id, double n_s, double n_r,
                        const gee::PowerCost& cost, const PowerLimits& limits) {
    if (id == SchemeId::OuterBound || id == SchemeId::Df) {
        return GameSpec{id, gee::gee1_params_for(id), n_s, n_r, cost, limits};
    }
    return GameSpec{id, gee::gee2_params_for(id, n_s, n_r), n_s, n_r, cost, limits};
}

double rate_at(const GameSpec& spec, const gee::PowerProfile& p) {
    if (const auto* q1 = std::get_if<gee::Gee1Params>(&spec.rate_params)) {
        return gee::gee1_rate(*q1, spec.n_s, spec.n_r, p);
    }
    return gee::gee2_rate(std::get<gee::Gee2Params>(spec.rate_params), p);
}

std::pair<double, double> utilities_at(const GameSpec& spec, const gee::PowerProfile& p) {
    const double r = rate_at(spec, p);
    return {r / (p.p_s + spec.cost.p_c_s), r / (p.p_r + spec.cost.p_c_r)};
}

double br_sources(const GameSpec& spec, double p_r) {
    if (const auto* q1 = std::get_if<gee::Gee1Params>(&spec.rate_params)) {
        // Sources own the uplink term (a2, alpha2, n_r); the relay term
        // (a1, alpha1, n_s) is fixed by p_r.
        return br_family1(q1->a2, q1->alpha2, spec.n_r, q1->a1, q1->alpha1, spec.n_s,
                          p_r, spec.limits.p_s_max, spec.cost.p_c_s);
    }
    const auto& q = std::get<gee::Gee2Params>(spec.rate_params);
    if (p_r <= 0.0) {
        return 0.0;
    }
    // Stationarity of alpha*C(gamma)/(p_s + p_c_s) in p_s:
    // (1+gamma) ln(1+gamma) / (dgamma/dp_s) - p_s = p_c_s.
    const auto h = [&](double ps) {
        const double den = q.a * ps + q.b * p_r + q.c;
        const double g = ps * p_r / den;
        const double dg = p_r * (q.b * p_r + q.c) / (den * den);
        return (1.0 + g) * std::log1p(g) / dg - ps - spec.cost.p_c_s;
    };
    const double root = increasing_root(h, spec.limits.p_s_max, "br_sources");
    return std::min(spec.limits.p_s_max, root);
}

double br_relay(const GameSpec& spec, double p_s) {
    if (const auto* q1 = std::get_if<gee::Gee1Params>(&spec.rate_params)) {
        return br_family1(q1->a1, q1->alpha1, spec.n_s, q1->a2, q1->alpha2, spec.n_r,
                          p_s, spec.limits.p_r_max, spec.cost.p_c_r);
    }
    const auto& q = std::get<gee::Gee2Params>(spec.rate_params);
    if (p_s <= 0.0) {
        return 0.0;
    }
    const auto h = [&](double pr) {
        const double den = q.a * p_s + q.b * pr + q.c;
        const double g = p_s * pr / den;
        const double dg = p_s * (q.a * p_s + q.c) / (den * den);
        return (1.0 + g) * std::log1p(g) / dg - pr - spec.cost.p_c_r;
    };
    const double root = increasing_root(h, spec.limits.p_r_max, "br_relay");
    return std::min(spec.limits.p_r_max, root);
}

namespace {

BrdTrace run_brd(const GameSpec& spec, gee::PowerProfile p, bool sources_first,
                 double eps, int max_iter) {
    BrdTrace trace;
    double prev_u_s = -1.0, prev_u_r = -1.0;
    for (int round = 0; round < max_iter; ++round) {
        if (sources_first) {
            p.p_s = br_sources(spec, p.p_r);
            p.p_r = br_relay(spec, p.p_s);
        } else {
            p.p_r = br_relay(spec, p.p_s);
            p.p_s = br_sources(spec, p.p_r);
        }
        const auto [u_s, u_r] = utilities_at(spec, p);
        trace.steps.push_back(BrdStep{p.p_s, p.p_r, u_s, u_r});
        trace.iterations = round + 1;
        if (round > 0 && std::abs(u_s - prev_u_s) < eps && std::abs(u_r - prev_u_r) < eps) {
            trace.converged = true;
            return trace;
        }
        prev_u_s = u_s;
        prev_u_r = u_r;
    }
    // Best-response dynamics are guaranteed to converge here, so running
    // out of rounds means the parameters or the responses are broken.
    throw NonConvergenceError("brd: utilities did not settle within the round limit");
}

}  // namespace

BrdTrace brd_from_relay_power(const GameSpec& spec, double p_r_init, double eps,
                              int max_iter) {
    const double pr0 = std::clamp(p_r_init, 0.0, spec.limits.p_r_max);
    return run_brd(spec, {0.0, pr0}, /*sources_first=*/true, eps, max_iter);
}

BrdTrace brd_from_source_power(const GameSpec& spec, double p_s_init, double eps,
                               int max_iter) {
    const double ps0 = std::clamp(p_s_init, 0.0, spec.limits.p_s_max);
    return run_brd(spec, {ps0, 0.0}, /*sources_first=*/false, eps, max_iter);
}

bool is_nash(const GameSpec& spec, const gee::PowerProfile& p, double tol) {
    const double bs = br_sources(spec, p.p_r);
    const double br = br_relay(spec, p.p_s);
    if (std::abs(bs - p.p_s) <= tol && std::abs(br - p.p_r) <= tol) {
        return true;
    }
    const auto [u_s, u_r] = utilities_at(spec, p);
    const auto [u_s_best, ignored_r] = utilities_at(spec, {bs, p.p_r});
    const auto [ignored_s, u_r_best] = utilities_at(spec, {p.p_s, br});
    (void)ignored_r;
    (void)ignored_s;
    return u_s_best - u_s <= tol && u_r_best - u_r <= tol;
}

}  // namespace mwrc::game
