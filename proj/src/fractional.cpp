#include "mwrc/fractional.hpp"

#include <algorithm>
#include <cmath>

namespace mwrc::fractional {

namespace {

// Inner Dinkelbach tolerance for coordinate updates; the outer loops
// measure their own, looser convergence on objective deltas.
constexpr double kInnerEps = 1e-12;
constexpr double kGoldenTol = 1e-10;

}  // namespace

SolveReport maximize_gee1(const gee::Gee1Params& q, const gee::PowerCost& cost,
                          const PowerLimits& limits, double n_s, double n_r,
                          double eps) {
    // Powers as functions of the common target rate t: both capacity terms
    // are driven to t, which is optimal because any slack in one term only
    // wastes power.
    const auto p_s_of = [&](double t) {
        return (n_r / q.alpha2) * (std::exp2(t / q.a2) - 1.0);
    };
    const auto p_r_of = [&](double t) {
        return (n_s / q.alpha1) * (std::exp2(t / q.a1) - 1.0);
    };
    const double t_max = std::min(q.a1 * capacity(q.alpha1 * limits.p_r_max / n_s),
                                  q.a2 * capacity(q.alpha2 * limits.p_s_max / n_r));

    const auto f = [](double t) { return t; };
    const auto g = [&](double t) {
        return cost.phi * p_s_of(t) + cost.psi * p_r_of(t) + cost.p_c;
    };
    const auto inner = [&](double lambda) {
        return golden_section_max([&](double t) { return t - lambda * g(t); }, 0.0,
                                  t_max, kGoldenTol);
    };

    DinkelbachOptions opt;
    opt.eps = eps;
    const auto din = dinkelbach(f, g, inner, opt);

    SolveReport rep;
    rep.profile.p_s = std::min(p_s_of(din.x_star), limits.p_s_max);
    rep.profile.p_r = std::min(p_r_of(din.x_star), limits.p_r_max);
    rep.rate = din.x_star;
    rep.gee = din.x_star / g(din.x_star);
    rep.iterations = din.iterations;
    rep.converged = true;
    rep.trajectory = din.lambdas;
    return rep;
}

namespace {

// Maximize gee over one power coordinate with the other held fixed. The
// restricted rate is concave in the free power, so a golden-section step
// solves each Dinkelbach subproblem exactly. Returns the maximizing power;
// if the achievable rate is identically zero the minimal power 0 wins.
double coordinate_best(const gee::Gee2Params& q, const gee::PowerCost& cost,
                       double fixed_power, bool vary_source, double p_max) {
    const auto rate_of = [&](double x) {
        const gee::PowerProfile p =
            vary_source ? gee::PowerProfile{x, fixed_power} : gee::PowerProfile{fixed_power, x};
        return gee2_rate(q, p);
    };
    const auto power_of = [&](double x) {
        return vary_source ? cost.phi * x + cost.psi * fixed_power + cost.p_c
                           : cost.phi * fixed_power + cost.psi * x + cost.p_c;
    };
    const auto inner = [&](double lambda) {
        return golden_section_max(
            [&](double x) { return rate_of(x) - lambda * power_of(x); }, 0.0, p_max,
            kGoldenTol);
    };

    DinkelbachOptions opt;
    opt.eps = kInnerEps;
    const auto din = dinkelbach(rate_of, power_of, inner, opt);
    if (rate_of(din.x_star) <= 0.0) {
        return 0.0;
    }
    return din.x_star;
}

}  // namespace

SolveReport alternating_gee2(const gee::Gee2Params& q, const gee::PowerCost& cost,
                             const PowerLimits& limits, double eps,
                             std::optional<double> p_r_init) {
    const double start_p_r =
        std::clamp(p_r_init.value_or(limits.p_r_max), 0.0, limits.p_r_max);

    const auto run = [&](double p_r0, SolveReport& rep) {
        gee::PowerProfile p{0.0, p_r0};
        double prev = -1.0;
        const int max_rounds = 2000;
        for (int round = 0; round < max_rounds; ++round) {
            p.p_s = coordinate_best(q, cost, p.p_r, /*vary_source=*/true, limits.p_s_max);
            p.p_r = coordinate_best(q, cost, p.p_s, /*vary_source=*/false, limits.p_r_max);
            const double ee = gee_value(q, p, cost);
            rep.trajectory.push_back(ee);
            rep.iterations = round + 1;
            if (round > 0 && std::abs(ee - prev) < eps) {
                rep.profile = p;
                rep.gee = ee;
                rep.rate = gee2_rate(q, p);
                rep.converged = true;
                return;
            }
            prev = ee;
        }
        throw NonConvergenceError("alternating_gee2: round limit reached");
    };

    SolveReport rep;
    run(start_p_r, rep);

    // A zero objective can only be a degenerate stationary point. When the
    // caller asked for a strictly positive relay start, restart from full
    // power rather than report it; an explicit zero start is honored.
    if (rep.gee <= 0.0 && start_p_r > 0.0) {
        SolveReport retry;
        run(limits.p_r_max, retry);
        if (retry.gee > rep.gee) {
            return retry;
        }
    }
    return rep;
}

}  // namespace mwrc::fractional
