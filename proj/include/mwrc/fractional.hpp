#pragma once

// Fractional programming: a generic Dinkelbach driver plus the two
// cooperative GEE maximizers built on it. maximize_gee1 reduces the min-rate
// objective to one dimension and is globally optimal; alternating_gee2
// climbs the two coordinates of the single-ratio objective in turn and
// converges to a stationary point (its value is certified against the
// global solver in the monotonic module's tests).

#include <functional>
#include <optional>
#include <vector>

#include "mwrc/core.hpp"
#include "mwrc/gee.hpp"

namespace mwrc::fractional {

struct DinkelbachResult {
    double x_star = 0.0;
    double lambda_star = 0.0;
    int iterations = 0;  // number of inner maximizations performed
    bool converged = false;
    std::vector<double> lambdas;  // lambda after each inner maximization
};

struct DinkelbachOptions {
    double lambda0 = 0.0;
    double eps = 1e-9;  // stop when f(x) - lambda g(x) <= eps
    int max_iter = 100;
};

// Maximize f(x)/g(x) with g > 0. inner(lambda) must return an argmax of
// f(x) - lambda g(x) over the feasible set. Throws NonConvergenceError if
// the ratio has not settled after max_iter inner solves (the update is
// superlinear, so the default cap is generous).
template <class F, class G, class InnerMax>
DinkelbachResult dinkelbach(F&& f, G&& g, InnerMax&& inner,
                            const DinkelbachOptions& opt = {}) {
    DinkelbachResult res;
    double lambda = opt.lambda0;
    for (int it = 0; it < opt.max_iter; ++it) {
        const double x = inner(lambda);
        const double fx = f(x);
        const double gx = g(x);
        if (!(gx > 0.0)) {
            throw std::domain_error("dinkelbach: denominator must be positive");
        }
        res.iterations = it + 1;
        const double next = fx / gx;
        res.lambdas.push_back(next);
        if (fx - lambda * gx <= opt.eps) {
            res.x_star = x;
            res.lambda_star = next;
            res.converged = true;
            return res;
        }
        lambda = next;
        res.x_star = x;
        res.lambda_star = lambda;
    }
    throw NonConvergenceError("dinkelbach: iteration limit reached");
}

// Golden-section search for the maximum of a unimodal function on [lo, hi].
// Returns the argmax located to within x_tol.
template <class F>
double golden_section_max(F&& f, double lo, double hi, double x_tol = 1e-10) {
    static const double kInvPhi = (std::sqrt(5.0) - 1.0) / 2.0;
    double a = lo, b = hi;
    double x1 = b - kInvPhi * (b - a);
    double x2 = a + kInvPhi * (b - a);
    double f1 = f(x1), f2 = f(x2);
    while (b - a > x_tol) {
        if (f1 < f2) {
            a = x1;
            x1 = x2;
            f1 = f2;
            x2 = a + kInvPhi * (b - a);
            f2 = f(x2);
        } else {
            b = x2;
            x2 = x1;
            f2 = f1;
            x1 = b - kInvPhi * (b - a);
            f1 = f(x1);
        }
    }
    return 0.5 * (a + b);
}

struct SolveReport {
    gee::PowerProfile profile;
    double gee = 0.0;
    double rate = 0.0;
    int iterations = 0;
    bool converged = false;
    // Objective value after each outer step; nondecreasing for the
    // alternating solver, the lambda sequence for the 1-D solver.
    std::vector<double> trajectory;
};

// Global GEE maximizer for min-rate (family 1) objectives. Both capacity
// terms bind at the optimum unless a power cap intervenes, so the problem
// reduces to one dimension: the target rate t with
//   p_r(t) = (n_s/alpha1)(2^{t/a1} - 1),  p_s(t) = (n_r/alpha2)(2^{t/a2} - 1)
// maximized over t in [0, t_max] by Dinkelbach with a golden-section inner
// step.
SolveReport maximize_gee1(const gee::Gee1Params& q, const gee::PowerCost& cost,
                          const PowerLimits& limits, double n_s, double n_r,
                          double eps = 1e-9);

// Alternating maximization for single-ratio (family 2) objectives: fix p_r
// and maximize over p_s by Dinkelbach (the restricted numerator is concave),
// then the reverse, until the objective gain drops below eps. p_r_init
// defaults to the relay power cap. Starting the relay at exactly zero pins
// the rate at zero, so the solver then reports the all-zero profile.
SolveReport alternating_gee2(const gee::Gee2Params& q, const gee::PowerCost& cost,
                             const PowerLimits& limits, double eps = 1e-9,
                             std::optional<double> p_r_init = std::nullopt);

}  // namespace mwrc::fractional
