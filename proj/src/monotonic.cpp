#include "mwrc/monotonic.hpp"

#include <algorithm>
#include <cmath>
#include <queue>
#include <vector>

namespace mwrc::monotonic {

namespace {

constexpr double kGoldenTol = 1e-10;
// Slack added to every interval bound so that the certificate survives the
// finite tolerance of the one-dimensional solves.
constexpr double kBoundSafety = 1e-11;

struct Node {
    double ub;    // certified upper bound for F on this relay-power interval
    double lo;    // relay power interval [lo, hi]
    double hi;
    double v_hi;  // exact F at (ps_hi, hi), the restricted optimum at p_r = hi
    double ps_hi;
};

struct NodeOrder {
    bool operator()(const Node& a, const Node& b) const {
        if (a.ub != b.ub) return a.ub < b.ub;  // max-heap on the bound
        if (a.lo != b.lo) return a.lo > b.lo;  // lexicographic tie-break
        return a.hi > b.hi;
    }
};

}  // namespace

InnerResult inner_subproblem_global(const gee::Gee2Params& q, const gee::PowerCost& cost,
                                    const PowerLimits& limits, double lambda,
                                    const MonotonicOptions& opt) {
    const auto F = [&](double ps, double pr) {
        return gee2_rate(q, {ps, pr}) - lambda * (cost.phi * ps + cost.psi * pr + cost.p_c);
    };

    InnerResult res;

    if (lambda <= 0.0) {
        // The objective is increasing in both powers; full power is optimal.
        res.profile = {limits.p_s_max, limits.p_r_max};
        res.value = F(limits.p_s_max, limits.p_r_max);
        return res;
    }

    // Restricted optimum over the source power at a fixed relay power; the
    // restriction is concave.
    const auto best_source = [&](double pr) {
        const double ps = fractional::golden_section_max(
            [&](double x) { return F(x, pr); }, 0.0, limits.p_s_max, kGoldenTol);
        return std::pair<double, double>(F(ps, pr), ps);
    };

    double best = F(0.0, 0.0);
    res.profile = {0.0, 0.0};

    const auto consider = [&](double value, double ps, double pr) {
        if (value > best) {
            best = value;
            res.profile = {ps, pr};
        }
    };

    std::priority_queue<Node, std::vector<Node>, NodeOrder> heap;
    {
        const auto [v, ps] = best_source(limits.p_r_max);
        consider(v, ps, limits.p_r_max);
        heap.push(Node{v + lambda * cost.psi * limits.p_r_max + kBoundSafety, 0.0,
                       limits.p_r_max, v, ps});
    }

    while (!heap.empty()) {
        const Node node = heap.top();
        if (node.ub <= best + opt.eps_mono) {
            res.bound_gap = std::max(0.0, node.ub - best);
            break;
        }
        heap.pop();
        if (++res.iterations > opt.node_budget) {
            throw NonConvergenceError("inner_subproblem_global: interval budget exhausted");
        }

        const double mid = 0.5 * (node.lo + node.hi);
        // Left child needs one new restricted solve at p_r = mid; the right
        // child reuses the parent's solve at p_r = hi.
        const auto [v_mid, ps_mid] = best_source(mid);
        consider(v_mid, ps_mid, mid);

        const Node left{v_mid + lambda * cost.psi * (mid - node.lo) + kBoundSafety,
                        node.lo, mid, v_mid, ps_mid};
        const Node right{node.v_hi + lambda * cost.psi * (node.hi - mid) + kBoundSafety,
                         mid, node.hi, node.v_hi, node.ps_hi};
        if (left.ub > best + opt.eps_mono) heap.push(left);
        if (right.ub > best + opt.eps_mono) heap.push(right);
    }

    res.value = best;
    return res;
}

fractional::SolveReport gee2_global(const gee::Gee2Params& q, const gee::PowerCost& cost,
                                    const PowerLimits& limits, double eps,
                                    const MonotonicOptions& opt) {
    fractional::SolveReport rep;
    double lambda = 0.0;
    const int max_outer = 100;
    for (int it = 0; it < max_outer; ++it) {
        const InnerResult ir = inner_subproblem_global(q, cost, limits, lambda, opt);
        const double ratio = gee_value(q, ir.profile, cost);
        rep.trajectory.push_back(ratio);
        rep.iterations = it + 1;
        if (ir.value <= eps) {
            rep.profile = ir.profile;
            rep.gee = ratio;
            rep.rate = gee2_rate(q, ir.profile);
            rep.converged = true;
            return rep;
        }
        lambda = ratio;
    }
    throw NonConvergenceError("gee2_global: Dinkelbach iteration limit reached");
}

}  // namespace mwrc::monotonic
