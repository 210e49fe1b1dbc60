#pragma once

// Brute-force reference implementations used to validate the closed forms
// and the optimizers: rate-region linear programming by vertex enumeration,
// exhaustive GEE grid search, and a quantization-noise sweep for NNC.

#include <vector>

#include <Eigen/Dense>

#include "mwrc/core.hpp"
#include "mwrc/gee.hpp"

namespace mwrc::oracle {

// Polyhedral rate region {R >= 0 : coeff . R <= rhs for every constraint}.
// Constraint coefficients are 0/1 (subset-sum constraints).
struct RateRegion {
    struct Constraint {
        Eigen::Vector3d coeff;
        double rhs;
    };
    std::vector<Constraint> constraints;
};

// Cut-set region: pairwise downlink cuts and per-user uplink cuts.
RateRegion outer_bound_region(const SymmetricChannel& ch);

// Decode-and-forward: all seven multiple-access subset constraints at the
// relay plus the pairwise downlink constraints.
RateRegion df_region(const SymmetricChannel& ch);

// AF with simultaneous decoding: single and pairwise constraints of the
// equivalent two-hop channel.
RateRegion af_snd_region(const SymmetricChannel& ch);

// NNC region for a fixed quantization noise q0 > 0. Pairwise constraints
// can have negative right-hand sides for very small q0; the region is then
// empty (lp_max_sum_rate throws DegenerateRegionError).
RateRegion nnc_region(const SymmetricChannel& ch, double q0);

// Maximize R1 + R2 + R3 over the region by enumerating all vertices
// (triples of active constraints, including nonnegativity). Throws
// DegenerateRegionError when no feasible vertex exists.
double lp_max_sum_rate(const RateRegion& region);

struct GridResult {
    gee::PowerProfile profile;
    double value = 0.0;
};

// Exhaustive GEE search on a grid_n x grid_n power grid including both
// boundaries. Deterministic: first maximizer in row-major order wins.
GridResult grid_search_gee(const gee::RateObjective& obj, const gee::PowerCost& cost,
                           const PowerLimits& limits, int grid_n = 1001);

struct Q0SweepResult {
    double best_q0 = 0.0;
    double best_sum_rate = 0.0;
};

// Evaluate the NNC region's LP sum rate over a grid of quantization noise
// values (empty regions count as rate zero) and report the best point.
Q0SweepResult nnc_q0_sweep(const SymmetricChannel& ch, const std::vector<double>& q0_grid);

}  // namespace mwrc::oracle
