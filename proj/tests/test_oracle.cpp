#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <random>
#include <vector>

#include "mwrc/oracle.hpp"
#include "mwrc/rates.hpp"

using namespace mwrc;
using oracle::RateRegion;

namespace {

const SymmetricChannel kTen = SymmetricChannel::completely_symmetric(10.0);

// Check feasibility of a rate triple against every constraint.
bool feasible(const RateRegion& region, const Eigen::Vector3d& r, double slack) {
    if ((r.array() < -slack).any()) return false;
    for (const auto& c : region.constraints) {
        if (c.coeff.dot(r) > c.rhs + slack) return false;
    }
    return true;
}

// Dense grid scan over the cube [0, cap]^3 for the best feasible sum.
double grid_max_sum(const RateRegion& region, double cap, int n) {
    double best = 0.0;
    for (int i = 0; i < n; ++i) {
        for (int j = 0; j < n; ++j) {
            for (int k = 0; k < n; ++k) {
                const Eigen::Vector3d r(cap * i / (n - 1), cap * j / (n - 1),
                                        cap * k / (n - 1));
                if (feasible(region, r, 1e-12)) {
                    best = std::max(best, r.sum());
                }
            }
        }
    }
    return best;
}

}  // namespace

TEST_CASE("region shapes") {
    // Cut-set region: three pairwise downlink cuts, three uplink singles.
    CHECK(oracle::outer_bound_region(kTen).constraints.size() == 6);
    // Decode-and-forward: seven relay subsets plus three downlink pairs.
    CHECK(oracle::df_region(kTen).constraints.size() == 10);
    // AF with simultaneous decoding: three singles plus three pairs.
    CHECK(oracle::af_snd_region(kTen).constraints.size() == 6);
    // NNC at fixed quantization: singles, pairs, and relay-side pairs.
    CHECK(oracle::nnc_region(kTen, 1.0).constraints.size() == 9);

    for (const auto& c : oracle::df_region(kTen).constraints) {
        // Subset-sum constraints: 0/1 coefficients, at least one active.
        CHECK(c.coeff.minCoeff() >= 0.0);
        CHECK(c.coeff.maxCoeff() == 1.0);
        CHECK(c.coeff.sum() >= 1.0);
    }
}

TEST_CASE("vertex enumeration reproduces the closed forms") {
    std::mt19937_64 rng(20240901);
    std::uniform_real_distribution<double> power(0.05, 20.0);
    std::uniform_real_distribution<double> noise(0.05, 2.0);

    for (int i = 0; i < 60; ++i) {
        const SymmetricChannel ch(power(rng), power(rng), noise(rng), noise(rng));

        CHECK(oracle::lp_max_sum_rate(oracle::outer_bound_region(ch)) ==
              doctest::Approx(rates::outer_bound(ch).value).epsilon(1e-9));
        CHECK(oracle::lp_max_sum_rate(oracle::df_region(ch)) ==
              doctest::Approx(rates::df_rate(ch).value).epsilon(1e-9));
        CHECK(oracle::lp_max_sum_rate(oracle::af_snd_region(ch)) ==
              doctest::Approx(rates::af_snd_rate(ch).value).epsilon(1e-9));

        // NNC at the optimal quantization noise matches the closed form.
        const auto nnc = rates::nnc_rate(ch);
        CHECK(oracle::lp_max_sum_rate(oracle::nnc_region(ch, nnc.q0_opt)) ==
              doctest::Approx(nnc.rate.value).epsilon(1e-9));
    }
}

TEST_CASE("vertex enumeration dominates a feasible grid scan") {
    std::mt19937_64 rng(5150);
    std::uniform_real_distribution<double> power(0.05, 20.0);
    std::uniform_real_distribution<double> noise(0.05, 2.0);

    for (int i = 0; i < 10; ++i) {
        const SymmetricChannel ch(power(rng), power(rng), noise(rng), noise(rng));
        const auto region = (i % 2 == 0) ? oracle::df_region(ch)
                                         : oracle::af_snd_region(ch);
        const double lp = oracle::lp_max_sum_rate(region);

        // The LP vertex is feasible, and no grid point beats it.
        const double cap = lp;  // sum <= lp implies each coordinate <= lp
        const double scan = grid_max_sum(region, cap, 41);
        CHECK(lp >= scan - 1e-9);
        CHECK(scan >= lp - 0.15 * lp);  // the grid gets close on this mesh
    }
}

TEST_CASE("tiny quantization noise collapses the NNC region") {
    // The relay-side pair constraints go negative as q0 -> 0, so the region
    // empties out and the LP reports it.
    CHECK_THROWS_AS(oracle::lp_max_sum_rate(oracle::nnc_region(kTen, 1e-9)),
                    DegenerateRegionError);

    // The sweep treats those points as zero rate rather than failing.
    std::vector<double> grid{1e-9, 1e-6};
    const auto nnc = rates::nnc_rate(kTen);
    for (int i = 0; i <= 200; ++i) {
        grid.push_back(nnc.q0_opt * std::pow(8.0, -1.0 + 2.0 * i / 200.0));
    }
    const auto sweep = oracle::nnc_q0_sweep(kTen, grid);
    CHECK(sweep.best_sum_rate == doctest::Approx(nnc.rate.value).epsilon(1e-4));
    CHECK(std::abs(sweep.best_q0 - nnc.q0_opt) <= 0.05 * nnc.q0_opt);
}

TEST_CASE("grid search is deterministic and validates its arguments") {
    const auto obj = gee::RateObjective::for_scheme(SchemeId::Nnc, 1.0, 1.0);
    const auto cost = gee::PowerCost::with_total(3.0, 1.0, 1.0);
    const PowerLimits lim{10.0, 10.0};

    CHECK_THROWS_AS(oracle::grid_search_gee(obj, cost, lim, 1),
                    std::invalid_argument);

    const auto a = oracle::grid_search_gee(obj, cost, lim, 301);
    const auto b = oracle::grid_search_gee(obj, cost, lim, 301);
    CHECK(a.value == b.value);
    CHECK(a.profile.p_s == b.profile.p_s);
    CHECK(a.profile.p_r == b.profile.p_r);

    // The reported value is the objective at the reported profile, and the
    // grid includes both box corners.
    CHECK(a.value == doctest::Approx(gee::gee_value(obj, a.profile, cost))
                         .epsilon(1e-12));
    const auto coarse = oracle::grid_search_gee(obj, cost, lim, 2);
    CHECK(coarse.value ==
          doctest::Approx(std::max(gee::gee_value(obj, {10.0, 10.0}, cost), 0.0))
              .epsilon(1e-12));
}

TEST_CASE("finer grids only improve the search") {
    const auto obj = gee::RateObjective::for_scheme(SchemeId::AfSnd, 1.0, 1.0);
    const auto cost = gee::PowerCost::with_total(4.0, 2.0, 2.0);
    const PowerLimits lim{8.0, 12.0};
    double prev = 0.0;
    for (int n : {11, 51, 251, 1001}) {
        const double v = oracle::grid_search_gee(obj, cost, lim, n).value;
        CHECK(v >= prev - 1e-12);
        prev = v;
    }
}
