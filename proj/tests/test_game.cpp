#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <vector>

#include "mwrc/game.hpp"

using namespace mwrc;
using game::GameSpec;
using gee::Gee1Params;
using gee::PowerCost;
using gee::PowerProfile;

namespace {

GameSpec ref_game(SchemeId id) {
    return game::make_game_spec(id, 1.0, 1.0, PowerCost::with_total(3.0, 1.0, 1.0),
                                PowerLimits{10.0, 10.0});
}

const SchemeId kAllSchemes[] = {SchemeId::OuterBound, SchemeId::Df, SchemeId::Nnc,
                                SchemeId::AfSnd, SchemeId::AfIan};

// Dense-scan reference for a best response: coarse pass over the whole
// interval, then a fine pass around the coarse winner.
template <class U>
double scan_best(U&& utility, double hi) {
    const int n = 20001;
    int best = 0;
    double best_u = utility(0.0);
    for (int i = 1; i < n; ++i) {
        const double u = utility(hi * i / (n - 1));
        if (u > best_u) {
            best_u = u;
            best = i;
        }
    }
    const double step = hi / (n - 1);
    const double lo2 = std::max(0.0, hi * best / (n - 1) - step);
    const double hi2 = std::min(hi, hi * best / (n - 1) + step);
    int best2 = 0;
    best_u = utility(lo2);
    for (int i = 1; i < n; ++i) {
        const double u = utility(lo2 + (hi2 - lo2) * i / (n - 1));
        if (u > best_u) {
            best_u = u;
            best2 = i;
        }
    }
    return lo2 + (hi2 - lo2) * best2 / (n - 1);
}

}  // namespace

TEST_CASE("utilities split the common rate by each side's own power bill") {
    for (SchemeId id : kAllSchemes) {
        const auto spec = ref_game(id);
        const PowerProfile p{4.0, 7.0};
        const double r = game::rate_at(spec, p);
        const auto [u_s, u_r] = game::utilities_at(spec, p);
        CHECK(u_s == doctest::Approx(r / (4.0 + 0.75)).epsilon(1e-12));
        CHECK(u_r == doctest::Approx(r / (7.0 + 0.25)).epsilon(1e-12));
    }
}

TEST_CASE("a silent opponent forces a silent best response") {
    for (SchemeId id : kAllSchemes) {
        const auto spec = ref_game(id);
        CHECK(game::br_sources(spec, 0.0) == 0.0);
        CHECK(game::br_relay(spec, 0.0) == 0.0);
    }
}

TEST_CASE("all-off is an equilibrium for every scheme") {
    for (SchemeId id : kAllSchemes) {
        CHECK(game::is_nash(ref_game(id), {0.0, 0.0}));
    }
}

TEST_CASE("min-rate source response: interior stationary point") {
    // With a unit source-side static power the stationarity condition
    // (1/3)(1+3p)ln(1+3p) = p + 1 has a single positive root; a high relay
    // power makes it the binding branch of the best response.
    auto spec = ref_game(SchemeId::Df);
    spec.cost = PowerCost::per_node(3.0, 1.0, 1.0, 1.0);
    spec.limits = PowerLimits{100.0, 100.0};

    const double p = game::br_sources(spec, 50.0);
    CHECK(p == doctest::Approx(1.1063788554304823).epsilon(1e-9));
    const double g = 3.0 * p;
    CHECK((1.0 / 3.0) * (1.0 + g) * std::log1p(g) - p - 1.0 ==
          doctest::Approx(0.0).epsilon(1e-9));
}

TEST_CASE("min-rate source response: rate-matching branch at low relay power") {
    // Below the stationary point the response only spends enough power to
    // match the relay's rate cap: C(3 p_s) = 1.5 C(p_r).
    const auto spec = ref_game(SchemeId::Df);
    const double p_r = 0.1;
    const double match = (std::pow(1.0 + p_r, 1.5) - 1.0) / 3.0;
    CHECK(game::br_sources(spec, p_r) == doctest::Approx(match).epsilon(1e-9));
}

TEST_CASE("single-ratio relay response agrees with a dense utility scan") {
    auto spec = ref_game(SchemeId::Nnc);
    spec.limits = PowerLimits{20.0, 20.0};
    const double br = game::br_relay(spec, 10.0);
    const double scan = scan_best(
        [&](double p_r) {
            return game::utilities_at(spec, {10.0, p_r}).second;
        },
        spec.limits.p_r_max);
    CHECK(std::abs(br - scan) <= 1e-6);
    CHECK(br == doctest::Approx(0.7528583).epsilon(2e-6));
}

TEST_CASE("best responses are monotone in the opponent's power") {
    for (SchemeId id : kAllSchemes) {
        const auto spec = ref_game(id);
        double prev_s = game::br_sources(spec, 0.0);
        double prev_r = game::br_relay(spec, 0.0);
        for (int i = 1; i <= 60; ++i) {
            const double opp = 10.0 * i / 60.0;
            const double s = game::br_sources(spec, opp);
            const double r = game::br_relay(spec, opp);
            CHECK(s >= prev_s - 1e-9);
            CHECK(r >= prev_r - 1e-9);
            prev_s = s;
            prev_r = r;
        }
    }
}

TEST_CASE("each side's utility is unimodal in its own power") {
    const auto spec = ref_game(SchemeId::Nnc);
    std::vector<double> u;
    for (int i = 0; i <= 400; ++i) {
        u.push_back(game::utilities_at(spec, {10.0 * i / 400.0, 5.0}).first);
    }
    const auto peak = std::max_element(u.begin(), u.end()) - u.begin();
    for (long i = 1; i <= peak; ++i) CHECK(u[i] >= u[i - 1] - 1e-12);
    for (std::size_t i = peak + 1; i < u.size(); ++i) CHECK(u[i] <= u[i - 1] + 1e-12);
}

TEST_CASE("best-response dynamics settle at an equilibrium from full power") {
    for (SchemeId id : kAllSchemes) {
        const auto spec = ref_game(id);
        const auto trace = game::brd_from_relay_power(spec, spec.limits.p_r_max);
        CHECK(trace.converged);
        CHECK(trace.iterations < 1000);
        REQUIRE(!trace.steps.empty());

        // First move is the sources' best response to the initial relay power.
        CHECK(trace.steps.front().p_s ==
              doctest::Approx(game::br_sources(spec, spec.limits.p_r_max))
                  .epsilon(1e-12));

        // Componentwise monotone power sequences, direction set by the
        // first step.
        for (std::size_t i = 2; i < trace.steps.size(); ++i) {
            const auto& a = trace.steps[i - 2];
            const auto& b = trace.steps[i - 1];
            const auto& c = trace.steps[i];
            if (b.p_s <= a.p_s) CHECK(c.p_s <= b.p_s + 1e-9);
            else CHECK(c.p_s >= b.p_s - 1e-9);
            if (b.p_r <= a.p_r) CHECK(c.p_r <= b.p_r + 1e-9);
            else CHECK(c.p_r >= b.p_r - 1e-9);
        }

        const auto& last = trace.steps.back();
        CHECK(game::is_nash(spec, {last.p_s, last.p_r}, 1e-6));
    }
}

TEST_CASE("relay-first dynamics honor their move order") {
    const auto spec = ref_game(SchemeId::AfSnd);
    const auto trace = game::brd_from_source_power(spec, 3.0);
    CHECK(trace.converged);
    REQUIRE(!trace.steps.empty());
    CHECK(trace.steps.front().p_r ==
          doctest::Approx(game::br_relay(spec, 3.0)).epsilon(1e-12));
    const auto& last = trace.steps.back();
    CHECK(game::is_nash(spec, {last.p_s, last.p_r}, 1e-6));
}

TEST_CASE("the min-rate game keeps a continuum of equilibria") {
    // On the rate-matching branch the two responses invert each other, so
    // dynamics freeze wherever they start: low starts are equilibria in
    // their own right and differ from the full-power outcome.
    const auto spec = ref_game(SchemeId::Df);
    const auto low = game::brd_from_relay_power(spec, 0.01);
    const auto high = game::brd_from_relay_power(spec, spec.limits.p_r_max);
    CHECK(low.converged);
    CHECK(high.converged);
    const auto& le = low.steps.back();
    const auto& he = high.steps.back();
    CHECK(game::is_nash(spec, {le.p_s, le.p_r}, 1e-6));
    CHECK(game::is_nash(spec, {he.p_s, he.p_r}, 1e-6));
    CHECK(std::abs(le.p_r - he.p_r) > 1e-3);

    // The single-ratio game instead lands on the same interior point.
    const auto nnc = ref_game(SchemeId::Nnc);
    const auto a = game::brd_from_relay_power(nnc, 0.01);
    const auto b = game::brd_from_relay_power(nnc, nnc.limits.p_r_max);
    CHECK(std::abs(a.steps.back().p_s - b.steps.back().p_s) <= 1e-6);
    CHECK(std::abs(a.steps.back().p_r - b.steps.back().p_r) <= 1e-6);
}

TEST_CASE("tight caps saturate into a boundary equilibrium") {
    auto spec = ref_game(SchemeId::Nnc);
    spec.cost = PowerCost::per_node(3.0, 1.0, 2.0, 2.0);
    spec.limits = PowerLimits{0.5, 0.5};
    CHECK(game::br_sources(spec, 0.5) == doctest::Approx(0.5).epsilon(1e-12));
    CHECK(game::br_relay(spec, 0.5) == doctest::Approx(0.5).epsilon(1e-12));
    CHECK(game::is_nash(spec, {0.5, 0.5}));
}

TEST_CASE("non-stationary interior points are rejected") {
    CHECK(!game::is_nash(ref_game(SchemeId::Nnc), {9.0, 9.0}));
    CHECK(!game::is_nash(ref_game(SchemeId::Df), {10.0, 10.0}));
}

TEST_CASE("an absurd static power breaks the stationarity bracket") {
    auto spec = ref_game(SchemeId::Df);
    spec.cost = PowerCost::per_node(3.0, 1.0, 1e30, 1e30);
    CHECK_THROWS_AS(game::br_sources(spec, 10.0), BracketFailureError);
}

TEST_CASE("dynamics report non-convergence when the tolerance is unreachable") {
    const auto spec = ref_game(SchemeId::Nnc);
    CHECK_THROWS_AS(game::brd_from_relay_power(spec, 10.0, 0.0, 5),
                    NonConvergenceError);
}

TEST_CASE("identical roles produce identical responses") {
    // A hand-built min-rate game with equal terms and equal static powers
    // is fully symmetric between the two sides.
    const GameSpec spec{SchemeId::Df,
                        Gee1Params(2.0, 1.0, 2.0, 1.0),
                        1.0,
                        1.0,
                        PowerCost::per_node(3.0, 1.0, 0.5, 0.5),
                        PowerLimits{50.0, 50.0}};
    for (double opp : {0.2, 1.0, 3.0, 20.0}) {
        CHECK(game::br_sources(spec, opp) ==
              doctest::Approx(game::br_relay(spec, opp)).epsilon(1e-10));
    }
}

TEST_CASE("the utility curvature inequality holds over the whole range") {
    // gamma <= log1p(gamma) * (1 + gamma(1+gamma)/(gamma+d)) for the two
    // curvature constants that occur, with equality only at gamma = 0.
    for (double d : {2.0 / 3.0, 1.0}) {
        std::vector<double> gammas{0.0};
        for (int i = 0; i < 100; ++i) {
            gammas.push_back(std::pow(10.0, -9.0 + 15.0 * i / 99.0));
        }
        for (double g : gammas) {
            const double lhs = g;
            const double rhs =
                std::log1p(g) * (1.0 + g * (1.0 + g) / (g + d));
            CHECK(lhs <= rhs + 1e-15 * std::max(1.0, g));
        }
    }
}
