#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <random>

#include "mwrc/fractional.hpp"
#include "mwrc/gee.hpp"
#include "mwrc/monotonic.hpp"

using namespace mwrc;
using gee::Gee2Params;
using gee::PowerCost;
using gee::PowerProfile;
using monotonic::MonotonicOptions;

namespace {

const PowerCost kRefCost = PowerCost::with_total(3.0, 1.0, 1.0);
const PowerLimits kRefLim{10.0, 10.0};

Gee2Params ref_params(SchemeId id) { return gee::gee2_params_for(id, 1.0, 1.0); }

}  // namespace

TEST_CASE("a zero price on power makes full power optimal") {
    const auto q = ref_params(SchemeId::Nnc);
    const auto r = monotonic::inner_subproblem_global(q, kRefCost, kRefLim, 0.0);
    CHECK(r.profile.p_s == doctest::Approx(10.0).epsilon(1e-9));
    CHECK(r.profile.p_r == doctest::Approx(10.0).epsilon(1e-9));
    CHECK(r.value ==
          doctest::Approx(gee::gee2_rate(q, {10.0, 10.0})).epsilon(1e-12));

    // A negative price rewards power on top of the rate.
    const auto neg = monotonic::inner_subproblem_global(q, kRefCost, kRefLim, -1.0);
    CHECK(neg.profile.p_s == doctest::Approx(10.0).epsilon(1e-9));
    CHECK(neg.value ==
          doctest::Approx(gee::gee2_rate(q, {10.0, 10.0}) +
                          gee::consumed_power(kRefCost, {10.0, 10.0}))
              .epsilon(1e-12));
}

TEST_CASE("a prohibitive price on power shuts everything off") {
    const auto q = ref_params(SchemeId::Nnc);
    const auto r = monotonic::inner_subproblem_global(q, kRefCost, kRefLim, 100.0);
    CHECK(r.profile.p_s == doctest::Approx(0.0).epsilon(1e-9));
    CHECK(r.profile.p_r == doctest::Approx(0.0).epsilon(1e-9));
    // F(0,0) = -lambda * p_c.
    CHECK(r.value == doctest::Approx(-100.0 * kRefCost.p_c).epsilon(1e-9));
}

TEST_CASE("the subproblem value vanishes at the optimal ratio") {
    // At lambda equal to the maximal ratio, max F is exactly zero; the
    // certified solve must land within its own tolerance of that.
    const auto q = ref_params(SchemeId::Nnc);
    const auto alt = fractional::alternating_gee2(q, kRefCost, kRefLim);
    const auto r =
        monotonic::inner_subproblem_global(q, kRefCost, kRefLim, alt.gee);
    CHECK(std::abs(r.value) <= 5e-6);
    CHECK(r.bound_gap <= MonotonicOptions{}.eps_mono);
}

TEST_CASE("the certified bound gap is honored") {
    const auto q = ref_params(SchemeId::AfSnd);
    MonotonicOptions opt;
    opt.eps_mono = 1e-8;
    const auto r =
        monotonic::inner_subproblem_global(q, kRefCost, kRefLim, 0.11, opt);
    CHECK(r.bound_gap <= opt.eps_mono);
    CHECK(r.iterations > 0);
}

TEST_CASE("an exhausted interval budget is a hard error") {
    const auto q = ref_params(SchemeId::Nnc);
    MonotonicOptions opt;
    opt.node_budget = 1;
    CHECK_THROWS_AS(
        monotonic::inner_subproblem_global(q, kRefCost, kRefLim, 0.5, opt),
        NonConvergenceError);
}

TEST_CASE("global maximizer agrees with the alternating solver at the reference") {
    const auto q = ref_params(SchemeId::Nnc);
    const auto glob = monotonic::gee2_global(q, kRefCost, kRefLim);
    CHECK(glob.converged);
    CHECK(glob.gee == doctest::Approx(0.215428285902187).epsilon(1e-6));

    const auto alt = fractional::alternating_gee2(q, kRefCost, kRefLim);
    CHECK(std::abs(glob.gee - alt.gee) <= 1e-6 * std::max(1.0, alt.gee));

    // Reported gee is the actual ratio at the reported profile.
    CHECK(glob.gee ==
          doctest::Approx(gee::gee_value(q, glob.profile, kRefCost)).epsilon(1e-12));
    CHECK(glob.rate == doctest::Approx(gee::gee2_rate(q, glob.profile)).epsilon(1e-12));
}

TEST_CASE("interference treated as noise never beats successive decoding here") {
    const auto snd = monotonic::gee2_global(ref_params(SchemeId::AfSnd), kRefCost, kRefLim);
    const auto ian = monotonic::gee2_global(ref_params(SchemeId::AfIan), kRefCost, kRefLim);
    CHECK(ian.gee <= snd.gee + 1e-9);

    // The amplify-and-forward ladder also holds under the relaying objective:
    // noisy network coding dominates both forwarding variants.
    const auto nnc = monotonic::gee2_global(ref_params(SchemeId::Nnc), kRefCost, kRefLim);
    CHECK(snd.gee <= nnc.gee + 1e-9);
}

TEST_CASE("tiny static power and tiny caps stay finite at the box corner") {
    const auto q = ref_params(SchemeId::Nnc);
    const auto cost = PowerCost(3.0, 1.0, 1e-9, 0.75e-9, 0.25e-9);
    const PowerLimits lim{1e-9, 1e-9};
    const auto rep = monotonic::gee2_global(q, cost, lim);
    CHECK(std::isfinite(rep.gee));
    CHECK(rep.gee >= 0.0);
    CHECK(rep.profile.p_s <= lim.p_s_max + 1e-18);
    CHECK(rep.profile.p_r <= lim.p_r_max + 1e-18);
}

TEST_CASE("global and alternating solvers agree on random instances") {
    std::mt19937_64 rng(777001);
    std::uniform_real_distribution<double> noise(0.05, 2.0);
    std::uniform_real_distribution<double> phi(3.0, 10.0);
    std::uniform_real_distribution<double> psi(1.0, 5.0);
    std::uniform_real_distribution<double> pc(0.1, 5.0);
    std::uniform_real_distribution<double> cap(0.5, 20.0);
    const SchemeId ids[] = {SchemeId::Nnc, SchemeId::AfSnd, SchemeId::AfIan};

    for (int trial = 0; trial < 6; ++trial) {
        const auto q = gee::gee2_params_for(ids[trial % 3], noise(rng), noise(rng));
        const auto cost = PowerCost::with_total(phi(rng), psi(rng), pc(rng));
        const PowerLimits lim{cap(rng), cap(rng)};

        const auto glob = monotonic::gee2_global(q, cost, lim);
        const auto alt = fractional::alternating_gee2(q, cost, lim);
        CHECK(std::abs(glob.gee - alt.gee) <=
              1e-4 * std::max(1.0, std::abs(glob.gee)));
        CHECK(glob.gee >= alt.gee - 1e-6);
    }
}
