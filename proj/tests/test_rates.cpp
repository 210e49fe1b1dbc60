#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <random>

#include "mwrc/rates.hpp"

using namespace mwrc;
using namespace mwrc::rates;

namespace {
const SymmetricChannel kTen(10.0, 10.0, 1.0, 1.0);
}

// Reference values below were frozen from an independent high-precision
// implementation of the same closed forms.

TEST_CASE("outer bound at the ten-unit operating point") {
    const auto r = outer_bound(kTen);
    CHECK(r.value == doctest::Approx(5.189147427955946).epsilon(1e-12));
    REQUIRE(r.active_branch.has_value());
    CHECK(*r.active_branch == Branch::DownlinkLimited);

    const auto low = outer_bound(SymmetricChannel::completely_symmetric(1.0));
    CHECK(low.value == doctest::Approx(1.5).epsilon(1e-12));
    CHECK(*low.active_branch == Branch::DownlinkLimited);
}

TEST_CASE("decode-and-forward rate and branch") {
    const auto r = df_rate(kTen);
    CHECK(r.value == doctest::Approx(4.954196310386876).epsilon(1e-12));
    CHECK(r.value == doctest::Approx(std::log2(31.0)).epsilon(1e-15));
    REQUIRE(r.active_branch.has_value());
    CHECK(*r.active_branch == Branch::UplinkLimited);

    // Uplink-heavy channel: the broadcast side limits instead.
    const auto down = df_rate(SymmetricChannel(10.0, 0.5, 1.0, 1.0));
    CHECK(*down.active_branch == Branch::DownlinkLimited);

    // Zero power: both terms vanish; ties resolve to the downlink branch.
    const auto zero = df_rate(SymmetricChannel(0.0, 0.0, 1.0, 1.0));
    CHECK(zero.value == 0.0);
    CHECK(*zero.active_branch == Branch::DownlinkLimited);
}

TEST_CASE("noisy network coding rate and optimal quantization noise") {
    const auto r = nnc_rate(kTen);
    CHECK(r.rate.value == doctest::Approx(4.346329096543774).epsilon(1e-12));
    CHECK(r.q0_opt == doctest::Approx(2.1).epsilon(1e-12));
    CHECK_FALSE(r.rate.active_branch.has_value());

    // Silent relay: nothing can be forwarded.
    const auto silent = nnc_rate(SymmetricChannel(10.0, 0.0, 1.0, 1.0));
    CHECK(silent.rate.value == 0.0);
}

TEST_CASE("amplify-and-forward rates") {
    CHECK(af_snd_rate(kTen).value == doctest::Approx(3.8330059974178172).epsilon(1e-12));
    CHECK(af_ian_rate(kTen).value == doctest::Approx(3.056075924406089).epsilon(1e-12));
    CHECK(af_ian_max_power_rate(kTen).value ==
          doctest::Approx(2.3200139514935043).epsilon(1e-12));
    CHECK(af_ian_no_timesharing_rate(kTen).value ==
          doctest::Approx(2.8975527310291826).epsilon(1e-12));
}

TEST_CASE("scheme dispatch matches the individual functions") {
    for (const SchemeId id : {SchemeId::OuterBound, SchemeId::Df, SchemeId::Nnc,
                              SchemeId::AfSnd, SchemeId::AfIan}) {
        CHECK(sum_rate_for(id, kTen).value >= 0.0);
    }
    CHECK(sum_rate_for(SchemeId::Nnc, kTen).value == nnc_rate(kTen).rate.value);
    CHECK(sum_rate_for(SchemeId::Df, kTen).value == df_rate(kTen).value);
}

TEST_CASE("time-shared per-slot power split does not change the af-ian sum rate") {
    std::mt19937_64 rng(99);
    std::uniform_real_distribution<double> pd(0.1, 20.0);
    std::uniform_real_distribution<double> nd(0.1, 2.0);
    for (int i = 0; i < 50; ++i) {
        const SymmetricChannel ch(pd(rng), pd(rng), nd(rng), nd(rng));
        const double e = ch.n_r * ch.p_r + ch.n_s * (3.0 * ch.p_s + ch.n_r);
        const double whole = capacity(3.0 * ch.p_s * ch.p_r / e);
        for (const double p : {0.0, 1.5 * ch.p_s, 3.0 * ch.p_s}) {
            // One user sends 3*p_s - p, the other p; both relay terms of the
            // slot telescope into the single expression.
            const double a = ch.p_r * (3.0 * ch.p_s - p);
            const double b = ch.p_r * p;
            const double split = capacity(a / e) + capacity(b / (a + e));
            CHECK(split == doctest::Approx(whole).epsilon(1e-12));
        }
        CHECK(af_ian_rate(ch).value == doctest::Approx(whole).epsilon(1e-13));
    }
}

TEST_CASE("df meets the outer bound exactly below the threshold") {
    CHECK(df_achieves_outer_bound(SymmetricChannel::completely_symmetric(1.0)));
    CHECK(df_achieves_outer_bound(SymmetricChannel::completely_symmetric(6.46)));
    CHECK_FALSE(df_achieves_outer_bound(SymmetricChannel::completely_symmetric(6.47)));

    // Where the condition holds, the two min-expressions coincide bit for bit.
    for (const double s : {0.5, 2.0, 6.4}) {
        const auto ch = SymmetricChannel::completely_symmetric(s);
        REQUIRE(df_achieves_outer_bound(ch));
        CHECK(df_rate(ch).value == outer_bound(ch).value);
    }
    const auto beyond = SymmetricChannel::completely_symmetric(10.0);
    CHECK_FALSE(df_achieves_outer_bound(beyond));
    CHECK(df_rate(beyond).value < outer_bound(beyond).value);
}

TEST_CASE("df optimality threshold equals 10*log10(3 + 2*sqrt(3))") {
    const double expect = 10.0 * std::log10(3.0 + 2.0 * std::sqrt(3.0));
    CHECK(expect == doctest::Approx(8.105081748931905).epsilon(1e-15));
    CHECK(df_outer_equality_threshold_db() == doctest::Approx(expect).epsilon(1e-9));
}

TEST_CASE("df and nnc curves cross where the expressions say they do") {
    const double crossing = df_nnc_crossing_db();
    CHECK(crossing == doctest::Approx(14.385931713833624).epsilon(1e-6));

    const auto at = [](double db) {
        return SymmetricChannel::completely_symmetric(snr_db_to_linear(db));
    };
    CHECK(df_rate(at(14.0)).value > nnc_rate(at(14.0)).rate.value);
    CHECK(nnc_rate(at(14.5)).rate.value > df_rate(at(14.5)).value);
}

TEST_CASE("finite-snr gaps approach their limits from below") {
    CHECK(gap_limit(SchemeId::Nnc) == doctest::Approx(1.5 * std::log2(1.5)).epsilon(1e-15));
    CHECK(gap_limit(SchemeId::AfSnd) == 1.5);
    CHECK(gap_limit(SchemeId::AfIan) == 2.0);
    CHECK_THROWS_AS(gap_limit(SchemeId::Df), UnsupportedSchemeError);
    CHECK_THROWS_AS(high_snr_gap(SchemeId::OuterBound, 10.0), UnsupportedSchemeError);

    CHECK(high_snr_gap(SchemeId::Nnc, 1e6) ==
          doctest::Approx(0.8774433904081214).epsilon(1e-12));
    CHECK(high_snr_gap(SchemeId::AfSnd, 1e6) ==
          doctest::Approx(1.4999983769701686).epsilon(1e-12));
    CHECK(high_snr_gap(SchemeId::AfIan, 1e6) ==
          doctest::Approx(1.9999989179793936).epsilon(1e-12));

    // The gap grows toward its limit as the SNR rises.
    for (const SchemeId id : {SchemeId::Nnc, SchemeId::AfSnd, SchemeId::AfIan}) {
        CHECK(high_snr_gap(id, 1e4) < high_snr_gap(id, 1e6));
        CHECK(high_snr_gap(id, 1e6) < gap_limit(id));
    }
}

TEST_CASE("high-snr slopes") {
    CHECK(dof_estimate(SchemeId::OuterBound, 1e9) == doctest::Approx(1.5).epsilon(1e-6));
    CHECK(dof_estimate(SchemeId::Nnc, 1e9) == doctest::Approx(1.5).epsilon(1e-6));
    CHECK(dof_estimate(SchemeId::AfSnd, 1e9) == doctest::Approx(1.5).epsilon(1e-6));
    CHECK(dof_estimate(SchemeId::Df, 1e9) == doctest::Approx(1.0).epsilon(1e-6));
    CHECK(dof_estimate(SchemeId::AfIan, 1e9) == doctest::Approx(1.0).epsilon(1e-6));
}

TEST_CASE("rates are monotone in both transmit powers") {
    std::mt19937_64 rng(4242);
    std::uniform_real_distribution<double> pd(0.0, 20.0);
    std::uniform_real_distribution<double> nd(0.1, 2.0);
    for (int i = 0; i < 200; ++i) {
        const double ps = pd(rng), pr = pd(rng), ns = nd(rng), nr = nd(rng);
        const SymmetricChannel base(ps, pr, ns, nr);
        const SymmetricChannel more_s(ps + 0.5, pr, ns, nr);
        const SymmetricChannel more_r(ps, pr + 0.5, ns, nr);
        for (const SchemeId id : {SchemeId::OuterBound, SchemeId::Df, SchemeId::Nnc,
                                  SchemeId::AfSnd, SchemeId::AfIan}) {
            const double v = sum_rate_for(id, base).value;
            CHECK(sum_rate_for(id, more_s).value >= v - 1e-12);
            CHECK(sum_rate_for(id, more_r).value >= v - 1e-12);
        }
    }
}
