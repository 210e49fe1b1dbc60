#include "mwrc/rates.hpp"

#include <cmath>

namespace mwrc::rates {

namespace {

SumRate min_rate(double downlink, double uplink) {
    SumRate r;
    if (downlink <= uplink) {
        r.value = downlink;
        r.active_branch = Branch::DownlinkLimited;
    } else {
        r.value = uplink;
        r.active_branch = Branch::UplinkLimited;
    }
    return r;
}

SumRate plain(double value) {
    SumRate r;
    r.value = value;
    return r;
}

}  // namespace

std::string_view branch_name(Branch b) {
    switch (b) {
        case Branch::DownlinkLimited: return "downlink";
        case Branch::UplinkLimited: return "uplink";
    }
    throw std::invalid_argument("branch_name: unknown branch");
}

SumRate outer_bound(const SymmetricChannel& ch) {
    const double down = 1.5 * capacity(ch.p_r / ch.n_s);
    const double up = 3.0 * capacity(ch.p_s / ch.n_r);
    return min_rate(down, up);
}

SumRate df_rate(const SymmetricChannel& ch) {
    const double down = 1.5 * capacity(ch.p_r / ch.n_s);
    const double up = capacity(3.0 * ch.p_s / ch.n_r);
    return min_rate(down, up);
}

NncRate nnc_rate(const SymmetricChannel& ch) {
    // Quantization noise that balances the relay-aided and direct terms of
    // the pairwise constraint; the sum rate then collapses to one capacity
    // expression in the end-to-end SNR.
    const double num = 2.0 * ch.p_s * ch.p_r;
    const double den = ch.n_r * ch.p_r + 2.0 * ch.p_s * ch.n_s + ch.n_s * ch.n_r;
    NncRate r;
    r.rate = plain(1.5 * capacity(num / den));
    r.q0_opt = ch.n_s * (ch.n_r + 2.0 * ch.p_s) / ch.p_r;
    return r;
}

SumRate af_snd_rate(const SymmetricChannel& ch) {
    const double num = 2.0 * ch.p_s * ch.p_r;
    const double den = ch.n_r * ch.p_r + 3.0 * ch.p_s * ch.n_s + ch.n_s * ch.n_r;
    return plain(1.5 * capacity(num / den));
}

SumRate af_ian_rate(const SymmetricChannel& ch) {
    const double num = 3.0 * ch.p_s * ch.p_r;
    const double den = ch.n_r * ch.p_r + 3.0 * ch.p_s * ch.n_s + ch.n_s * ch.n_r;
    return plain(capacity(num / den));
}

SumRate af_ian_max_power_rate(const SymmetricChannel& ch) {
    const double num = ch.p_r * ch.p_s;
    const double den = ch.p_r * ch.p_s + ch.p_r * ch.n_r + 3.0 * ch.p_s * ch.n_s +
                       ch.n_r * ch.n_s;
    return plain(3.0 * capacity(num / den));
}

SumRate af_ian_no_timesharing_rate(const SymmetricChannel& ch) {
    const double num = 2.0 * ch.p_s * ch.p_r;
    const double den = ch.n_r * ch.p_r + 2.0 * ch.p_s * ch.n_s + ch.n_s * ch.n_r;
    return plain(capacity(num / den));
}

SumRate sum_rate_for(SchemeId id, const SymmetricChannel& ch) {
    switch (id) {
        case SchemeId::OuterBound: return outer_bound(ch);
        case SchemeId::Df: return df_rate(ch);
        case SchemeId::Nnc: return nnc_rate(ch).rate;
        case SchemeId::AfSnd: return af_snd_rate(ch);
        case SchemeId::AfIan: return af_ian_rate(ch);
    }
    throw std::invalid_argument("sum_rate_for: unknown scheme");
}

bool df_achieves_outer_bound(const SymmetricChannel& ch) {
    // DF meets the outer bound exactly when the downlink term is the
    // bottleneck of both expressions.
    const double lhs = ch.p_r / ch.n_s;
    const double rhs = std::pow(1.0 + 3.0 * ch.p_s / ch.n_r, 2.0 / 3.0) - 1.0;
    return lhs <= rhs;
}

double df_outer_equality_threshold_db() {
    double lo = 0.0, hi = 20.0;  // condition holds at 0 dB, fails at 20 dB
    for (int i = 0; i < 200 && hi - lo > 1e-12; ++i) {
        const double mid = 0.5 * (lo + hi);
        const auto ch = SymmetricChannel::completely_symmetric(snr_db_to_linear(mid));
        (df_achieves_outer_bound(ch) ? lo : hi) = mid;
    }
    return 0.5 * (lo + hi);
}

double df_nnc_crossing_db() {
    const auto diff = [](double x_db) {
        const auto ch = SymmetricChannel::completely_symmetric(snr_db_to_linear(x_db));
        return df_rate(ch).value - nnc_rate(ch).rate.value;
    };
    double lo = 8.1, hi = 30.0;  // DF ahead at the low end, NNC at the high end
    for (int i = 0; i < 200 && hi - lo > 1e-12; ++i) {
        const double mid = 0.5 * (lo + hi);
        (diff(mid) > 0.0 ? lo : hi) = mid;
    }
    return 0.5 * (lo + hi);
}

double high_snr_gap(SchemeId id, double snr_linear) {
    const auto ch = SymmetricChannel::completely_symmetric(snr_linear);
    switch (id) {
        case SchemeId::Nnc:
            return outer_bound(ch).value - nnc_rate(ch).rate.value;
        case SchemeId::AfSnd:
            return outer_bound(ch).value - af_snd_rate(ch).value;
        case SchemeId::AfIan:
            return df_rate(ch).value - af_ian_rate(ch).value;
        default:
            throw UnsupportedSchemeError("high_snr_gap: defined for nnc, af_snd, af_ian");
    }
}

double gap_limit(SchemeId id) {
    switch (id) {
        case SchemeId::Nnc:
            return 1.5 * std::log2(1.5);
        case SchemeId::AfSnd:
            return 1.5;
        case SchemeId::AfIan:
            return 2.0;
        default:
            throw UnsupportedSchemeError("gap_limit: defined for nnc, af_snd, af_ian");
    }
}

double dof_estimate(SchemeId id, double snr_linear) {
    const double r1 = sum_rate_for(id, SymmetricChannel::completely_symmetric(snr_linear)).value;
    const double r10 =
        sum_rate_for(id, SymmetricChannel::completely_symmetric(10.0 * snr_linear)).value;
    return (r10 - r1) / std::log2(10.0);
}

}  // namespace mwrc::rates
