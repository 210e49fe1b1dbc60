#pragma once

// Closed-form achievable sum rates and the cut-set outer bound for the
// symmetric three-user multi-way relay channel with circular message
// exchange (user k decodes the messages of both other users).

#include <optional>

#include "mwrc/core.hpp"

namespace mwrc::rates {

// Which term of a min{downlink, uplink} expression is active.
enum class Branch {
    DownlinkLimited,  // broadcast side (relay power / source noise)
    UplinkLimited,    // multiple-access side (source power / relay noise)
};

std::string_view branch_name(Branch b);

struct SumRate {
    double value = 0.0;
    // Present only for expressions with a downlink/uplink min structure
    // (outer bound, decode-and-forward). Ties report DownlinkLimited.
    std::optional<Branch> active_branch;
};

struct NncRate {
    SumRate rate;
    double q0_opt = 0.0;  // optimal quantization noise power at the relay
};

// Cut-set outer bound: min{ (3/2) C(p_r/n_s), 3 C(p_s/n_r) }.
SumRate outer_bound(const SymmetricChannel& ch);

// Decode-and-forward: min{ (3/2) C(p_r/n_s), C(3 p_s/n_r) }.
SumRate df_rate(const SymmetricChannel& ch);

// Noisy network coding with the sum-rate-optimal quantization noise.
NncRate nnc_rate(const SymmetricChannel& ch);

// Amplify-and-forward, relay gain optimized, simultaneous decoding.
SumRate af_snd_rate(const SymmetricChannel& ch);

// Amplify-and-forward, relay gain optimized, interference treated as noise
// (with time sharing across the three decoding orders).
SumRate af_ian_rate(const SymmetricChannel& ch);

// AF with interference as noise when the relay always amplifies at full
// power instead of using the optimized gain.
SumRate af_ian_max_power_rate(const SymmetricChannel& ch);

// AF with interference as noise and no time sharing.
SumRate af_ian_no_timesharing_rate(const SymmetricChannel& ch);

// Dispatch on the scheme tag (OuterBound included).
SumRate sum_rate_for(SchemeId id, const SymmetricChannel& ch);

// True when decode-and-forward meets the outer bound, i.e. when
// p_r/n_s <= (1 + 3 p_s/n_r)^(2/3) - 1 (downlink is the bottleneck).
bool df_achieves_outer_bound(const SymmetricChannel& ch);

// Largest common SNR (dB) of the completely symmetric channel for which
// decode-and-forward still meets the outer bound; equals
// 10 log10(3 + 2 sqrt(3)). Found by bisection on [0, 20] dB.
double df_outer_equality_threshold_db();

// Common SNR (dB) where the decode-and-forward and noisy-network-coding
// sum rates cross on the completely symmetric channel (DF wins below,
// NNC wins above). Found by bisection on [8.1, 30] dB.
double df_nnc_crossing_db();

// Gap at finite SNR on the completely symmetric channel: outer bound minus
// the scheme rate for Nnc/AfSnd, DF rate minus the scheme rate for AfIan.
double high_snr_gap(SchemeId id, double snr_linear);

// Limit of high_snr_gap as SNR grows: (3/2) log2(3/2) for Nnc, 3/2 for
// AfSnd, 2 for AfIan.
double gap_limit(SchemeId id);

// High-SNR slope estimate in bits per log2(SNR): sum rate gained per decade
// of SNR divided by log2(10), evaluated between snr and 10*snr.
double dof_estimate(SchemeId id, double snr_linear);

}  // namespace mwrc::rates
