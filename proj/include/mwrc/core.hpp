#pragma once

// Shared primitives for the symmetric three-user multi-way relay channel:
// channel state, scheme tags, power limits, dB helpers and error types.
//
// Conventions used throughout the library:
//   * transmit powers and noise powers are linear (watts),
//   * rates are in bit/s/Hz, capacities use log base 2,
//   * dB values appear only at API boundaries (CLI, sweep configs).

#include <cmath>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>

namespace mwrc {

inline constexpr double kLn2 = 0.69314718055994530942;

// Gaussian point-to-point capacity C(x) = log2(1 + x), stable for small x.
inline double capacity(double x) {
    if (!(x >= 0.0) || !std::isfinite(x)) {
        throw std::domain_error("capacity: argument must be finite and >= 0");
    }
    return std::log1p(x) / kLn2;
}

inline double snr_db_to_linear(double snr_db) {
    return std::pow(10.0, snr_db / 10.0);
}

inline double snr_linear_to_db(double snr) {
    if (!(snr > 0.0)) {
        throw std::domain_error("snr_linear_to_db: argument must be > 0");
    }
    return 10.0 * std::log10(snr);
}

// Relaying strategies handled by the library. OuterBound is the converse
// reference, the other four are achievable schemes.
enum class SchemeId {
    OuterBound,
    Df,     // decode-and-forward
    Nnc,    // noisy network coding
    AfSnd,  // amplify-and-forward, simultaneous decoding
    AfIan,  // amplify-and-forward, interference as noise
};

inline std::string_view scheme_name(SchemeId id) {
    switch (id) {
        case SchemeId::OuterBound: return "outer_bound";
        case SchemeId::Df: return "df";
        case SchemeId::Nnc: return "nnc";
        case SchemeId::AfSnd: return "af_snd";
        case SchemeId::AfIan: return "af_ian";
    }
    throw std::invalid_argument("scheme_name: unknown scheme");
}

inline std::optional<SchemeId> scheme_from_name(std::string_view name) {
    if (name == "outer_bound") return SchemeId::OuterBound;
    if (name == "df") return SchemeId::Df;
    if (name == "nnc") return SchemeId::Nnc;
    if (name == "af_snd") return SchemeId::AfSnd;
    if (name == "af_ian") return SchemeId::AfIan;
    return std::nullopt;
}

// Symmetric channel state: every source transmits with power p_s, the relay
// with p_r; n_r is the noise power at the relay, n_s at each source.
struct SymmetricChannel {
    double p_s = 0.0;
    double p_r = 0.0;
    double n_s = 1.0;
    double n_r = 1.0;

    SymmetricChannel(double ps, double pr, double ns, double nr)
        : p_s(ps), p_r(pr), n_s(ns), n_r(nr) {
        if (!(ps >= 0.0) || !(pr >= 0.0) || !std::isfinite(ps) || !std::isfinite(pr)) {
            throw std::invalid_argument("SymmetricChannel: powers must be finite and >= 0");
        }
        if (!(ns > 0.0) || !(nr > 0.0) || !std::isfinite(ns) || !std::isfinite(nr)) {
            throw std::invalid_argument("SymmetricChannel: noise powers must be finite and > 0");
        }
    }

    // Common SNR; only meaningful when uplink and downlink SNRs coincide.
    double snr() const {
        const double up = p_s / n_r;
        const double down = p_r / n_s;
        const double scale = std::max({1.0, up, down});
        if (std::abs(up - down) > 1e-9 * scale) {
            throw std::logic_error("SymmetricChannel::snr: uplink and downlink SNRs differ");
        }
        return up;
    }

    // Channel with p_s = p_r = snr and unit noise everywhere.
    static SymmetricChannel completely_symmetric(double snr_linear) {
        return SymmetricChannel(snr_linear, snr_linear, 1.0, 1.0);
    }
};

struct PowerLimits {
    double p_s_max = 0.0;
    double p_r_max = 0.0;

    PowerLimits(double ps_max, double pr_max) : p_s_max(ps_max), p_r_max(pr_max) {
        if (!(ps_max > 0.0) || !(pr_max > 0.0) ||
            !std::isfinite(ps_max) || !std::isfinite(pr_max)) {
            throw std::invalid_argument("PowerLimits: limits must be finite and > 0");
        }
    }
};

// Error types shared across modules.
struct NonConvergenceError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct BracketFailureError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct DegenerateRegionError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct UnsupportedSchemeError : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

}  // namespace mwrc
