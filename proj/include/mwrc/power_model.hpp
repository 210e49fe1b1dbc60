#pragma once

// Circuit power accounting for a millimeter-wave board-to-board link and
// the mapping from hardware parameters to the GEE power cost of each
// scheme. All powers in watts.

#include "mwrc/core.hpp"
#include "mwrc/gee.hpp"

namespace mwrc::power_model {

// Static power draw of the radio blocks of one node.
struct ComponentPowers {
    double p_rx = 0.0;   // receive front end (LNA array, mixers, LO driver)
    double p_adc = 0.0;  // analog-to-digital conversion
    double p_dec = 0.0;  // one decoder instance
    double p_dac = 0.0;  // digital-to-analog conversion
    double p_tx = 0.0;   // transmit chain excluding the PA
    double eta = 0.0;    // power amplifier efficiency

    ComponentPowers(double rx, double adc, double dec, double dac, double tx, double eta_)
        : p_rx(rx), p_adc(adc), p_dec(dec), p_dac(dac), p_tx(tx), eta(eta_) {
        if (!(p_rx > 0.0) || !(p_adc > 0.0) || !(p_dec > 0.0) ||
            !(p_dac > 0.0) || !(p_tx > 0.0)) {
            throw std::invalid_argument("ComponentPowers: block powers must be > 0");
        }
        if (!(eta > 0.0) || !(eta <= 1.0)) {
            throw std::invalid_argument("ComponentPowers: eta must be in (0, 1]");
        }
    }
};

// 60 GHz-class transceiver numbers. The receive front end aggregates a
// 16-element LNA array plus two mixers and an LO driver.
ComponentPowers default_component_powers();

// Individual front-end blocks, kept for documentation and sanity checks.
inline constexpr double kMixerW = 0.017;
inline constexpr double kLoDriverW = 0.024;
inline constexpr double kLnaW = 0.018;

// p_rx + p_adc + p_dac + p_tx: the analog power of one full transceiver.
double analog_power(const ComponentPowers& cp);

// Static power cost of running a scheme on this hardware:
//   phi = 3/eta, psi = 1/eta,
//   p_c_s / p_c_r from the blocks each node must power (decoder count
//   differs per scheme; AF relays skip conversion and decoding entirely),
//   total p_c = 3 p_c_s + p_c_r.
// The pessimistic NNC variant charges one decoder per decoded message
// instead of amortizing joint decoding. The outer bound has no hardware
// realization and is rejected with UnsupportedSchemeError.
gee::PowerCost scheme_power_profile(SchemeId id, const ComponentPowers& cp,
                                    bool pessimistic_nnc = false);

gee::PowerCost scheme_power_profile(SchemeId id, bool pessimistic_nnc = false);

inline constexpr double kBoltzmannJPerK = 1.380649e-23;

struct LinkBudget {
    double gain_db = -65.8;       // end-to-end channel gain
    double bandwidth_hz = 25e9;
    double temperature_k = 290.0;

    LinkBudget() = default;
    LinkBudget(double gain_db_, double bandwidth_hz_, double temperature_k_)
        : gain_db(gain_db_), bandwidth_hz(bandwidth_hz_), temperature_k(temperature_k_) {
        if (!(bandwidth_hz > 0.0) || !(temperature_k > 0.0)) {
            throw std::invalid_argument("LinkBudget: bandwidth and temperature must be > 0");
        }
    }
};

double channel_gain_linear(const LinkBudget& lb);

// Thermal noise floor k_B * T * B in watts.
double noise_power_w(const LinkBudget& lb);

// Received SNR of a transmission at p_tx_w watts: p_tx * gain / (k_B T B).
double effective_channel(const LinkBudget& lb, double p_tx_w);

// Noise power referred through the channel gain: k_B T B / gain. Feeding
// SymmetricChannel with physical transmit powers and this noise reproduces
// the link's true SNRs (all rate expressions depend on power/noise ratios
// only).
double effective_noise_w(const LinkBudget& lb);

}  // namespace mwrc::power_model
