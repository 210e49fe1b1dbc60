#include "mwrc/power_model.hpp"

#include <cmath>

namespace mwrc::power_model {

ComponentPowers default_component_powers() {
    // p_rx aggregates 16 LNAs, two mixers and the LO driver:
    // 16*0.018 + 2*0.017 + 0.024 = 0.346.
    return ComponentPowers(0.346, 0.812, 0.300, 0.800, 0.058, 0.062);
}

double analog_power(const ComponentPowers& cp) {
    return cp.p_rx + cp.p_adc + cp.p_dac + cp.p_tx;
}

gee::PowerCost scheme_power_profile(SchemeId id, const ComponentPowers& cp,
                                    bool pessimistic_nnc) {
    const double phi = 3.0 / cp.eta;
    const double psi = 1.0 / cp.eta;
    const double analog = analog_power(cp);

    double p_c_s = 0.0, p_c_r = 0.0;
    switch (id) {
        case SchemeId::AfIan:
            // Each source decodes the single summed interference-free
            // stream; the relay only amplifies.
            p_c_s = analog + cp.p_dec;
            p_c_r = cp.p_rx + cp.p_tx;
            break;
        case SchemeId::AfSnd:
            // Simultaneous decoding of both unknown messages.
            p_c_s = analog + 2.0 * cp.p_dec;
            p_c_r = cp.p_rx + cp.p_tx;
            break;
        case SchemeId::Df:
            // The relay decodes all three messages.
            p_c_s = analog + 2.0 * cp.p_dec;
            p_c_r = analog + 3.0 * cp.p_dec;
            break;
        case SchemeId::Nnc:
            if (pessimistic_nnc) {
                // One decoder instance per decoded message, plus the
                // relay's quantization treated as a full extra decoder.
                p_c_s = analog + 3.0 * cp.p_dec;
                p_c_r = analog + 4.0 * cp.p_dec;
            } else {
                // The relay compresses without decoding; its quantizer is
                // budgeted at a tenth of a decoder.
                p_c_s = analog + 2.0 * cp.p_dec;
                p_c_r = analog + 0.1 * cp.p_dec;
            }
            break;
        case SchemeId::OuterBound:
            throw UnsupportedSchemeError(
                "scheme_power_profile: the outer bound has no hardware realization");
    }
    return gee::PowerCost::per_node(phi, psi, p_c_s, p_c_r);
}

gee::PowerCost scheme_power_profile(SchemeId id, bool pessimistic_nnc) {
    return scheme_power_profile(id, default_component_powers(), pessimistic_nnc);
}

double channel_gain_linear(const LinkBudget& lb) {
    return std::pow(10.0, lb.gain_db / 10.0);
}

double noise_power_w(const LinkBudget& lb) {
    return kBoltzmannJPerK * lb.temperature_k * lb.bandwidth_hz;
}

double effective_channel(const LinkBudget& lb, double p_tx_w) {
    if (!(p_tx_w >= 0.0)) {
        throw std::invalid_argument("effective_channel: transmit power must be >= 0");
    }
    return p_tx_w * channel_gain_linear(lb) / noise_power_w(lb);
}

double effective_noise_w(const LinkBudget& lb) {
    return noise_power_w(lb) / channel_gain_linear(lb);
}

}  // namespace mwrc::power_model
