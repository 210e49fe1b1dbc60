#include "mwrc/gee.hpp"

namespace mwrc::gee {

Gee1Params gee1_params_for(SchemeId id) {
    switch (id) {
        case SchemeId::OuterBound:
            return Gee1Params(1.5, 1.0, 3.0, 1.0);
        case SchemeId::Df:
            return Gee1Params(1.5, 1.0, 1.0, 3.0);
        default:
            throw UnsupportedSchemeError("gee1_params_for: defined for outer_bound, df");
    }
}

Gee2Params gee2_params_for(SchemeId id, double n_s, double n_r) {
    if (!(n_s > 0.0) || !(n_r > 0.0)) {
        throw std::invalid_argument("gee2_params_for: noise powers must be > 0");
    }
    switch (id) {
        case SchemeId::Nnc:
            return Gee2Params(1.5, n_s, 0.5 * n_r, 0.5 * n_s * n_r);
        case SchemeId::AfSnd:
            return Gee2Params(1.5, 1.5 * n_s, 0.5 * n_r, 0.5 * n_s * n_r);
        case SchemeId::AfIan:
            return Gee2Params(1.0, n_s, n_r / 3.0, n_s * n_r / 3.0);
        default:
            throw UnsupportedSchemeError("gee2_params_for: defined for nnc, af_snd, af_ian");
    }
}

double gamma2(const Gee2Params& q, const PowerProfile& p) {
    return p.p_s * p.p_r / (q.a * p.p_s + q.b * p.p_r + q.c);
}

double gee1_rate(const Gee1Params& q, double n_s, double n_r, const PowerProfile& p) {
    const double down = q.a1 * capacity(q.alpha1 * p.p_r / n_s);
    const double up = q.a2 * capacity(q.alpha2 * p.p_s / n_r);
    return std::min(down, up);
}

double gee2_rate(const Gee2Params& q, const PowerProfile& p) {
    return q.alpha * capacity(gamma2(q, p));
}

double consumed_power(const PowerCost& cost, const PowerProfile& p) {
    return cost.phi * p.p_s + cost.psi * p.p_r + cost.p_c;
}

double gee_value(const Gee1Params& q, double n_s, double n_r,
                 const PowerProfile& p, const PowerCost& cost) {
    return gee1_rate(q, n_s, n_r, p) / consumed_power(cost, p);
}

double gee_value(const Gee2Params& q, const PowerProfile& p, const PowerCost& cost) {
    return gee2_rate(q, p) / consumed_power(cost, p);
}

namespace {

std::pair<double, double> split_utilities(double rate, const PowerProfile& p,
                                          const PowerCost& cost) {
    return {rate / (p.p_s + cost.p_c_s), rate / (p.p_r + cost.p_c_r)};
}

}  // namespace

std::pair<double, double> utilities(const Gee1Params& q, double n_s, double n_r,
                                    const PowerProfile& p, const PowerCost& cost) {
    return split_utilities(gee1_rate(q, n_s, n_r, p), p, cost);
}

std::pair<double, double> utilities(const Gee2Params& q, const PowerProfile& p,
                                    const PowerCost& cost) {
    return split_utilities(gee2_rate(q, p), p, cost);
}

RateObjective RateObjective::for_scheme(SchemeId id, double n_s, double n_r) {
    if (id == SchemeId::OuterBound || id == SchemeId::Df) {
        return RateObjective(id, Family1{gee1_params_for(id), n_s, n_r});
    }
    return RateObjective(id, gee2_params_for(id, n_s, n_r));
}

double RateObjective::rate(const PowerProfile& p) const {
    if (const auto* f1 = std::get_if<Family1>(&form_)) {
        return gee1_rate(f1->params, f1->n_s, f1->n_r, p);
    }
    return gee2_rate(std::get<Gee2Params>(form_), p);
}

double gee_value(const RateObjective& obj, const PowerProfile& p, const PowerCost& cost) {
    return obj.rate(p) / consumed_power(cost, p);
}

}  // namespace mwrc::gee
