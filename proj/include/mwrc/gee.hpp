#pragma once

// Global energy efficiency (GEE) objectives: sum rate divided by total
// consumed power. Two families cover all schemes:
//
//   family 1 (outer bound, decode-and-forward):
//       R(p_s, p_r) = min{ a1 C(alpha1 p_r/n_s), a2 C(alpha2 p_s/n_r) }
//
//   family 2 (NNC, AF variants):
//       R(p_s, p_r) = alpha C(gamma),  gamma = p_s p_r/(a p_s + b p_r + c)
//
// The consumed power is phi*p_s + psi*p_r + p_c in both families.

#include <utility>
#include <variant>

#include "mwrc/core.hpp"

namespace mwrc::gee {

struct Gee1Params {
    double a1, alpha1;  // downlink term: a1 * C(alpha1 * p_r / n_s)
    double a2, alpha2;  // uplink term:   a2 * C(alpha2 * p_s / n_r)

    Gee1Params(double a1_, double alpha1_, double a2_, double alpha2_)
        : a1(a1_), alpha1(alpha1_), a2(a2_), alpha2(alpha2_) {
        if (!(a1 > 0.0) || !(alpha1 > 0.0) || !(a2 > 0.0) || !(alpha2 > 0.0)) {
            throw std::invalid_argument("Gee1Params: all coefficients must be > 0");
        }
    }
};

struct Gee2Params {
    double alpha;    // rate prefactor
    double a, b, c;  // gamma = p_s p_r / (a p_s + b p_r + c)

    Gee2Params(double alpha_, double a_, double b_, double c_)
        : alpha(alpha_), a(a_), b(b_), c(c_) {
        if (!(alpha > 0.0) || !(a > 0.0) || !(b > 0.0) || !(c > 0.0)) {
            throw std::invalid_argument("Gee2Params: all coefficients must be > 0");
        }
    }

    // Curvature constant c/(a*b); appears in the per-user utility bound.
    double d() const { return c / (a * b); }
};

// Power consumption model. phi scales the aggregate source transmit power,
// psi the relay transmit power, p_c is the total static circuit power used
// by the cooperative objective. p_c_s / p_c_r are the source-side and
// relay-side static terms used by the competitive game's utilities; how
// they relate to p_c depends on the convention (see the factories).
struct PowerCost {
    double phi, psi, p_c;
    double p_c_s, p_c_r;

    PowerCost(double phi_, double psi_, double p_c_, double p_c_s_, double p_c_r_)
        : phi(phi_), psi(psi_), p_c(p_c_), p_c_s(p_c_s_), p_c_r(p_c_r_) {
        if (!(phi >= 3.0)) throw std::invalid_argument("PowerCost: phi must be >= 3");
        if (!(psi >= 1.0)) throw std::invalid_argument("PowerCost: psi must be >= 1");
        if (!(p_c > 0.0) || !(p_c_s > 0.0) || !(p_c_r > 0.0)) {
            throw std::invalid_argument("PowerCost: static powers must be > 0");
        }
    }

    // Every node draws the same share of a given total: the three sources
    // together account for 3/4 of p_c, the relay for 1/4.
    static PowerCost with_total(double phi, double psi, double p_c) {
        return PowerCost(phi, psi, p_c, 0.75 * p_c, 0.25 * p_c);
    }

    // Hardware convention: p_c_s is the static power of one source and
    // p_c_r that of the relay, so the network total is 3*p_c_s + p_c_r.
    static PowerCost per_node(double phi, double psi, double p_c_s, double p_c_r) {
        return PowerCost(phi, psi, 3.0 * p_c_s + p_c_r, p_c_s, p_c_r);
    }
};

struct PowerProfile {
    double p_s = 0.0;
    double p_r = 0.0;
};

// Rate-expression coefficients per scheme. Family-1 coefficients are
// noise-free (noises enter through the C() arguments); family-2 absorbs
// the noises into (a, b, c).
Gee1Params gee1_params_for(SchemeId id);                                // OuterBound, Df
Gee2Params gee2_params_for(SchemeId id, double n_s, double n_r);        // Nnc, AfSnd, AfIan

double gamma2(const Gee2Params& q, const PowerProfile& p);

double gee1_rate(const Gee1Params& q, double n_s, double n_r, const PowerProfile& p);
double gee2_rate(const Gee2Params& q, const PowerProfile& p);

double consumed_power(const PowerCost& cost, const PowerProfile& p);

double gee_value(const Gee1Params& q, double n_s, double n_r,
                 const PowerProfile& p, const PowerCost& cost);
double gee_value(const Gee2Params& q, const PowerProfile& p, const PowerCost& cost);

// Per-player energy efficiencies of the competitive game:
//   u_s = R / (p_s + p_c_s) for one source, u_r = R / (p_r + p_c_r).
std::pair<double, double> utilities(const Gee1Params& q, double n_s, double n_r,
                                    const PowerProfile& p, const PowerCost& cost);
std::pair<double, double> utilities(const Gee2Params& q, const PowerProfile& p,
                                    const PowerCost& cost);

// Uniform rate evaluator over both families, used by grid oracles and
// sweeps. Holds the scheme tag plus the resolved coefficients.
class RateObjective {
public:
    static RateObjective for_scheme(SchemeId id, double n_s, double n_r);

    double rate(const PowerProfile& p) const;
    SchemeId scheme() const { return scheme_; }

private:
    struct Family1 {
        Gee1Params params;
        double n_s, n_r;
    };
    RateObjective(SchemeId id, std::variant<Family1, Gee2Params> v)
        : scheme_(id), form_(std::move(v)) {}

    SchemeId scheme_;
    std::variant<Family1, Gee2Params> form_;
};

double gee_value(const RateObjective& obj, const PowerProfile& p, const PowerCost& cost);

}  // namespace mwrc::gee
