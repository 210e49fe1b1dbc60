#include "mwrc/oracle.hpp"

#include <algorithm>
#include <cmath>

namespace mwrc::oracle {

namespace {

Eigen::Vector3d unit(int i) {
    Eigen::Vector3d v = Eigen::Vector3d::Zero();
    v(i) = 1.0;
    return v;
}

Eigen::Vector3d pair_vec(int i, int j) {
    Eigen::Vector3d v = Eigen::Vector3d::Zero();
    v(i) = 1.0;
    v(j) = 1.0;
    return v;
}

void add_singles(RateRegion& r, double rhs) {
    for (int i = 0; i < 3; ++i) {
        r.constraints.push_back({unit(i), rhs});
    }
}

void add_pairs(RateRegion& r, double rhs) {
    for (int i = 0; i < 3; ++i) {
        for (int j = i + 1; j < 3; ++j) {
            r.constraints.push_back({pair_vec(i, j), rhs});
        }
    }
}

}  // namespace

RateRegion outer_bound_region(const SymmetricChannel& ch) {
    RateRegion r;
    add_pairs(r, capacity(ch.p_r / ch.n_s));   // broadcast cuts
    add_singles(r, capacity(ch.p_s / ch.n_r)); // per-user uplink cuts
    return r;
}

RateRegion df_region(const SymmetricChannel& ch) {
    RateRegion r;
    // Multiple-access side at the relay: every nonempty user subset.
    add_singles(r, capacity(ch.p_s / ch.n_r));
    add_pairs(r, capacity(2.0 * ch.p_s / ch.n_r));
    r.constraints.push_back({Eigen::Vector3d::Ones(), capacity(3.0 * ch.p_s / ch.n_r)});
    // Broadcast side: each user must receive the two others' messages.
    add_pairs(r, capacity(ch.p_r / ch.n_s));
    return r;
}

RateRegion af_snd_region(const SymmetricChannel& ch) {
    const double e = ch.n_r * ch.p_r + ch.n_s * (ch.n_r + 3.0 * ch.p_s);
    RateRegion r;
    add_singles(r, capacity(ch.p_s * ch.p_r / e));
    add_pairs(r, capacity(2.0 * ch.p_s * ch.p_r / e));
    return r;
}

RateRegion nnc_region(const SymmetricChannel& ch, double q0) {
    if (!(q0 > 0.0)) {
        throw std::invalid_argument("nnc_region: q0 must be > 0");
    }
    RateRegion r;
    add_singles(r, capacity(ch.p_s / (ch.n_r + q0)));
    add_pairs(r, capacity(2.0 * ch.p_s / (ch.n_r + q0)));
    // Relay-to-user bottleneck: downlink capacity minus the quantization
    // penalty. Negative for very small q0, making the region empty.
    add_pairs(r, capacity(ch.p_r / ch.n_s) - capacity(ch.n_r / q0));
    return r;
}

double lp_max_sum_rate(const RateRegion& region) {
    // Collect region constraints plus R_i >= 0, then enumerate all triples
    // of active constraints as vertex candidates.
    std::vector<Eigen::Vector3d> coeff;
    std::vector<double> rhs;
    for (const auto& c : region.constraints) {
        coeff.push_back(c.coeff);
        rhs.push_back(c.rhs);
    }
    for (int i = 0; i < 3; ++i) {
        coeff.push_back(-unit(i));
        rhs.push_back(0.0);
    }

    const int m = static_cast<int>(coeff.size());
    const double feas_tol = 1e-9;
    bool found = false;
    double best = 0.0;

    for (int i = 0; i < m; ++i) {
        for (int j = i + 1; j < m; ++j) {
            for (int k = j + 1; k < m; ++k) {
                Eigen::Matrix3d a;
                a.row(0) = coeff[i].transpose();
                a.row(1) = coeff[j].transpose();
                a.row(2) = coeff[k].transpose();
                const Eigen::Vector3d b(rhs[i], rhs[j], rhs[k]);
                const Eigen::Vector3d x = a.partialPivLu().solve(b);
                if (!x.allFinite() || (a * x - b).cwiseAbs().maxCoeff() > 1e-9) {
                    continue;  // singular triple
                }
                bool feasible = true;
                for (int c = 0; c < m && feasible; ++c) {
                    feasible = coeff[c].dot(x) <= rhs[c] + feas_tol;
                }
                if (!feasible) {
                    continue;
                }
                found = true;
                best = std::max(best, x.sum());
            }
        }
    }
    if (!found) {
        throw DegenerateRegionError("lp_max_sum_rate: region has no feasible vertex");
    }
    return best;
}

GridResult grid_search_gee(const gee::RateObjective& obj, const gee::PowerCost& cost,
                           const PowerLimits& limits, int grid_n) {
    if (grid_n < 2) {
        throw std::invalid_argument("grid_search_gee: grid_n must be >= 2");
    }
    GridResult best;
    best.value = -1.0;
    for (int i = 0; i < grid_n; ++i) {
        const double ps = limits.p_s_max * i / (grid_n - 1);
        for (int j = 0; j < grid_n; ++j) {
            const double pr = limits.p_r_max * j / (grid_n - 1);
            const double v = gee_value(obj, {ps, pr}, cost);
            if (v > best.value) {
                best.value = v;
                best.profile = {ps, pr};
            }
        }
    }
    return best;
}

Q0SweepResult nnc_q0_sweep(const SymmetricChannel& ch, const std::vector<double>& q0_grid) {
    if (q0_grid.empty()) {
        throw std::invalid_argument("nnc_q0_sweep: empty grid");
    }
    Q0SweepResult best;
    best.best_sum_rate = -1.0;
    for (const double q0 : q0_grid) {
        double rate = 0.0;
        try {
            rate = lp_max_sum_rate(nnc_region(ch, q0));
        } catch (const DegenerateRegionError&) {
            rate = 0.0;  // empty region: the relay link cannot carry anything
        }
        if (rate > best.best_sum_rate) {
            best.best_sum_rate = rate;
            best.best_q0 = q0;
        }
    }
    return best;
}

}  // namespace mwrc::oracle
