#include "dfnoma/bep.hpp"

#include <cassert>
#include <cmath>

namespace dfnoma {

namespace {

void check_weights(const BepCoefficientTable& t) {
    double sum = 0.0;
    for (double w : t.weights) sum += w;
    assert(std::abs(sum - 1.0) < 1e-12);
    (void)sum;
}

}  // namespace

double q_function(double z) { return 0.5 * std::erfc(z / std::sqrt(2.0)); }

BepCoefficientTable far_user_table(double p_des, double p_int) {
    const double sd = std::sqrt(p_des), si = std::sqrt(p_int);
    BepCoefficientTable t;
    t.weights = {0.5, 0.5};
    t.scales = {0.5 * (sd - si) * (sd - si), 0.5 * (sd + si) * (sd + si)};
    check_weights(t);
    return t;
}

BepCoefficientTable near_user_table(double p_des, double p_int) {
    const double sd = std::sqrt(p_des), si = std::sqrt(p_int);
    BepCoefficientTable t;
    t.weights = {1.0, 0.5, -0.5, -0.5, 0.5};
    t.scales = {0.5 * p_des,
                0.5 * (sd - si) * (sd - si),
                0.5 * (sd + si) * (sd + si),
                0.5 * (2.0 * si - sd) * (2.0 * si - sd),
                0.5 * (2.0 * si + sd) * (2.0 * si + sd)};
    check_weights(t);
    return t;
}

HopTables build_tables(const SystemConfig& cfg) {
    if (cfg.m1 != 4 || cfg.m2 != 4)
        throw ModulationError("BEP coefficient tables are only available for m1 = m2 = 4");

    const double a1 = cfg.alpha1, a2 = cfg.alpha2();
    const double b1 = cfg.beta1, b2 = cfg.beta2();

    HopTables t;
    if (cfg.scheme == Scheme::Reversed) {
        t.user1_hop1 = far_user_table(a1, a2);
        t.user2_hop1 = near_user_table(a2, a1);
    } else {
        t.user2_hop1 = far_user_table(a2, a1);
        t.user1_hop1 = near_user_table(a1, a2);
    }
    // Second hop is identical for both schemes: x2 carries the larger
    // fraction, D1 cancels it before detecting its own symbol.
    t.user2_hop2 = far_user_table(b2, b1);
    t.user1_hop2 = near_user_table(b1, b2);
    return t;
}

double conditional_bep(const BepCoefficientTable& table, double rho, double gamma) {
    double p = 0.0;
    for (std::size_t q = 0; q < table.size(); ++q)
        p += table.weights[q] * q_function(std::sqrt(2.0 * table.scales[q] * rho * gamma));
    return p;
}

double abep_hop(const BepCoefficientTable& table, double rho, double sigma2) {
    double p = 0.0;
    for (std::size_t q = 0; q < table.size(); ++q) {
        const double x = table.scales[q] * rho * sigma2;
        p += 0.5 * table.weights[q] * (1.0 - std::sqrt(x / (1.0 + x)));
    }
    assert(p >= 0.0 && p <= 0.5 + 1e-12);
    return p;
}

double combine_e2e(double p_hop1, double p_hop2) {
    return p_hop1 + p_hop2 - 2.0 * p_hop1 * p_hop2;
}

BepResult bep_e2e(const SystemConfig& cfg, const LinkBudget& b) {
    const HopTables t = build_tables(cfg);
    BepResult r;
    r.bep_1_hop1 = abep_hop(t.user1_hop1, b.rho_s, b.sigma2_sr);
    r.bep_2_hop1 = abep_hop(t.user2_hop1, b.rho_s, b.sigma2_sr);
    r.bep_1_hop2 = abep_hop(t.user1_hop2, b.rho_r, b.sigma2_r1);
    r.bep_2_hop2 = abep_hop(t.user2_hop2, b.rho_r, b.sigma2_r2);
    r.bep_e2e_1 = combine_e2e(r.bep_1_hop1, r.bep_1_hop2);
    r.bep_e2e_2 = combine_e2e(r.bep_2_hop1, r.bep_2_hop2);
    return r;
}

}  // namespace dfnoma
