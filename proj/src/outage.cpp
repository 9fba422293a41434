#include "dfnoma/outage.hpp"

#include <cmath>

namespace dfnoma {

namespace {

// Pr[min of the two hop SINRs < phi] with hop CDFs 1 - exp(-phi/(den*rho*sigma2)).
// den1/den2 already carry the power fractions and any SIC residual.
double outage_user(double phi, double den1, double rho_a, double sigma2_a, double den2,
                   double rho_b, double sigma2_b, bool& ceiling) {
    if (den1 <= 0.0 || den2 <= 0.0) {
        ceiling = true;
        return 1.0;
    }
    ceiling = false;
    const double e1 = phi / (den1 * rho_a * sigma2_a);
    const double e2 = phi / (den2 * rho_b * sigma2_b);
    return 1.0 - std::exp(-e1 - e2);
}

}  // namespace

OutageResult outage(const SystemConfig& cfg, const LinkBudget& b) {
    OutageResult r;
    r.phi_1 = std::exp2(2.0 * cfg.rate_target_1) - 1.0;
    r.phi_2 = std::exp2(2.0 * cfg.rate_target_2) - 1.0;

    const double a1 = cfg.alpha1, a2 = cfg.alpha2();
    const double b1 = cfg.beta1, b2 = cfg.beta2();

    double den1_hop1, den2_hop1;
    if (cfg.scheme == Scheme::Reversed) {
        den1_hop1 = a1 - a2 * r.phi_1;            // x1 detected first
        den2_hop1 = a2 - a1 * b.xi_r * r.phi_2;   // x2 behind the SIC residual
    } else {
        den1_hop1 = a1 - a2 * b.xi_r * r.phi_1;   // x1 behind the SIC residual
        den2_hop1 = a2 - a1 * r.phi_2;            // x2 detected first
    }
    const double den1_hop2 = b1 - b2 * b.xi_1 * r.phi_1;
    const double den2_hop2 = b2 - b1 * r.phi_2;

    r.op_1 = outage_user(r.phi_1, den1_hop1, b.rho_s, b.sigma2_sr, den1_hop2, b.rho_r,
                         b.sigma2_r1, r.ceiling_1);
    r.op_2 = outage_user(r.phi_2, den2_hop1, b.rho_s, b.sigma2_sr, den2_hop2, b.rho_r,
                         b.sigma2_r2, r.ceiling_2);
    return r;
}

}  // namespace dfnoma
