#include "dfnoma/sinr.hpp"

#include <algorithm>
#include <cmath>

namespace dfnoma {

namespace {

double ratio(double num, double den) { return num / den; }

// Second-hop SINRs are shared by both schemes: D2 detects its own symbol
// against x1's full power, D1 cancels x2 and sees the xi_1 residual.
void fill_hop2(SinrSet& s, const LinkBudget& b, const SystemConfig& cfg,
               const ChannelRealization& ch) {
    const double b1 = cfg.beta1, b2 = cfg.beta2();
    s.sinr_2_hop2 = ratio(b.rho_r * b2 * ch.gamma_r2, b.rho_r * b1 * ch.gamma_r2 + 1.0);
    s.sinr_1_hop2 = ratio(b.rho_r * b1 * ch.gamma_r1, b.xi_1 * b.rho_r * b2 * ch.gamma_r1 + 1.0);
}

}  // namespace

SinrSet sinr_reversed(const ChannelRealization& ch, const LinkBudget& b,
                      const SystemConfig& cfg) {
    const double a1 = cfg.alpha1, a2 = cfg.alpha2();
    SinrSet s;
    s.sinr_1_hop1 = ratio(b.rho_s * a1 * ch.gamma_sr, b.rho_s * a2 * ch.gamma_sr + 1.0);
    s.sinr_2_hop1 = ratio(b.rho_s * a2 * ch.gamma_sr, b.xi_r * b.rho_s * a1 * ch.gamma_sr + 1.0);
    fill_hop2(s, b, cfg, ch);
    return s;
}

SinrSet sinr_conventional(const ChannelRealization& ch, const LinkBudget& b,
                          const SystemConfig& cfg) {
    const double a1 = cfg.alpha1, a2 = cfg.alpha2();  // alpha1 is alpha1* here
    SinrSet s;
    s.sinr_2_hop1 = ratio(b.rho_s * a2 * ch.gamma_sr, b.rho_s * a1 * ch.gamma_sr + 1.0);
    s.sinr_1_hop1 = ratio(b.rho_s * a1 * ch.gamma_sr, b.xi_r * b.rho_s * a2 * ch.gamma_sr + 1.0);
    fill_hop2(s, b, cfg, ch);
    return s;
}

SinrSet compute_sinr(const ChannelRealization& ch, const LinkBudget& budget,
                     const SystemConfig& cfg) {
    return cfg.scheme == Scheme::Reversed ? sinr_reversed(ch, budget, cfg)
                                          : sinr_conventional(ch, budget, cfg);
}

RatePair achievable_rates(const SinrSet& s) {
    RatePair r;
    r.r1 = 0.5 * std::log2(1.0 + std::min(s.sinr_1_hop1, s.sinr_1_hop2));
    r.r2 = 0.5 * std::log2(1.0 + std::min(s.sinr_2_hop1, s.sinr_2_hop2));
    return r;
}

}  // namespace dfnoma
