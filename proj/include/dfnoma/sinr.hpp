// Effective per-user SINRs for one channel realization, with the
// channel-dependent residual-interference term after SIC: the canceled
// symbol's received power survives scaled by the deterministic coefficient
// xi, so the residual stays coupled to the fading draw.

#pragma once

#include "dfnoma/channel.hpp"
#include "dfnoma/config.hpp"

namespace dfnoma {

// Four effective SINRs per realization: both symbols on the first hop (at
// the relay) and each user's own symbol on the second hop.
struct SinrSet {
    double sinr_1_hop1 = 0.0;  // x1 at the relay
    double sinr_2_hop1 = 0.0;  // x2 at the relay
    double sinr_1_hop2 = 0.0;  // x1 at D1
    double sinr_2_hop2 = 0.0;  // x2 at D2
};

struct RatePair {
    double r1 = 0.0;  // [bit/s/Hz]
    double r2 = 0.0;
};

// Reversed ordering: relay detects x1 first (no SIC penalty on x1), then x2
// behind the xi_r residual. Second hop: D2 plain detection, D1 SIC.
SinrSet sinr_reversed(const ChannelRealization& ch, const LinkBudget& budget,
                      const SystemConfig& cfg);

// Conventional ordering: relay detects x2 first, x1 behind the xi_r
// residual. Second hop identical to the reversed scheme.
SinrSet sinr_conventional(const ChannelRealization& ch, const LinkBudget& budget,
                          const SystemConfig& cfg);

SinrSet compute_sinr(const ChannelRealization& ch, const LinkBudget& budget,
                     const SystemConfig& cfg);

// r_i = 1/2 * min over the two hops of log2(1 + SINR); the 1/2 accounts for
// the two time slots.
RatePair achievable_rates(const SinrSet& s);

}  // namespace dfnoma
