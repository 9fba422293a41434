// Closed-form outage probabilities. A user is in outage when the end-to-end
// achievable rate falls below its target; with exponential fading per hop
// the complementary probability factors into two exponentials. When the
// SINR threshold sits above an interference-limited ceiling the
// corresponding denominator turns nonpositive and the outage is certain.

#pragma once

#include "dfnoma/config.hpp"

namespace dfnoma {

struct OutageResult {
    double op_1 = 0.0, op_2 = 0.0;       // outage probabilities in [0, 1]
    double phi_1 = 0.0, phi_2 = 0.0;     // SINR thresholds 2^(2*rate) - 1
    bool ceiling_1 = false;              // true when op_i = 1 because phi_i
    bool ceiling_2 = false;              //   exceeds a SINR ceiling
};

OutageResult outage(const SystemConfig& cfg, const LinkBudget& budget);

}  // namespace dfnoma
