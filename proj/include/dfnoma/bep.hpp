// Closed-form bit-error probabilities for Gray-coded QPSK superposition.
//
// Conditional on the fading power gamma, every detector's BEP is a weighted
// sum of Gaussian tails sum_q w_q * Q(sqrt(2 * nu_q * rho * gamma)); the
// (w, nu) table depends only on which role the symbol plays:
//
//   far role  (detected first, other symbol treated as noise), L = 2:
//     w  = [1/2, 1/2]
//     nu = [(sqrt(p_des) - sqrt(p_int))^2 / 2, (sqrt(p_des) + sqrt(p_int))^2 / 2]
//
//   near role (detected second, after canceling the stronger symbol), L = 5:
//     w  = [1, 1/2, -1/2, -1/2, 1/2]
//     nu = [p_des / 2,
//           (sqrt(p_des) - sqrt(p_int))^2 / 2,
//           (sqrt(p_des) + sqrt(p_int))^2 / 2,
//           (2 sqrt(p_int) - sqrt(p_des))^2 / 2,
//           (2 sqrt(p_int) + sqrt(p_des))^2 / 2]
//
// where p_des is the detected symbol's power fraction and p_int the other
// one's. The near-role table follows from enumerating the four combinations
// of first/second detection outcomes per I/Q dimension; the
// leading p_des/2 term is the clean post-cancellation decision and the
// 2*sqrt(p_int) terms come from subtracting a wrongly detected symbol
// (offset two constellation amplitudes). Both tables sum to 1, so the
// zero-SNR anchor is exactly 1/2. Rayleigh averaging of each Q term gives
// the per-hop ABEP, and per-user hop ABEPs combine across the decode-forward
// chain as p (+) q = p + q - 2pq (an even number of flips cancels).

#pragma once

#include <array>
#include <vector>

#include "dfnoma/config.hpp"

namespace dfnoma {

class ModulationError : public std::runtime_error {
public:
    explicit ModulationError(const std::string& message) : std::runtime_error(message) {}
};

// Gaussian tail probability Q(z) = 1/2 erfc(z / sqrt 2).
double q_function(double z);

struct BepCoefficientTable {
    std::vector<double> weights;  // signed, sum to 1
    std::vector<double> scales;   // nonnegative nu_q
    std::size_t size() const { return weights.size(); }
};

BepCoefficientTable far_user_table(double p_des, double p_int);
BepCoefficientTable near_user_table(double p_des, double p_int);

// Per hop and user: hop 1 tables use the source fractions (reversed: x1 far
// / x2 near; conventional swaps the roles), hop 2 uses the relay fractions
// (x2 far / x1 near for both schemes). Requires m1 = m2 = 4.
struct HopTables {
    BepCoefficientTable user1_hop1, user2_hop1, user1_hop2, user2_hop2;
};

HopTables build_tables(const SystemConfig& cfg);

// BEP conditional on the instantaneous fading power gamma.
double conditional_bep(const BepCoefficientTable& table, double rho, double gamma);

// Rayleigh-averaged BEP of one hop:
// sum_q (w_q / 2) * (1 - sqrt(nu_q rho sigma2 / (1 + nu_q rho sigma2))).
double abep_hop(const BepCoefficientTable& table, double rho, double sigma2);

// End-to-end combination of two independent per-hop error rates.
double combine_e2e(double p_hop1, double p_hop2);

struct BepResult {
    double bep_1_hop1 = 0.0, bep_2_hop1 = 0.0;  // at the relay
    double bep_1_hop2 = 0.0, bep_2_hop2 = 0.0;  // at the destinations
    double bep_e2e_1 = 0.0, bep_e2e_2 = 0.0;
};

BepResult bep_e2e(const SystemConfig& cfg, const LinkBudget& budget);

}  // namespace dfnoma
