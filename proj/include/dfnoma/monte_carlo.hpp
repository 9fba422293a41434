// Simulation oracle, independent of the closed forms.
//
// mc_rates_outage runs SINR-level trials (one fading realization per trial,
// residual interference through the xi coefficients) for ergodic-rate and
// outage estimates. mc_ber runs the full QPSK transmission chain -
// superposition, per-node ML detection, actual cancellation with error
// propagation - where no xi coefficient exists; imperfect cancellation
// emerges from wrongly detected symbols.
//
// Work is split into fixed-size shards, each with its own deterministic
// substream, and reduced in shard order: results are bit-identical for any
// worker count.

#pragma once

#include <cstdint>

#include "dfnoma/channel.hpp"
#include "dfnoma/config.hpp"

namespace dfnoma {

struct McEstimate {
    double value = 0.0;
    double std_err = 0.0;   // sample std / sqrt(n) for means, binomial for probabilities
    std::uint64_t n = 0;    // trials (or bits, for error rates)
    SeedSpec seed;
};

struct McOptions {
    std::uint64_t trials = 1'000'000;
    SeedSpec seed;
    int threads = 0;        // 0 = hardware concurrency
};

struct RatesOutageEstimate {
    McEstimate ec_1, ec_2;  // mean achievable rates [bit/s/Hz]
    McEstimate op_1, op_2;  // empirical Pr[rate < target]
};

RatesOutageEstimate mc_rates_outage(const SystemConfig& cfg, const LinkBudget& budget,
                                    const McOptions& opts);

struct BerOptions {
    std::uint64_t frames = 5'000'000;  // superimposed QPSK symbols (2 bits/user each)
    SeedSpec seed;
    int threads = 0;
    bool genie_sic = false;  // diagnostic: cancel the actually transmitted
                             // symbol instead of the detected one
};

struct BerEstimate {
    McEstimate ber_1, ber_2;  // bit error rates, n counted in bits
    bool genie_sic = false;
};

BerEstimate mc_ber(const SystemConfig& cfg, const LinkBudget& budget,
                   const BerOptions& opts);

}  // namespace dfnoma
