// Rayleigh fading generator. Channel coefficients are zero-mean circularly
// symmetric complex Gaussian with the configured mean power per link, so the
// squared magnitudes are exponential. Draws are deterministic per
// (master_seed, stream_id, lane): substream seeds come from a splitmix64
// chain, which keeps shards reproducible independent of worker count.

#pragma once

#include <complex>
#include <cstdint>
#include <random>
#include <vector>

#include "dfnoma/config.hpp"

namespace dfnoma {

struct SeedSpec {
    std::uint64_t master_seed = 42;
    std::uint64_t stream_id = 0;
};

struct ChannelRealization {
    std::complex<double> h_sr, h_r1, h_r2;
    double gamma_sr = 0.0, gamma_r1 = 0.0, gamma_r2 = 0.0;  // |h|^2
};

std::uint64_t splitmix64(std::uint64_t& state);

// 64-bit engine seed for (seed, lane). lane 0 is the stream itself; monte
// carlo shards use lane = shard index.
std::uint64_t substream_seed(const SeedSpec& seed, std::uint64_t lane);

class ChannelGenerator {
public:
    ChannelGenerator(const LinkBudget& budget, const SeedSpec& seed, std::uint64_t lane = 0);

    ChannelRealization next();

    // Building blocks for the symbol-level simulator.
    std::complex<double> rayleigh(double sigma2);  // CN(0, sigma2)
    std::complex<double> awgn_unit();              // CN(0, 1)
    double uniform();                              // [0, 1)
    std::uint32_t bits(int count);                 // `count` fair bits, count <= 32

private:
    double uniform_pos();                          // (0, 1], safe for log()

    LinkBudget budget_;
    std::mt19937_64 eng_;
};

// n fading realizations for the three links, independent across links and
// draws. Same (budget, seed) always yields the identical sequence.
std::vector<ChannelRealization> draw(const LinkBudget& budget, const SeedSpec& seed,
                                     std::size_t n);

}  // namespace dfnoma
