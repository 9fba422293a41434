#include "dfnoma/channel.hpp"

#include <cmath>

namespace dfnoma {

namespace {
constexpr double kTwoPi = 6.28318530717958647692;
constexpr std::uint64_t kGolden = 0x9E3779B97F4A7C15ull;
}  // namespace

std::uint64_t splitmix64(std::uint64_t& state) {
    std::uint64_t z = (state += kGolden);
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
    return z ^ (z >> 31);
}

std::uint64_t substream_seed(const SeedSpec& seed, std::uint64_t lane) {
    std::uint64_t s = seed.master_seed;
    std::uint64_t a = splitmix64(s);
    s = a ^ ((seed.stream_id + 1) * kGolden);
    a = splitmix64(s);
    s = a ^ ((lane + 1) * 0xBF58476D1CE4E5B9ull);
    return splitmix64(s);
}

ChannelGenerator::ChannelGenerator(const LinkBudget& budget, const SeedSpec& seed,
                                   std::uint64_t lane)
    : budget_(budget), eng_(substream_seed(seed, lane)) {}

double ChannelGenerator::uniform() {
    return static_cast<double>(eng_() >> 11) * 0x1.0p-53;
}

double ChannelGenerator::uniform_pos() {
    return static_cast<double>((eng_() >> 11) + 1) * 0x1.0p-53;
}

std::complex<double> ChannelGenerator::rayleigh(double sigma2) {
    // Polar form: |h|^2 ~ Exp(mean sigma2), phase uniform. Equivalent to
    // independent N(0, sigma2/2) real and imaginary parts.
    const double r = std::sqrt(-sigma2 * std::log(uniform_pos()));
    const double theta = kTwoPi * uniform();
    return {r * std::cos(theta), r * std::sin(theta)};
}

std::complex<double> ChannelGenerator::awgn_unit() { return rayleigh(1.0); }

std::uint32_t ChannelGenerator::bits(int count) {
    return static_cast<std::uint32_t>(eng_() >> (64 - count));
}

ChannelRealization ChannelGenerator::next() {
    ChannelRealization ch;
    ch.h_sr = rayleigh(budget_.sigma2_sr);
    ch.h_r1 = rayleigh(budget_.sigma2_r1);
    ch.h_r2 = rayleigh(budget_.sigma2_r2);
    ch.gamma_sr = std::norm(ch.h_sr);
    ch.gamma_r1 = std::norm(ch.h_r1);
    ch.gamma_r2 = std::norm(ch.h_r2);
    return ch;
}

std::vector<ChannelRealization> draw(const LinkBudget& budget, const SeedSpec& seed,
                                     std::size_t n) {
    ChannelGenerator gen(budget, seed);
    std::vector<ChannelRealization> out;
    out.reserve(n);
    for (std::size_t i = 0; i < n; ++i) out.push_back(gen.next());
    return out;
}

}  // namespace dfnoma
