#include "dfnoma/monte_carlo.hpp"

#include <atomic>
#include <bit>
#include <cmath>
#include <complex>
#include <functional>
#include <thread>
#include <vector>

#include "dfnoma/sinr.hpp"

namespace dfnoma {

namespace {

constexpr std::uint64_t kShardSize = 1u << 15;

// Runs work(shard_index, begin, end) over [0, total) in fixed-size shards.
// Shard indexing is independent of the thread count.
void run_shards(std::uint64_t total, int threads,
                const std::function<void(std::uint64_t, std::uint64_t, std::uint64_t)>& work) {
    const std::uint64_t n_shards = (total + kShardSize - 1) / kShardSize;
    unsigned hw = std::thread::hardware_concurrency();
    if (hw == 0) hw = 1;
    unsigned n_threads = threads > 0 ? static_cast<unsigned>(threads) : hw;
    if (n_threads > n_shards) n_threads = static_cast<unsigned>(n_shards);

    std::atomic<std::uint64_t> next{0};
    auto worker = [&] {
        for (;;) {
            const std::uint64_t s = next.fetch_add(1, std::memory_order_relaxed);
            if (s >= n_shards) return;
            const std::uint64_t begin = s * kShardSize;
            const std::uint64_t end = std::min(begin + kShardSize, total);
            work(s, begin, end);
        }
    };

    if (n_threads <= 1) {
        worker();
        return;
    }
    std::vector<std::thread> pool;
    pool.reserve(n_threads);
    for (unsigned t = 0; t < n_threads; ++t) pool.emplace_back(worker);
    for (auto& th : pool) th.join();
}

McEstimate mean_estimate(double sum, double sumsq, std::uint64_t n, const SeedSpec& seed) {
    McEstimate e;
    e.n = n;
    e.seed = seed;
    e.value = sum / static_cast<double>(n);
    const double var =
        n > 1 ? std::max(0.0, (sumsq - static_cast<double>(n) * e.value * e.value) /
                                  static_cast<double>(n - 1))
              : 0.0;
    e.std_err = std::sqrt(var / static_cast<double>(n));
    return e;
}

McEstimate probability_estimate(std::uint64_t count, std::uint64_t n, const SeedSpec& seed) {
    McEstimate e;
    e.n = n;
    e.seed = seed;
    e.value = static_cast<double>(count) / static_cast<double>(n);
    e.std_err = std::sqrt(e.value * (1.0 - e.value) / static_cast<double>(n));
    return e;
}

}  // namespace

RatesOutageEstimate mc_rates_outage(const SystemConfig& cfg, const LinkBudget& budget,
                                    const McOptions& opts) {
    if (opts.trials == 0) throw ConfigError("trials", "trial count must be positive");
    struct Accum {
        double sum1 = 0.0, sum2 = 0.0, sq1 = 0.0, sq2 = 0.0;
        std::uint64_t out1 = 0, out2 = 0;
    };
    const std::uint64_t n = opts.trials;
    const std::uint64_t n_shards = (n + kShardSize - 1) / kShardSize;
    std::vector<Accum> partial(n_shards);

    run_shards(n, opts.threads, [&](std::uint64_t shard, std::uint64_t begin, std::uint64_t end) {
        ChannelGenerator gen(budget, opts.seed, shard);
        Accum acc;
        for (std::uint64_t t = begin; t < end; ++t) {
            const ChannelRealization ch = gen.next();
            const RatePair r = achievable_rates(compute_sinr(ch, budget, cfg));
            acc.sum1 += r.r1;
            acc.sum2 += r.r2;
            acc.sq1 += r.r1 * r.r1;
            acc.sq2 += r.r2 * r.r2;
            acc.out1 += r.r1 < cfg.rate_target_1;
            acc.out2 += r.r2 < cfg.rate_target_2;
        }
        partial[shard] = acc;
    });

    Accum total;
    for (const Accum& a : partial) {
        total.sum1 += a.sum1;
        total.sum2 += a.sum2;
        total.sq1 += a.sq1;
        total.sq2 += a.sq2;
        total.out1 += a.out1;
        total.out2 += a.out2;
    }

    RatesOutageEstimate est;
    est.ec_1 = mean_estimate(total.sum1, total.sq1, n, opts.seed);
    est.ec_2 = mean_estimate(total.sum2, total.sq2, n, opts.seed);
    est.op_1 = probability_estimate(total.out1, n, opts.seed);
    est.op_2 = probability_estimate(total.out2, n, opts.seed);
    return est;
}

namespace {

// Unit-energy Gray-mapped QPSK; symbol index packs the two bits.
inline std::complex<double> qpsk_point(std::uint32_t k) {
    constexpr double s = 0.70710678118654752440;
    return {k & 2u ? -s : s, k & 1u ? -s : s};
}

// Nearest point of the user's own scaled constellation c * x_k.
inline std::uint32_t ml_detect(std::complex<double> y, std::complex<double> c) {
    std::uint32_t best = 0;
    double best_metric = std::norm(y - c * qpsk_point(0));
    for (std::uint32_t k = 1; k < 4; ++k) {
        const double m = std::norm(y - c * qpsk_point(k));
        if (m < best_metric) {
            best_metric = m;
            best = k;
        }
    }
    return best;
}

}  // namespace

BerEstimate mc_ber(const SystemConfig& cfg, const LinkBudget& budget, const BerOptions& opts) {
    if (cfg.m1 != 4 || cfg.m2 != 4)
        throw ConfigError("m1", "symbol-level BER simulation supports only m1 = m2 = 4");
    if (opts.frames == 0) throw ConfigError("ber_bits", "frame count must be positive");

    struct Accum {
        std::uint64_t err1 = 0, err2 = 0;
    };
    const std::uint64_t frames = opts.frames;
    const std::uint64_t n_shards = (frames + kShardSize - 1) / kShardSize;
    std::vector<Accum> partial(n_shards);

    const double sa1 = std::sqrt(cfg.alpha1), sa2 = std::sqrt(cfg.alpha2());
    const double sb1 = std::sqrt(cfg.beta1), sb2 = std::sqrt(cfg.beta2());
    const double cs = std::sqrt(budget.rho_s);  // N0 = 1, so rho is the symbol power
    const double cr = std::sqrt(budget.rho_r);
    const bool reversed = cfg.scheme == Scheme::Reversed;
    const bool genie = opts.genie_sic;

    run_shards(frames, opts.threads, [&](std::uint64_t shard, std::uint64_t begin,
                                         std::uint64_t end) {
        ChannelGenerator gen(budget, opts.seed, shard);
        Accum acc;
        for (std::uint64_t t = begin; t < end; ++t) {
            const std::uint32_t u1 = gen.bits(2);
            const std::uint32_t u2 = gen.bits(2);
            const std::complex<double> x1 = qpsk_point(u1);
            const std::complex<double> x2 = qpsk_point(u2);

            // hop 1: superposed symbol at the relay
            const std::complex<double> h_sr = gen.rayleigh(budget.sigma2_sr);
            const std::complex<double> g1 = cs * h_sr * sa1;
            const std::complex<double> g2 = cs * h_sr * sa2;
            const std::complex<double> y_r = g1 * x1 + g2 * x2 + gen.awgn_unit();

            std::uint32_t r1_hat, r2_hat;
            if (reversed) {
                r1_hat = ml_detect(y_r, g1);
                const std::complex<double> removed = g1 * (genie ? x1 : qpsk_point(r1_hat));
                r2_hat = ml_detect(y_r - removed, g2);
            } else {
                r2_hat = ml_detect(y_r, g2);
                const std::complex<double> removed = g2 * (genie ? x2 : qpsk_point(r2_hat));
                r1_hat = ml_detect(y_r - removed, g1);
            }

            // hop 2: relay re-superposes whatever it detected
            const std::complex<double> xr1 = qpsk_point(r1_hat);
            const std::complex<double> xr2 = qpsk_point(r2_hat);
            const std::complex<double> s2 = sb1 * xr1 + sb2 * xr2;

            const std::complex<double> h_r1 = gen.rayleigh(budget.sigma2_r1);
            const std::complex<double> h_r2 = gen.rayleigh(budget.sigma2_r2);
            const std::complex<double> y1 = cr * h_r1 * s2 + gen.awgn_unit();
            const std::complex<double> y2 = cr * h_r2 * s2 + gen.awgn_unit();

            const std::uint32_t d2 = ml_detect(y2, cr * h_r2 * sb2);

            const std::uint32_t d2_at_1 = ml_detect(y1, cr * h_r1 * sb2);
            const std::complex<double> removed1 =
                cr * h_r1 * sb2 * (genie ? xr2 : qpsk_point(d2_at_1));
            const std::uint32_t d1 = ml_detect(y1 - removed1, cr * h_r1 * sb1);

            acc.err1 += std::popcount(u1 ^ d1);
            acc.err2 += std::popcount(u2 ^ d2);
        }
        partial[shard] = acc;
    });

    Accum total;
    for (const Accum& a : partial) {
        total.err1 += a.err1;
        total.err2 += a.err2;
    }

    BerEstimate est;
    const std::uint64_t bits = 2 * frames;
    est.ber_1 = probability_estimate(total.err1, bits, opts.seed);
    est.ber_2 = probability_estimate(total.err2, bits, opts.seed);
    est.genie_sic = genie;
    return est;
}

}  // namespace dfnoma
