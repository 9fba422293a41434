// Acceptance suite: runs every agreed exit criterion at its stated tolerance
// and prints one PASS/FAIL line per check. Exit code is the number of
// failing checks. Seeds are fixed so the whole suite is deterministic.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <random>
#include <string>
#include <vector>

#include "dfnoma/bep.hpp"
#include "dfnoma/capacity.hpp"
#include "dfnoma/channel.hpp"
#include "dfnoma/fairness.hpp"
#include "dfnoma/monte_carlo.hpp"
#include "dfnoma/outage.hpp"
#include "dfnoma/report.hpp"
#include "dfnoma/sinr.hpp"

using namespace dfnoma;

namespace {

constexpr std::uint64_t kMasterSeed = 42;

struct Checker {
    int failures = 0;
    int checks = 0;

    void check(const std::string& name, bool ok, const std::string& detail = "") {
        ++checks;
        if (!ok) ++failures;
        std::printf("[%s] %s%s%s\n", ok ? "PASS" : "FAIL", name.c_str(),
                    detail.empty() ? "" : ": ", detail.c_str());
    }

    void note(const std::string& text) { std::printf("       %s\n", text.c_str()); }
};

std::string fmt(double v) { return format_double(v); }

// wall-clock seconds since a reference point; the outage and BER criteria
// carry explicit runtime targets (< 1 min and < 10 min)
double seconds_since(std::chrono::steady_clock::time_point t0) {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

SystemConfig base_config(double alpha1, double beta1, double d_r1, double d_r2,
                         double xi_db, double r1, double r2, double rho_db,
                         Scheme scheme = Scheme::Reversed) {
    SystemConfig cfg;
    cfg.scheme = scheme;
    cfg.alpha1 = alpha1;
    cfg.beta1 = beta1;
    cfg.d_sr = 5.0;
    cfg.d_r1 = d_r1;
    cfg.d_r2 = d_r2;
    cfg.mu = 10.0;
    cfg.tau = 2.0;
    cfg.xi_r_db = xi_db;
    cfg.rate_target_1 = r1;
    cfg.rate_target_2 = r2;
    cfg.rho_s_db = rho_db;
    return validate(cfg);
}

// ---------------------------------------------------------------------------
// Criterion 1: closed-form outage vs SINR-level Monte Carlo, 1e6 trials,
// 3 binomial standard errors at every grid point.
// ---------------------------------------------------------------------------
void criterion_1(Checker& ck, std::uint64_t& stream) {
    const auto t0 = std::chrono::steady_clock::now();
    const double xis[] = {-10.0, -20.0};
    const double rates[][2] = {{0.2, 0.1}, {0.75, 0.5}};
    bool all_ok = true;
    double worst_z = 0.0;
    std::string worst_at;

    for (double xi : xis) {
        for (const auto& rr : rates) {
            for (double rho = 0.0; rho <= 40.0; rho += 5.0) {
                const SystemConfig cfg =
                    base_config(0.9, 0.2, 1.0, 3.0, xi, rr[0], rr[1], rho);
                const LinkBudget b = derive_budget(cfg);
                const OutageResult an = outage(cfg, b);

                McOptions mo;
                mo.trials = 1'000'000;
                mo.seed = {kMasterSeed, stream++};
                const RatesOutageEstimate mc = mc_rates_outage(cfg, b, mo);

                const double n = static_cast<double>(mo.trials);
                for (int user = 1; user <= 2; ++user) {
                    const double pa = user == 1 ? an.op_1 : an.op_2;
                    const double pm = user == 1 ? mc.op_1.value : mc.op_2.value;
                    const double se = std::sqrt(pa * (1.0 - pa) / n);
                    const double z = se > 0.0 ? std::abs(pa - pm) / se
                                              : (pa == pm ? 0.0 : 1e9);
                    if (z > worst_z) {
                        worst_z = z;
                        worst_at = "xi=" + fmt(xi) + "dB rates=(" + fmt(rr[0]) + "," +
                                   fmt(rr[1]) + ") rho=" + fmt(rho) + "dB user" +
                                   std::to_string(user);
                    }
                    if (z > 3.0) all_ok = false;
                }
            }
        }
    }
    const double elapsed = seconds_since(t0);
    ck.check("criterion 1: outage closed form vs simulation (72 points, 3 sigma)",
             all_ok && elapsed < 60.0,
             "worst |z| = " + fmt(worst_z) + " at " + worst_at + "; runtime " +
                 fmt(elapsed) + " s (target < 60)");
}

// ---------------------------------------------------------------------------
// Criterion 2: exact ergodic capacity vs Monte Carlo mean rate, the high-SNR
// behavior at 80 dB, and the hand-evaluable ceiling value.
// ---------------------------------------------------------------------------
void criterion_2(Checker& ck, std::uint64_t& stream) {
    const double xis[] = {-std::numeric_limits<double>::infinity(), -20.0, -10.0};

    bool mc_ok = true;
    double worst_gap = 0.0;
    std::string worst_at;
    for (double xi : xis) {
        for (double rho = 0.0; rho <= 40.0; rho += 5.0) {
            const SystemConfig cfg = base_config(0.9, 0.2, 1.0, 3.0, xi, 0.2, 0.1, rho);
            const LinkBudget b = derive_budget(cfg);
            const auto [ec1, ec2] = ec_exact(cfg, b);

            McOptions mo;
            mo.trials = 1'000'000;
            mo.seed = {kMasterSeed, stream++};
            const RatesOutageEstimate mc = mc_rates_outage(cfg, b, mo);

            const double tol1 = std::max(0.02, 3.0 * mc.ec_1.std_err);
            const double tol2 = std::max(0.02, 3.0 * mc.ec_2.std_err);
            const double g1 = std::abs(ec1 - mc.ec_1.value);
            const double g2 = std::abs(ec2 - mc.ec_2.value);
            if (g1 / tol1 > worst_gap) {
                worst_gap = g1 / tol1;
                worst_at = "user1 xi=" + fmt(xi) + " rho=" + fmt(rho);
            }
            if (g2 / tol2 > worst_gap) {
                worst_gap = g2 / tol2;
                worst_at = "user2 xi=" + fmt(xi) + " rho=" + fmt(rho);
            }
            if (g1 > tol1 || g2 > tol2) mc_ok = false;
        }
    }
    ck.check("criterion 2a: exact EC vs simulation, max(0.02 bit, 3 sigma)", mc_ok,
             "worst gap/tol = " + fmt(worst_gap) + " at " + worst_at);

    // hand-evaluable ceiling for (alpha1=0.9, beta1=0.2, xi_1=0.1)
    const SystemConfig cfg10 = base_config(0.9, 0.2, 1.0, 3.0, -10.0, 0.2, 0.1, 20.0);
    const EcBound bound = ec_bound(cfg10, derive_budget(cfg10));
    const double expected = 0.5 * std::log2(2.5);
    ck.check("criterion 2b: bound_1 = (1/2)log2(2.5) reproduced exactly",
             std::abs(bound.bound_1 - expected) < 1e-12 &&
                 std::abs(bound.bound_1 - 0.6610) < 5e-5,
             "bound_1 = " + fmt(bound.bound_1));

    bool near_ok = true;
    std::string detail;
    for (double xi : xis) {
        const SystemConfig cfg = base_config(0.9, 0.2, 1.0, 3.0, xi, 0.2, 0.1, 80.0);
        const LinkBudget b = derive_budget(cfg);
        const EcResult r = ec_analysis(cfg, b);
        const double gap1 = std::abs(r.ec_1 - r.bound.bound_1);
        const double gap2 = std::abs(r.ec_2 - r.bound.bound_2);
        if (gap1 > 0.01 || gap2 > 0.01) near_ok = false;
        detail += (detail.empty() ? "" : "; ") + std::string("xi=") + fmt(xi) + ": gaps " +
                  fmt(gap1) + "/" + fmt(gap2);
    }
    ck.check("criterion 2c: |ec_exact(80 dB) - (1/2)log2(eta)| <= 0.01", near_ok, detail);
    if (!near_ok)
        ck.note("the integral's true limit is (1/2)log2(1+eta); the log2(eta) "
                "ceiling differs by (1/2)log2(1+1/eta), which exceeds 0.01 for "
                "every eta below ~71, so this gap is structural at these "
                "operating points");
}

// ---------------------------------------------------------------------------
// Criterion 3: closed-form BEP vs the symbol-level chain, 1e7 bits per point,
// 3 binomial standard errors wherever BER >= 1e-4.
// ---------------------------------------------------------------------------
void criterion_3(Checker& ck, std::uint64_t& stream) {
    const auto t0 = std::chrono::steady_clock::now();
    const double pairs[][2] = {{0.8, 0.2}, {0.9, 0.1}};
    int points = 0, failed = 0;
    double worst_z = 0.0, highest_failing_rho = -1.0;
    std::string worst_at;
    std::vector<std::string> point_lines;

    for (const auto& pw : pairs) {
        for (double rho = 0.0; rho <= 40.0; rho += 5.0) {
            const SystemConfig cfg =
                base_config(pw[0], pw[1], 1.0, 3.0, -10.0, 0.2, 0.1, rho);
            const LinkBudget b = derive_budget(cfg);
            const BepResult an = bep_e2e(cfg, b);

            BerOptions bo;
            bo.frames = 5'000'000;  // 1e7 bits per user
            bo.seed = {kMasterSeed, stream++};
            const BerEstimate mc = mc_ber(cfg, b, bo);

            const double nbits = 2.0 * static_cast<double>(bo.frames);
            for (int user = 1; user <= 2; ++user) {
                const double pa = user == 1 ? an.bep_e2e_1 : an.bep_e2e_2;
                const double pm = user == 1 ? mc.ber_1.value : mc.ber_2.value;
                if (pa < 1e-4) continue;  // below the agreed validity floor
                ++points;
                const double se = std::sqrt(pa * (1.0 - pa) / nbits);
                const double z = std::abs(pa - pm) / se;
                if (z > worst_z) {
                    worst_z = z;
                    worst_at = "alpha1=" + fmt(pw[0]) + " rho=" + fmt(rho) + "dB user" +
                               std::to_string(user);
                }
                if (z > 3.0) {
                    ++failed;
                    highest_failing_rho = std::max(highest_failing_rho, rho);
                    point_lines.push_back("point alpha1=" + fmt(pw[0]) + " rho=" + fmt(rho) +
                                          " dB user" + std::to_string(user) + ": analytic " +
                                          fmt(pa) + " simulated " + fmt(pm) + " (z = " +
                                          fmt(z) + ")");
                }
            }
        }
    }
    const double elapsed = seconds_since(t0);
    ck.check("criterion 3: e2e BEP closed form vs symbol-level chain (3 sigma, "
             "BER >= 1e-4)",
             failed == 0 && elapsed < 600.0,
             std::to_string(points - failed) + "/" + std::to_string(points) +
                 " points within 3 sigma, worst |z| = " + fmt(worst_z) + " at " + worst_at +
                 "; runtime " + fmt(elapsed) + " s (target < 600)");
    for (const std::string& line : point_lines) ck.note(line);
    if (failed > 0)
        ck.note("every excursion sits at rho <= " + fmt(highest_failing_rho) +
                " dB and the simulation is BELOW the closed form: the combiner "
                "treats the hops' flips as independent, but after a wrong "
                "cancellation the relay retransmits an aligned symbol pair, which "
                "lowers the true second-hop flip rate. The bias scales with the "
                "hop-1 error rate (~1e-2 at 10 dB, immeasurable from 25 dB up), "
                "so the closed forms remain the valid high-SNR description they "
                "are used for elsewhere in the suite.");
}

// ---------------------------------------------------------------------------
// Criterion 4: quoted fairness-index values at d = 5/2/2.
// ---------------------------------------------------------------------------
void criterion_4(Checker& ck) {
    // pf_c at 15 dB, alpha1=0.9, beta1=0.1, xi=-10 dB
    const SystemConfig r15 = base_config(0.9, 0.1, 2.0, 2.0, -10.0, 0.5, 0.5, 15.0);
    const KpiReport rep_r = fairness(r15, derive_budget(r15));
    ck.check("criterion 4a: R-DFNOMA pf_c = 1.545 +- 0.05 at 15 dB",
             std::abs(rep_r.pf_c - 1.545) <= 0.05, "pf_c = " + fmt(rep_r.pf_c));

    const SystemConfig c15 = paired_conventional(r15);
    const KpiReport rep_c = fairness(c15, derive_budget(c15));
    ck.check("criterion 4b: C-DFNOMA pf_c = 0.2433 +- 0.01 at 15 dB",
             std::abs(rep_c.pf_c - 0.2433) <= 0.01, "pf_c = " + fmt(rep_c.pf_c));

    // pf_o across 0..40 dB for the two published scenarios; the ratio runs
    // from 1 (rho -> 0 drives both outages to certainty) down to its high-SNR
    // limit, so the quoted "about one half across the range" is evaluated on
    // the grid mean.
    const double scenarios[][3] = {{0.9, 0.1, -10.0}, {0.8, 0.2, -15.0}};
    for (const auto& sc : scenarios) {
        double sum = 0.0;
        int n = 0;
        double last = 0.0;
        for (double rho = 0.0; rho <= 40.0; rho += 5.0) {
            const SystemConfig cfg =
                base_config(sc[0], sc[1], 2.0, 2.0, sc[2], 0.5, 0.5, rho);
            const OutageResult op = outage(cfg, derive_budget(cfg));
            last = op.op_1 / op.op_2;
            sum += last;
            ++n;
        }
        const double mean = sum / n;
        ck.check("criterion 4c: R-DFNOMA pf_o ~= 0.5 +- 0.1 across 0..40 dB (grid "
                 "mean), alpha1=" +
                     fmt(sc[0]) + " xi=" + fmt(sc[2]) + "dB",
                 std::abs(mean - 0.5) <= 0.1,
                 "mean pf_o = " + fmt(mean) + ", 40 dB value = " + fmt(last));
    }

    // C-DFNOMA pf_o toward 80 near 40 dB
    const SystemConfig c40 = paired_conventional(
        base_config(0.9, 0.1, 2.0, 2.0, -10.0, 0.5, 0.5, 40.0));
    const OutageResult opc = outage(c40, derive_budget(c40));
    const double pfo_c = opc.op_1 / opc.op_2;
    ck.check("criterion 4d: C-DFNOMA pf_o reaches 80 +- 10 near 40 dB",
             std::abs(pfo_c - 80.0) <= 10.0, "pf_o = " + fmt(pfo_c));

    // pf_e at 40 dB; kappa and 1/kappa carry the same meaning, so the
    // symmetric form exp|log pf| is evaluated.
    const SystemConfig r40 = base_config(0.9, 0.1, 2.0, 2.0, -10.0, 0.5, 0.5, 40.0);
    const BepResult bep_r = bep_e2e(r40, derive_budget(r40));
    const double pfe_r = bep_r.bep_e2e_1 / bep_r.bep_e2e_2;
    const double pfe_r_sym = std::exp(std::abs(std::log(pfe_r)));
    ck.check("criterion 4e: R-DFNOMA pf_e ~= 2 +- 0.5 at 40 dB (symmetric form)",
             std::abs(pfe_r_sym - 2.0) <= 0.5,
             "pf_e = " + fmt(pfe_r) + ", symmetric " + fmt(pfe_r_sym));
    if (std::abs(pfe_r_sym - 2.0) > 0.5) {
        const SystemConfig alt = base_config(0.8, 0.2, 2.0, 2.0, -10.0, 0.5, 0.5, 40.0);
        const BepResult bep_alt = bep_e2e(alt, derive_budget(alt));
        const double pfe_alt =
            std::exp(std::abs(std::log(bep_alt.bep_e2e_1 / bep_alt.bep_e2e_2)));
        ck.note("the derived error model puts this scenario's 40 dB value at " +
                fmt(pfe_r_sym) + "; the quoted 2 matches the companion scenario "
                "alpha1=0.8, beta1=0.2, whose symmetric pf_e here is " +
                fmt(pfe_alt));
    }

    const BepResult bep_c = bep_e2e(c40, derive_budget(c40));
    const double pfe_c = bep_c.bep_e2e_1 / bep_c.bep_e2e_2;
    ck.check("criterion 4f: C-DFNOMA pf_e ~= 7 +- 1 at 40 dB",
             std::abs(pfe_c - 7.0) <= 1.0, "pf_e = " + fmt(pfe_c));
}

// ---------------------------------------------------------------------------
// Criterion 5: the power-allocation sweep at 30 dB, d = 5/2/2, xi = -10 dB,
// targets 0.2/0.2; sweet-spot location and the surface extremes.
// ---------------------------------------------------------------------------
void criterion_5(Checker& ck) {
    GridSpec grid;
    grid.axes.push_back(parse_grid_axis("alpha1=0.55:0.05:0.95"));
    grid.axes.push_back(parse_grid_axis("beta1=0.05:0.05:0.45"));

    SystemConfig tmpl = base_config(0.9, 0.1, 2.0, 2.0, -10.0, 0.2, 0.2, 30.0);
    const auto reports_r = sweep(grid, tmpl);

    std::vector<KpiReport> reports_c;
    reports_c.reserve(reports_r.size());
    for (const auto& rep : reports_r) {
        const SystemConfig c_cfg = paired_conventional(rep.cfg);
        reports_c.push_back(fairness(c_cfg, derive_budget(c_cfg)));
    }

    const SweepSummary s = summarize_sweep(reports_r);
    bool sweet_ok = s.best_combined.valid;
    std::string sweet_detail = "no valid cell";
    if (s.best_combined.valid) {
        const SystemConfig& at = reports_r[s.best_combined.index].cfg;
        sweet_ok = std::abs(at.alpha1 - 0.85) <= 0.025 && std::abs(at.beta1 - 0.15) <= 0.025;
        sweet_detail = "combined argmin at alpha1=" + fmt(at.alpha1) +
                       ", beta1=" + fmt(at.beta1) +
                       " (sum |log pf| = " + fmt(s.best_combined.value) + ")";
    }
    ck.check("criterion 5a: all-KPI fairness sweet spot in the cell of (0.85, 0.15)",
             sweet_ok, sweet_detail);
    if (!sweet_ok && s.best_combined.valid) {
        const SweepSummary sr = s;
        const SystemConfig& c_at = reports_r[sr.best_pf_c.index].cfg;
        ck.note("per-KPI argmins: capacity at alpha1=" + fmt(c_at.alpha1) + ", beta1=" +
                fmt(c_at.beta1) + "; outage at alpha1=" +
                fmt(reports_r[sr.best_pf_o.index].cfg.alpha1) + ", beta1=" +
                fmt(reports_r[sr.best_pf_o.index].cfg.beta1) + "; error at alpha1=" +
                fmt(reports_r[sr.best_pf_e.index].cfg.alpha1) + ", beta1=" +
                fmt(reports_r[sr.best_pf_e.index].cfg.beta1));
    }

    auto grid_max = [](const std::vector<KpiReport>& reports, double KpiReport::*field,
                       const bool KpiReport::*flag) {
        double best = 0.0;
        for (const auto& r : reports)
            if (!(r.*flag) && r.*field > best) best = r.*field;
        return best;
    };

    const double max_pfo_r = grid_max(reports_r, &KpiReport::pf_o, &KpiReport::pf_o_degenerate);
    const double max_pfe_r = grid_max(reports_r, &KpiReport::pf_e, &KpiReport::pf_e_degenerate);
    const double max_pfo_c = grid_max(reports_c, &KpiReport::pf_o, &KpiReport::pf_o_degenerate);
    const double max_pfe_c = grid_max(reports_c, &KpiReport::pf_e, &KpiReport::pf_e_degenerate);

    ck.check("criterion 5b: R-DFNOMA grid max pf_o <= ~6 (+20%)", max_pfo_r <= 7.2,
             "max pf_o = " + fmt(max_pfo_r));
    ck.check("criterion 5c: R-DFNOMA grid max pf_e <= ~3.5 (+20%)", max_pfe_r <= 4.2,
             "max pf_e = " + fmt(max_pfe_r));
    ck.check("criterion 5d: C-DFNOMA grid max pf_o reaches ~50 (+-20%)",
             max_pfo_c >= 40.0 && max_pfo_c <= 60.0, "max pf_o = " + fmt(max_pfo_c));
    ck.check("criterion 5e: C-DFNOMA grid max pf_e reaches ~80 (+-20%)",
             max_pfe_c >= 64.0 && max_pfe_c <= 96.0, "max pf_e = " + fmt(max_pfe_c));
    if (!(max_pfe_c >= 64.0 && max_pfe_c <= 96.0))
        ck.note("with the validated error model the conventional surface peaks near " +
                fmt(max_pfe_c) + " on this grid; a value of 80 requires alpha1* "
                "near 0.01, where the outage surface would peak far above 60, so "
                "no single grid satisfies both quoted extremes");
}

// ---------------------------------------------------------------------------
// Criterion 6: property suites.
// ---------------------------------------------------------------------------
void criterion_6(Checker& ck, std::uint64_t& stream) {
    // zero-SNR BEP anchor, analytic and simulated
    {
        const BepCoefficientTable far = far_user_table(0.8, 0.2);
        const BepCoefficientTable near = near_user_table(0.2, 0.8);
        const bool exact = abep_hop(far, 0.0, 1.7) == 0.5 && abep_hop(near, 0.0, 1.7) == 0.5;
        ck.check("criterion 6a: zero-SNR ABEP anchor is exactly 1/2", exact);

        const SystemConfig cfg = base_config(0.8, 0.2, 1.0, 3.0, -10.0, 0.2, 0.1, -40.0);
        BerOptions bo;
        bo.frames = 200'000;
        bo.seed = {kMasterSeed, stream++};
        const BerEstimate mc = mc_ber(cfg, derive_budget(cfg), bo);
        const bool mc_ok =
            std::abs(mc.ber_1.value - 0.5) <= 3.0 * mc.ber_1.std_err + 1e-9 &&
            std::abs(mc.ber_2.value - 0.5) <= 3.0 * mc.ber_2.std_err + 1e-9;
        ck.check("criterion 6b: simulated BER at vanishing SNR is 1/2 within 3 sigma",
                 mc_ok, "ber = " + fmt(mc.ber_1.value) + ", " + fmt(mc.ber_2.value));
    }

    // combiner identities
    {
        bool ok = true;
        for (double a = 0.0; a <= 0.5 + 1e-12; a += 0.025) {
            if (std::abs(combine_e2e(a, 0.0) - a) > 1e-15) ok = false;
            if (std::abs(combine_e2e(a, 0.5) - 0.5) > 1e-12) ok = false;
        }
        ck.check("criterion 6c: combiner identities a(+)0 = a and a(+)1/2 = 1/2", ok);
    }

    // outage monotonicity on randomized configs
    {
        std::mt19937_64 eng(987654321);
        auto runif = [&](double lo, double hi) {
            return lo + (hi - lo) * static_cast<double>(eng() >> 11) * 0x1.0p-53;
        };
        bool ok = true;
        for (int trial = 0; trial < 40 && ok; ++trial) {
            SystemConfig cfg;
            cfg.scheme = trial % 2 ? Scheme::Conventional : Scheme::Reversed;
            cfg.alpha1 = cfg.scheme == Scheme::Reversed ? runif(0.55, 0.95) : runif(0.05, 0.45);
            cfg.beta1 = runif(0.05, 0.45);
            cfg.d_sr = runif(1.0, 6.0);
            cfg.d_r1 = runif(0.5, 4.0);
            cfg.d_r2 = runif(0.5, 4.0);
            cfg.tau = runif(2.0, 4.0);
            cfg.xi_r_db = runif(-25.0, 0.0);
            cfg.rate_target_1 = runif(0.05, 1.0);
            cfg.rate_target_2 = runif(0.05, 1.0);
            cfg.rho_s_db = runif(0.0, 30.0);
            cfg = validate(cfg);

            double prev1 = 1.0 + 1e-12, prev2 = 1.0 + 1e-12;
            for (double rho = 0.0; rho <= 40.0; rho += 2.5) {
                SystemConfig c = cfg;
                c.rho_s_db = rho;
                const OutageResult r = outage(c, derive_budget(c));
                if (r.op_1 > prev1 + 1e-12 || r.op_2 > prev2 + 1e-12) ok = false;
                prev1 = r.op_1;
                prev2 = r.op_2;
            }
            prev1 = prev2 = -1e-12;
            for (double rate = 0.05; rate <= 1.5; rate += 0.05) {
                SystemConfig c = cfg;
                c.rate_target_1 = rate;
                c.rate_target_2 = rate;
                const OutageResult r = outage(c, derive_budget(c));
                if (r.op_1 < prev1 - 1e-12 || r.op_2 < prev2 - 1e-12) ok = false;
                prev1 = r.op_1;
                prev2 = r.op_2;
            }
            prev1 = prev2 = -1e-12;
            for (double xi = -30.0; xi <= 0.0; xi += 1.5) {
                SystemConfig c = cfg;
                c.xi_r_db = xi;
                c.xi_1_db.reset();
                const OutageResult r = outage(c, derive_budget(c));
                if (r.op_1 < prev1 - 1e-12 || r.op_2 < prev2 - 1e-12) ok = false;
                prev1 = r.op_1;
                prev2 = r.op_2;
            }
        }
        ck.check("criterion 6d: outage monotone in rho, target rate and xi "
                 "(randomized configs)",
                 ok);
    }

    // EC monotonicity in rho
    {
        bool ok = true;
        double prev1 = -1.0, prev2 = -1.0;
        for (double rho = 0.0; rho <= 40.0; rho += 5.0) {
            const SystemConfig cfg = base_config(0.9, 0.2, 1.0, 3.0, -10.0, 0.2, 0.1, rho);
            const auto [ec1, ec2] = ec_exact(cfg, derive_budget(cfg));
            if (ec1 < prev1 - 1e-7 || ec2 < prev2 - 1e-7) ok = false;
            prev1 = ec1;
            prev2 = ec2;
        }
        ck.check("criterion 6e: exact EC monotone nondecreasing in rho", ok);
    }

    // exponential fading, Kolmogorov-Smirnov at 1e6 draws
    {
        const SystemConfig cfg = base_config(0.9, 0.2, 1.0, 3.0, -10.0, 0.2, 0.1, 20.0);
        const LinkBudget b = derive_budget(cfg);
        ChannelGenerator gen(b, SeedSpec{kMasterSeed, stream++});
        const std::size_t n = 1'000'000;
        std::vector<double> xs(n);
        for (auto& x : xs) x = gen.next().gamma_sr;
        std::sort(xs.begin(), xs.end());
        double d = 0.0;
        for (std::size_t i = 0; i < n; ++i) {
            const double f = 1.0 - std::exp(-xs[i] / b.sigma2_sr);
            d = std::max(d, std::abs(f - static_cast<double>(i + 1) / n));
            d = std::max(d, std::abs(f - static_cast<double>(i) / n));
        }
        ck.check("criterion 6f: gamma draws pass the exponential KS test (D < 0.002)",
                 d < 0.002, "D = " + fmt(d));
    }

    // shard invariance
    {
        const SystemConfig cfg = base_config(0.9, 0.2, 1.0, 3.0, -10.0, 0.2, 0.1, 20.0);
        const LinkBudget b = derive_budget(cfg);
        McOptions m1;
        m1.trials = 200'000;
        m1.seed = {kMasterSeed, stream};
        m1.threads = 1;
        McOptions m2 = m1;
        m2.threads = 6;
        const RatesOutageEstimate r1 = mc_rates_outage(cfg, b, m1);
        const RatesOutageEstimate r2 = mc_rates_outage(cfg, b, m2);

        BerOptions b1;
        b1.frames = 200'000;
        b1.seed = {kMasterSeed, stream + 1};
        b1.threads = 1;
        BerOptions b2 = b1;
        b2.threads = 6;
        const BerEstimate e1 = mc_ber(cfg, b, b1);
        const BerEstimate e2 = mc_ber(cfg, b, b2);
        stream += 2;

        ck.check("criterion 6g: Monte Carlo estimates invariant to worker count",
                 r1.ec_1.value == r2.ec_1.value && r1.op_2.value == r2.op_2.value &&
                     e1.ber_1.value == e2.ber_1.value && e1.ber_2.value == e2.ber_2.value);
    }

    // coefficient-table weight sums
    {
        std::mt19937_64 eng(13579);
        auto runif = [&](double lo, double hi) {
            return lo + (hi - lo) * static_cast<double>(eng() >> 11) * 0x1.0p-53;
        };
        bool ok = true;
        for (int trial = 0; trial < 200; ++trial) {
            SystemConfig cfg;
            cfg.scheme = trial % 2 ? Scheme::Conventional : Scheme::Reversed;
            cfg.alpha1 = cfg.scheme == Scheme::Reversed ? runif(0.51, 0.99) : runif(0.01, 0.49);
            cfg.beta1 = runif(0.01, 0.49);
            cfg = validate(cfg);
            const HopTables t = build_tables(cfg);
            for (const auto* tab : {&t.user1_hop1, &t.user2_hop1, &t.user1_hop2,
                                    &t.user2_hop2}) {
                double sum = 0.0;
                for (double w : tab->weights) sum += w;
                if (std::abs(sum - 1.0) > 1e-12) ok = false;
                for (double nu : tab->scales)
                    if (nu < 0.0) ok = false;
            }
        }
        ck.check("criterion 6h: every coefficient table sums to one with "
                 "nonnegative scales",
                 ok);
    }

    // certain outage above the ceiling
    {
        SystemConfig cfg = base_config(0.9, 0.2, 1.0, 3.0, -10.0, 2.0, 0.1, 20.0);
        const OutageResult r = outage(cfg, derive_budget(cfg));
        bool ok = r.op_1 == 1.0 && r.ceiling_1;

        // user 2's first-hop ceiling: phi_2 >= alpha2 / (alpha1 xi_r)
        SystemConfig cfg2 = base_config(0.9, 0.2, 1.0, 3.0, 0.0, 0.2, 1.0, 20.0);
        const OutageResult r2 = outage(cfg2, derive_budget(cfg2));
        ok = ok && r2.op_2 == 1.0 && r2.ceiling_2;
        ck.check("criterion 6i: outage is exactly one whenever a threshold exceeds "
                 "its SINR ceiling",
                 ok);
    }
}

}  // namespace

int main() {
    std::printf("acceptance suite (master seed %llu)\n",
                static_cast<unsigned long long>(kMasterSeed));
    Checker ck;
    std::uint64_t stream = 0;

    criterion_1(ck, stream);
    criterion_2(ck, stream);
    criterion_3(ck, stream);
    criterion_4(ck);
    criterion_5(ck);
    criterion_6(ck, stream);

    std::printf("%d/%d checks passed\n", ck.checks - ck.failures, ck.checks);
    return ck.failures;
}
