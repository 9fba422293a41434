// Proportional-fairness indexes over the three KPIs, scheme comparison by
// worst-user metrics, and Cartesian parameter sweeps. A PF index is the
// ratio user1/user2 of one KPI; kappa and 1/kappa express the same
// imbalance, so the symmetric deviation |log PF| is reported alongside.

#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "dfnoma/bep.hpp"
#include "dfnoma/capacity.hpp"
#include "dfnoma/config.hpp"
#include "dfnoma/monte_carlo.hpp"
#include "dfnoma/outage.hpp"

namespace dfnoma {

// KPI values below this are reported as flagged extremes, not ratios.
inline constexpr double kPfUnderflow = 1e-12;

struct McRatio {
    double value = 0.0;
    double std_err = 0.0;  // first-order (delta method) propagation
};

struct KpiReport {
    SystemConfig cfg;  // resolved operating point
    EcResult ec;
    OutageResult op;
    BepResult bep;

    std::optional<RatesOutageEstimate> mc_rates;
    std::optional<BerEstimate> mc_ber_est;

    double pf_c = 0.0, pf_o = 0.0, pf_e = 0.0;  // raw ratios, NaN when degenerate
    double abs_log_pf_c = 0.0, abs_log_pf_o = 0.0, abs_log_pf_e = 0.0;
    bool pf_c_degenerate = false, pf_o_degenerate = false, pf_e_degenerate = false;

    std::optional<McRatio> mc_pf_c, mc_pf_o, mc_pf_e;
};

struct FairnessOptions {
    double quad_tol = kDefaultQuadTol;
    std::optional<McOptions> rates_mc;  // adds simulated EC/OP columns
    std::optional<BerOptions> ber_mc;   // adds simulated BER columns
};

KpiReport fairness(const SystemConfig& cfg, const LinkBudget& budget,
                   const FairnessOptions& opts = {});

// --- scheme comparison ------------------------------------------------------

enum class Winner { Reversed, Conventional, Tie };
std::string to_string(Winner w);

struct ComparisonReport {
    KpiReport reversed, conventional;
    double worst_ec_r = 0.0, worst_ec_c = 0.0;    // min over users
    double worst_op_r = 0.0, worst_op_c = 0.0;    // max over users
    double worst_bep_r = 0.0, worst_bep_c = 0.0;  // max over users
    Winner winner_ec = Winner::Tie;   // larger worst-user capacity
    Winner winner_op = Winner::Tie;   // smaller worst-user outage
    Winner winner_bep = Winner::Tie;  // smaller worst-user error rate
};

// Parameter-matched conventional twin: alpha1* = 1 - alpha1, rest unchanged.
SystemConfig paired_conventional(const SystemConfig& reversed_cfg);

ComparisonReport compare_reports(const KpiReport& reversed, const KpiReport& conventional);
ComparisonReport compare_schemes(const SystemConfig& reversed_cfg,
                                 const FairnessOptions& opts = {});

// --- sweeps -----------------------------------------------------------------

// Axis names: rho_s_db, alpha1, beta1, xi_db. rho_s_db moves the relay power
// too unless the template pins rho_r_db explicitly; xi_db moves both nodes'
// coefficients the same way.
struct GridAxis {
    std::string name;
    std::vector<double> values;
};

struct GridSpec {
    std::vector<GridAxis> axes;
    std::size_t points() const;
};

// "name=start:step:stop" (inclusive) or "name=v1,v2,...". xi_db values may
// be the word "perfect".
GridAxis parse_grid_axis(const std::string& spec);

void apply_axis_value(SystemConfig& cfg, const std::string& axis, double value);

// Cartesian product in row-major order (first axis slowest). Per-point MC
// substreams are derived from the options' stream_id and the point index, so
// results do not depend on evaluation order. Degenerate PF points are
// flagged, never fatal; an invalid config point throws ConfigError.
std::vector<KpiReport> sweep(const GridSpec& grid, const SystemConfig& cfg_template,
                             const FairnessOptions& opts = {});

// Convenience read-off: grid argmin of |log PF| per KPI and of their sum.
struct ArgminCell {
    std::size_t index = 0;
    double value = 0.0;
    bool valid = false;  // false when every point was degenerate
};

struct SweepSummary {
    ArgminCell best_pf_c, best_pf_o, best_pf_e, best_combined;
};

SweepSummary summarize_sweep(const std::vector<KpiReport>& reports);

}  // namespace dfnoma
