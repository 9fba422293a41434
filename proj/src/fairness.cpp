#include "dfnoma/fairness.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

namespace dfnoma {

namespace {

constexpr double kNan = std::numeric_limits<double>::quiet_NaN();

void pf_index(double num, double den, double& pf, double& abs_log, bool& degenerate) {
    if (!(num >= kPfUnderflow) || !(den >= kPfUnderflow)) {
        pf = kNan;
        abs_log = kNan;
        degenerate = true;
        return;
    }
    pf = num / den;
    abs_log = std::abs(std::log(pf));
    degenerate = false;
}

McRatio mc_ratio(const McEstimate& num, const McEstimate& den) {
    McRatio r;
    r.value = num.value / den.value;
    if (num.value > 0.0 && den.value > 0.0) {
        const double rel_n = num.std_err / num.value;
        const double rel_d = den.std_err / den.value;
        r.std_err = std::abs(r.value) * std::sqrt(rel_n * rel_n + rel_d * rel_d);
    } else {
        r.std_err = kNan;
    }
    return r;
}

Winner pick_larger(double r, double c) {
    if (r == c) return Winner::Tie;
    return r > c ? Winner::Reversed : Winner::Conventional;
}

Winner pick_smaller(double r, double c) {
    if (r == c) return Winner::Tie;
    return r < c ? Winner::Reversed : Winner::Conventional;
}

}  // namespace

KpiReport fairness(const SystemConfig& cfg, const LinkBudget& budget,
                   const FairnessOptions& opts) {
    KpiReport rep;
    rep.cfg = cfg;
    rep.ec = ec_analysis(cfg, budget, opts.quad_tol);
    rep.op = outage(cfg, budget);
    rep.bep = bep_e2e(cfg, budget);

    pf_index(rep.ec.ec_1, rep.ec.ec_2, rep.pf_c, rep.abs_log_pf_c, rep.pf_c_degenerate);
    pf_index(rep.op.op_1, rep.op.op_2, rep.pf_o, rep.abs_log_pf_o, rep.pf_o_degenerate);
    pf_index(rep.bep.bep_e2e_1, rep.bep.bep_e2e_2, rep.pf_e, rep.abs_log_pf_e,
             rep.pf_e_degenerate);

    if (opts.rates_mc) {
        rep.mc_rates = mc_rates_outage(cfg, budget, *opts.rates_mc);
        rep.mc_pf_c = mc_ratio(rep.mc_rates->ec_1, rep.mc_rates->ec_2);
        rep.mc_pf_o = mc_ratio(rep.mc_rates->op_1, rep.mc_rates->op_2);
    }
    if (opts.ber_mc) {
        rep.mc_ber_est = mc_ber(cfg, budget, *opts.ber_mc);
        rep.mc_pf_e = mc_ratio(rep.mc_ber_est->ber_1, rep.mc_ber_est->ber_2);
    }
    return rep;
}

std::string to_string(Winner w) {
    switch (w) {
        case Winner::Reversed: return "R-DFNOMA";
        case Winner::Conventional: return "C-DFNOMA";
        default: return "tie";
    }
}

SystemConfig paired_conventional(const SystemConfig& reversed_cfg) {
    if (reversed_cfg.scheme != Scheme::Reversed)
        throw ConfigError("scheme", "pairing expects an R-DFNOMA config");
    SystemConfig c = reversed_cfg;
    c.scheme = Scheme::Conventional;
    c.alpha1 = 1.0 - reversed_cfg.alpha1;
    return validate(c);
}

ComparisonReport compare_reports(const KpiReport& reversed, const KpiReport& conventional) {
    ComparisonReport cmp;
    cmp.reversed = reversed;
    cmp.conventional = conventional;
    cmp.worst_ec_r = std::min(reversed.ec.ec_1, reversed.ec.ec_2);
    cmp.worst_ec_c = std::min(conventional.ec.ec_1, conventional.ec.ec_2);
    cmp.worst_op_r = std::max(reversed.op.op_1, reversed.op.op_2);
    cmp.worst_op_c = std::max(conventional.op.op_1, conventional.op.op_2);
    cmp.worst_bep_r = std::max(reversed.bep.bep_e2e_1, reversed.bep.bep_e2e_2);
    cmp.worst_bep_c = std::max(conventional.bep.bep_e2e_1, conventional.bep.bep_e2e_2);
    cmp.winner_ec = pick_larger(cmp.worst_ec_r, cmp.worst_ec_c);
    cmp.winner_op = pick_smaller(cmp.worst_op_r, cmp.worst_op_c);
    cmp.winner_bep = pick_smaller(cmp.worst_bep_r, cmp.worst_bep_c);
    return cmp;
}

ComparisonReport compare_schemes(const SystemConfig& reversed_cfg,
                                 const FairnessOptions& opts) {
    const SystemConfig r_cfg = validate(reversed_cfg);
    const SystemConfig c_cfg = paired_conventional(r_cfg);

    // Decorrelate the two schemes' Monte Carlo substreams.
    FairnessOptions c_opts = opts;
    if (c_opts.rates_mc) c_opts.rates_mc->seed.stream_id += 1u << 20;
    if (c_opts.ber_mc) c_opts.ber_mc->seed.stream_id += 1u << 20;

    const KpiReport r_rep = fairness(r_cfg, derive_budget(r_cfg), opts);
    const KpiReport c_rep = fairness(c_cfg, derive_budget(c_cfg), c_opts);
    return compare_reports(r_rep, c_rep);
}

std::size_t GridSpec::points() const {
    std::size_t n = 1;
    for (const auto& axis : axes) n *= axis.values.size();
    return n;
}

GridAxis parse_grid_axis(const std::string& spec) {
    const auto eq = spec.find('=');
    if (eq == std::string::npos)
        throw ConfigError("grid", "expected axis=values, got '" + spec + "'");
    GridAxis axis;
    axis.name = spec.substr(0, eq);
    const std::string body = spec.substr(eq + 1);

    static const char* kAxes[] = {"rho_s_db", "alpha1", "beta1", "xi_db"};
    if (std::find(std::begin(kAxes), std::end(kAxes), axis.name) == std::end(kAxes))
        throw ConfigError("grid", "unknown grid axis '" + axis.name +
                                      "' (use rho_s_db, alpha1, beta1 or xi_db)");

    auto parse_value = [&](const std::string& tok) -> double {
        if (axis.name == "xi_db" && (tok == "perfect" || tok == "PERFECT" || tok == "Perfect"))
            return -std::numeric_limits<double>::infinity();
        char* end = nullptr;
        const double x = std::strtod(tok.c_str(), &end);
        if (tok.empty() || end != tok.c_str() + tok.size())
            throw ConfigError("grid", "bad value '" + tok + "' for axis " + axis.name);
        return x;
    };

    if (body.find(':') != std::string::npos) {
        // start:step:stop, inclusive
        const auto c1 = body.find(':');
        const auto c2 = body.find(':', c1 + 1);
        if (c2 == std::string::npos)
            throw ConfigError("grid", "range syntax is start:step:stop");
        const double start = parse_value(body.substr(0, c1));
        const double step = parse_value(body.substr(c1 + 1, c2 - c1 - 1));
        const double stop = parse_value(body.substr(c2 + 1));
        if (step <= 0.0 || stop < start)
            throw ConfigError("grid", "range needs step > 0 and stop >= start");
        const int count = static_cast<int>(std::floor((stop - start) / step + 1e-9)) + 1;
        for (int i = 0; i < count; ++i) {
            // snap accumulated range values (0.55 + 3*0.05 style artifacts)
            const double v = start + i * step;
            axis.values.push_back(std::round(v * 1e12) / 1e12);
        }
    } else {
        std::size_t pos = 0;
        while (pos <= body.size()) {
            const auto comma = body.find(',', pos);
            const std::string tok =
                body.substr(pos, comma == std::string::npos ? std::string::npos : comma - pos);
            if (!tok.empty()) axis.values.push_back(parse_value(tok));
            if (comma == std::string::npos) break;
            pos = comma + 1;
        }
    }
    if (axis.values.empty())
        throw ConfigError("grid", "axis '" + axis.name + "' has no values");
    return axis;
}

void apply_axis_value(SystemConfig& cfg, const std::string& axis, double value) {
    if (axis == "rho_s_db") {
        cfg.rho_s_db = value;
    } else if (axis == "alpha1") {
        cfg.alpha1 = value;
    } else if (axis == "beta1") {
        cfg.beta1 = value;
    } else if (axis == "xi_db") {
        cfg.xi_r_db = value;
        if (cfg.xi_1_db) cfg.xi_1_db = value;
    } else {
        throw ConfigError("grid", "unknown grid axis '" + axis + "'");
    }
}

std::vector<KpiReport> sweep(const GridSpec& grid, const SystemConfig& cfg_template,
                             const FairnessOptions& opts) {
    for (const auto& axis : grid.axes)
        if (axis.values.empty()) throw ConfigError("grid", "axis '" + axis.name + "' is empty");

    const std::size_t total = grid.points();
    std::vector<KpiReport> reports;
    reports.reserve(total);

    std::vector<std::size_t> idx(grid.axes.size(), 0);
    for (std::size_t p = 0; p < total; ++p) {
        SystemConfig cfg = cfg_template;
        for (std::size_t a = 0; a < grid.axes.size(); ++a)
            apply_axis_value(cfg, grid.axes[a].name, grid.axes[a].values[idx[a]]);
        cfg = validate(cfg);

        FairnessOptions point_opts = opts;
        if (point_opts.rates_mc) point_opts.rates_mc->seed.stream_id += 2 * p;
        if (point_opts.ber_mc) point_opts.ber_mc->seed.stream_id += 2 * p + 1;

        reports.push_back(fairness(cfg, derive_budget(cfg), point_opts));

        // row-major increment, last axis fastest
        for (std::size_t a = grid.axes.size(); a-- > 0;) {
            if (++idx[a] < grid.axes[a].values.size()) break;
            idx[a] = 0;
        }
    }
    return reports;
}

SweepSummary summarize_sweep(const std::vector<KpiReport>& reports) {
    SweepSummary s;
    auto consider = [](ArgminCell& cell, std::size_t i, double v, bool degenerate) {
        if (degenerate || std::isnan(v)) return;
        if (!cell.valid || v < cell.value) {
            cell.valid = true;
            cell.index = i;
            cell.value = v;
        }
    };
    for (std::size_t i = 0; i < reports.size(); ++i) {
        const KpiReport& r = reports[i];
        consider(s.best_pf_c, i, r.abs_log_pf_c, r.pf_c_degenerate);
        consider(s.best_pf_o, i, r.abs_log_pf_o, r.pf_o_degenerate);
        consider(s.best_pf_e, i, r.abs_log_pf_e, r.pf_e_degenerate);
        const bool any_deg = r.pf_c_degenerate || r.pf_o_degenerate || r.pf_e_degenerate;
        consider(s.best_combined, i, r.abs_log_pf_c + r.abs_log_pf_o + r.abs_log_pf_e,
                 any_deg);
    }
    return s;
}

}  // namespace dfnoma
