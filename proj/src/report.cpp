#include "dfnoma/report.hpp"

#include <charconv>
#include <cmath>
#include <sstream>

#include <json.hpp>

namespace dfnoma {

namespace {

std::string format_xi_db(double v) {
    if (std::isinf(v) && v < 0) return "perfect";
    return format_double(v);
}

void add(Row& row, const std::string& name, const std::string& value) {
    row.emplace_back(name, value);
}

// keep string literals away from the bool overload
void add(Row& row, const std::string& name, const char* value) {
    row.emplace_back(name, std::string(value));
}

void add(Row& row, const std::string& name, double value) {
    row.emplace_back(name, format_double(value));
}

void add(Row& row, const std::string& name, bool value) {
    row.emplace_back(name, value ? "1" : "0");
}

std::string format_u64(std::uint64_t value) { return std::to_string(value); }

void add_config(Row& row, const SystemConfig& cfg) {
    add(row, "scheme", to_string(cfg.scheme));
    add(row, "alpha1", cfg.alpha1);
    add(row, "beta1", cfg.beta1);
    add(row, "rho_s_db", cfg.rho_s_db);
    add(row, "rho_r_db", cfg.rho_r_db_resolved());
    add(row, "d_sr", cfg.d_sr);
    add(row, "d_r1", cfg.d_r1);
    add(row, "d_r2", cfg.d_r2);
    add(row, "mu", cfg.mu);
    add(row, "tau", cfg.tau);
    add(row, "xi_r_db", format_xi_db(cfg.xi_r_db));
    add(row, "xi_1_db", format_xi_db(cfg.xi_1_db_resolved()));
    add(row, "rate_target_1", cfg.rate_target_1);
    add(row, "rate_target_2", cfg.rate_target_2);
    add(row, "m1", std::to_string(cfg.m1));
    add(row, "m2", std::to_string(cfg.m2));
}

void add_kpis(Row& row, const KpiReport& r, const std::string& prefix) {
    add(row, prefix + "ec_1", r.ec.ec_1);
    add(row, prefix + "ec_2", r.ec.ec_2);
    add(row, prefix + "ec_sum", r.ec.ec_sum);
    add(row, prefix + "ec_bound_1", r.ec.bound.bound_1);
    add(row, prefix + "ec_bound_2", r.ec.bound.bound_2);
    add(row, prefix + "eta_1", r.ec.bound.eta_1);
    add(row, prefix + "eta_2", r.ec.bound.eta_2);
    add(row, prefix + "op_1", r.op.op_1);
    add(row, prefix + "op_2", r.op.op_2);
    add(row, prefix + "phi_1", r.op.phi_1);
    add(row, prefix + "phi_2", r.op.phi_2);
    add(row, prefix + "op_ceiling_1", r.op.ceiling_1);
    add(row, prefix + "op_ceiling_2", r.op.ceiling_2);
    add(row, prefix + "bep_1", r.bep.bep_e2e_1);
    add(row, prefix + "bep_2", r.bep.bep_e2e_2);
    add(row, prefix + "bep_1_hop1", r.bep.bep_1_hop1);
    add(row, prefix + "bep_2_hop1", r.bep.bep_2_hop1);
    add(row, prefix + "bep_1_hop2", r.bep.bep_1_hop2);
    add(row, prefix + "bep_2_hop2", r.bep.bep_2_hop2);
    add(row, prefix + "pf_c", r.pf_c);
    add(row, prefix + "pf_o", r.pf_o);
    add(row, prefix + "pf_e", r.pf_e);
    add(row, prefix + "abs_log_pf_c", r.abs_log_pf_c);
    add(row, prefix + "abs_log_pf_o", r.abs_log_pf_o);
    add(row, prefix + "abs_log_pf_e", r.abs_log_pf_e);
    add(row, prefix + "pf_c_degenerate", r.pf_c_degenerate);
    add(row, prefix + "pf_o_degenerate", r.pf_o_degenerate);
    add(row, prefix + "pf_e_degenerate", r.pf_e_degenerate);

    // Monte Carlo columns are present but empty unless simulation was run.
    auto add_mc = [&](const std::string& name, const McEstimate* e) {
        add(row, prefix + name, e ? format_double(e->value) : "");
        add(row, prefix + name + "_se", e ? format_double(e->std_err) : "");
    };
    const RatesOutageEstimate* mr = r.mc_rates ? &*r.mc_rates : nullptr;
    add_mc("mc_ec_1", mr ? &mr->ec_1 : nullptr);
    add_mc("mc_ec_2", mr ? &mr->ec_2 : nullptr);
    add_mc("mc_op_1", mr ? &mr->op_1 : nullptr);
    add_mc("mc_op_2", mr ? &mr->op_2 : nullptr);
    add(row, prefix + "mc_trials", mr ? format_u64(mr->ec_1.n) : std::string());

    const BerEstimate* mb = r.mc_ber_est ? &*r.mc_ber_est : nullptr;
    add_mc("mc_ber_1", mb ? &mb->ber_1 : nullptr);
    add_mc("mc_ber_2", mb ? &mb->ber_2 : nullptr);
    add(row, prefix + "mc_ber_bits", mb ? format_u64(mb->ber_1.n) : std::string());
    add(row, prefix + "mc_genie", mb ? std::string(mb->genie_sic ? "1" : "0") : std::string());

    auto add_ratio = [&](const std::string& name, const std::optional<McRatio>& m) {
        add(row, prefix + name, m ? format_double(m->value) : "");
        add(row, prefix + name + "_se", m ? format_double(m->std_err) : "");
    };
    add_ratio("mc_pf_c", r.mc_pf_c);
    add_ratio("mc_pf_o", r.mc_pf_o);
    add_ratio("mc_pf_e", r.mc_pf_e);
}

void add_meta(Row& row, const ReportMeta& meta) {
    add(row, "seed_master", format_u64(meta.seed.master_seed));
    add(row, "seed_stream", format_u64(meta.seed.stream_id));
    add(row, "tool_version", std::string(kToolVersion));
}

}  // namespace

std::string format_double(double v) {
    if (std::isnan(v)) return "nan";
    if (std::isinf(v)) return v > 0 ? "inf" : "-inf";
    char buf[64];
    const auto res = std::to_chars(buf, buf + sizeof(buf), v);
    return std::string(buf, res.ptr);
}

Row kpi_row(const KpiReport& report, const ReportMeta& meta) {
    Row row;
    add(row, "job", meta.job);
    add_config(row, report.cfg);
    add_kpis(row, report, "");
    add_meta(row, meta);
    return row;
}

Row comparison_row(const ComparisonReport& report, const ReportMeta& meta) {
    Row row;
    add(row, "job", meta.job);
    add_config(row, report.reversed.cfg);
    add(row, "c_alpha1", report.conventional.cfg.alpha1);
    add_kpis(row, report.reversed, "r_");
    add_kpis(row, report.conventional, "c_");
    add(row, "worst_ec_r", report.worst_ec_r);
    add(row, "worst_ec_c", report.worst_ec_c);
    add(row, "worst_op_r", report.worst_op_r);
    add(row, "worst_op_c", report.worst_op_c);
    add(row, "worst_bep_r", report.worst_bep_r);
    add(row, "worst_bep_c", report.worst_bep_c);
    add(row, "winner_ec", to_string(report.winner_ec));
    add(row, "winner_op", to_string(report.winner_op));
    add(row, "winner_bep", to_string(report.winner_bep));
    add_meta(row, meta);
    return row;
}

std::string rows_to_csv(const std::vector<Row>& rows) {
    std::ostringstream os;
    if (rows.empty()) return {};
    for (std::size_t c = 0; c < rows.front().size(); ++c)
        os << (c ? "," : "") << rows.front()[c].first;
    os << "\n";
    for (const Row& row : rows) {
        for (std::size_t c = 0; c < row.size(); ++c) os << (c ? "," : "") << row[c].second;
        os << "\n";
    }
    return os.str();
}

std::string rows_to_json(const std::vector<Row>& rows, const ReportMeta& meta) {
    nlohmann::ordered_json doc;
    doc["tool"] = "dfnoma";
    doc["version"] = kToolVersion;
    doc["job"] = meta.job;
    doc["seed_master"] = meta.seed.master_seed;
    doc["seed_stream"] = meta.seed.stream_id;
    doc["rows"] = nlohmann::ordered_json::array();
    for (const Row& row : rows) {
        nlohmann::ordered_json obj;
        for (const auto& [name, value] : row) {
            // numeric cells become JSON numbers; everything else stays a string
            if (!value.empty() && value != "inf" && value != "-inf" && value != "nan") {
                char* end = nullptr;
                const double x = std::strtod(value.c_str(), &end);
                if (end == value.c_str() + value.size()) {
                    obj[name] = x;
                    continue;
                }
            }
            obj[name] = value;
        }
        doc["rows"].push_back(std::move(obj));
    }
    return doc.dump(2) + "\n";
}

std::string kpi_csv(const std::vector<KpiReport>& reports, const ReportMeta& meta) {
    std::vector<Row> rows;
    rows.reserve(reports.size());
    for (const auto& r : reports) rows.push_back(kpi_row(r, meta));
    return rows_to_csv(rows);
}

std::string kpi_json(const std::vector<KpiReport>& reports, const ReportMeta& meta) {
    std::vector<Row> rows;
    rows.reserve(reports.size());
    for (const auto& r : reports) rows.push_back(kpi_row(r, meta));
    return rows_to_json(rows, meta);
}

std::string comparison_csv(const std::vector<ComparisonReport>& reports,
                           const ReportMeta& meta) {
    std::vector<Row> rows;
    rows.reserve(reports.size());
    for (const auto& r : reports) rows.push_back(comparison_row(r, meta));
    return rows_to_csv(rows);
}

std::string comparison_json(const std::vector<ComparisonReport>& reports,
                            const ReportMeta& meta) {
    std::vector<Row> rows;
    rows.reserve(reports.size());
    for (const auto& r : reports) rows.push_back(comparison_row(r, meta));
    return rows_to_json(rows, meta);
}

}  // namespace dfnoma
