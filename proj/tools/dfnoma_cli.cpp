// Command-line front end: loads a scenario config, applies overrides and
// grid axes, dispatches analytic / simulation / sweep / comparison /
// validation jobs and writes CSV or JSON result tables.

#include <cstdint>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "dfnoma/fairness.hpp"
#include "dfnoma/report.hpp"

using namespace dfnoma;

namespace {

#ifndef DFNOMA_PRESET_DIR
#define DFNOMA_PRESET_DIR "presets"
#endif

struct CommonArgs {
    std::string config_path;
    std::string preset;
    std::vector<std::string> sets;
    std::vector<std::string> grid_specs;
    std::uint64_t seed = 42;
    int threads = 0;
    double quad_tol = kDefaultQuadTol;
    std::string out_path;
    std::string format = "csv";
};

void add_common(CLI::App* cmd, CommonArgs& args, bool out_required) {
    cmd->add_option("--config", args.config_path, "scenario config file");
    cmd->add_option("--preset", args.preset,
                    "bundled preset name (fig2..fig16), resolved under " DFNOMA_PRESET_DIR);
    cmd->add_option("--set", args.sets, "override a config key, key=value")
        ->type_name("KEY=VALUE");
    cmd->add_option("--grid", args.grid_specs,
                    "grid axis, e.g. rho_s_db=0:5:40 or xi_db=perfect,-20,-10")
        ->type_name("AXIS=SPEC");
    cmd->add_option("--seed", args.seed, "master seed for all Monte Carlo substreams");
    cmd->add_option("--threads", args.threads, "worker threads (0 = all cores)");
    cmd->add_option("--quad-tol", args.quad_tol, "absolute quadrature tolerance");
    auto* out = cmd->add_option("--out", args.out_path, "output file path");
    if (out_required) out->required();
    cmd->add_option("--format", args.format, "output format: csv or json")
        ->check(CLI::IsMember({"csv", "json"}));
}

// Scenario plus optional grid axes, both from the file and the command line.
struct LoadedJob {
    SystemConfig cfg;
    GridSpec grid;
};

LoadedJob load_job(const CommonArgs& args) {
    LoadedJob job;
    std::map<std::string, std::string> kv;
    std::string path = args.config_path;
    if (!args.preset.empty()) {
        if (!path.empty()) throw ConfigError("config", "use either --config or --preset");
        path = std::string(DFNOMA_PRESET_DIR) + "/" + args.preset + ".ini";
    }
    if (!path.empty()) kv = read_config_file(path);

    // grid axes may live in the file as axis1..axis9 keys
    std::vector<std::string> file_axes;
    for (auto it = kv.begin(); it != kv.end();) {
        if (it->first.rfind("axis", 0) == 0) {
            file_axes.push_back(it->second);
            it = kv.erase(it);
        } else {
            ++it;
        }
    }

    job.cfg = config_from_map(kv);
    for (const std::string& s : args.sets) {
        const auto eq = s.find('=');
        if (eq == std::string::npos)
            throw ConfigError("set", "expected key=value, got '" + s + "'");
        apply_setting(job.cfg, s.substr(0, eq), s.substr(eq + 1));
    }
    job.cfg = validate(job.cfg);

    const auto& axis_specs = args.grid_specs.empty() ? file_axes : args.grid_specs;
    for (const std::string& spec : axis_specs)
        job.grid.axes.push_back(parse_grid_axis(spec));
    return job;
}

void write_output(const CommonArgs& args, const std::string& text) {
    std::ofstream out(args.out_path, std::ios::binary);
    if (!out) throw std::runtime_error("cannot open output file '" + args.out_path + "'");
    out << text;
    if (!out.good()) throw std::runtime_error("failed writing '" + args.out_path + "'");
    std::cout << "wrote " << args.out_path << "\n";
}

FairnessOptions make_options(const CommonArgs& args, bool with_rates, std::uint64_t trials,
                             bool with_ber, std::uint64_t ber_bits, bool genie) {
    FairnessOptions opts;
    opts.quad_tol = args.quad_tol;
    if (with_rates) {
        McOptions mc;
        mc.trials = trials;
        mc.seed = {args.seed, 0};
        mc.threads = args.threads;
        opts.rates_mc = mc;
    }
    if (with_ber) {
        BerOptions bo;
        bo.frames = (ber_bits + 1) / 2;  // 2 bits per user per frame
        bo.seed = {args.seed, 1};
        bo.threads = args.threads;
        bo.genie_sic = genie;
        opts.ber_mc = bo;
    }
    return opts;
}

int run_kpi_job(const CommonArgs& args, const std::string& job_name,
                const FairnessOptions& opts, bool print_summary) {
    const LoadedJob job = load_job(args);
    std::cout << job_name << " " << format_config(job.cfg) << "\n";
    const auto reports = sweep(job.grid, job.cfg, opts);

    ReportMeta meta;
    meta.job = job_name;
    meta.seed = {args.seed, 0};
    write_output(args, args.format == "json" ? kpi_json(reports, meta)
                                             : kpi_csv(reports, meta));

    if (print_summary) {
        const SweepSummary s = summarize_sweep(reports);
        auto describe = [&](const char* label, const ArgminCell& cell) {
            if (!cell.valid) {
                std::cout << label << ": no non-degenerate grid point\n";
                return;
            }
            const KpiReport& r = reports[cell.index];
            std::cout << label << ": alpha1=" << format_double(r.cfg.alpha1)
                      << " beta1=" << format_double(r.cfg.beta1)
                      << " rho_s_db=" << format_double(r.cfg.rho_s_db)
                      << " |log pf| = " << format_double(cell.value) << "\n";
        };
        std::cout << "grid argmin of the symmetric fairness deviation, per KPI:\n";
        describe("  capacity", s.best_pf_c);
        describe("  outage  ", s.best_pf_o);
        describe("  error   ", s.best_pf_e);
        describe("  combined", s.best_combined);
    }
    return 0;
}

int run_compare(const CommonArgs& args, const FairnessOptions& opts) {
    const LoadedJob job = load_job(args);
    if (job.cfg.scheme != Scheme::Reversed)
        throw ConfigError("scheme", "compare expects an R-DFNOMA scenario; the "
                                    "conventional twin uses alpha1* = 1 - alpha1");

    std::vector<ComparisonReport> reports;
    const std::size_t total = job.grid.points();
    reports.reserve(total);

    std::vector<std::size_t> idx(job.grid.axes.size(), 0);
    for (std::size_t p = 0; p < total; ++p) {
        SystemConfig cfg = job.cfg;
        for (std::size_t a = 0; a < job.grid.axes.size(); ++a)
            apply_axis_value(cfg, job.grid.axes[a].name, job.grid.axes[a].values[idx[a]]);
        FairnessOptions point_opts = opts;
        if (point_opts.rates_mc) point_opts.rates_mc->seed.stream_id += 2 * p;
        if (point_opts.ber_mc) point_opts.ber_mc->seed.stream_id += 2 * p + 1;
        reports.push_back(compare_schemes(validate(cfg), point_opts));
        for (std::size_t a = job.grid.axes.size(); a-- > 0;) {
            if (++idx[a] < job.grid.axes[a].values.size()) break;
            idx[a] = 0;
        }
    }

    ReportMeta meta;
    meta.job = "compare";
    meta.seed = {args.seed, 0};
    write_output(args, args.format == "json" ? comparison_json(reports, meta)
                                             : comparison_csv(reports, meta));
    return 0;
}

int run_validate(const CommonArgs& args_in, std::uint64_t trials, bool with_ber,
                 std::uint64_t ber_bits) {
    CommonArgs args = args_in;
    LoadedJob job = load_job(args);
    if (job.grid.axes.empty())
        job.grid.axes.push_back(parse_grid_axis("rho_s_db=0:5:40"));

    const FairnessOptions opts = make_options(args, true, trials, with_ber, ber_bits, false);
    const auto reports = sweep(job.grid, job.cfg, opts);

    int failures = 0;
    auto check = [&](const KpiReport& r, const char* metric, double analytic, double mc,
                     double tol) {
        const bool ok = std::abs(analytic - mc) <= tol;
        if (!ok) ++failures;
        std::cout << (ok ? "PASS" : "FAIL") << " rho_s_db="
                  << format_double(r.cfg.rho_s_db) << " alpha1="
                  << format_double(r.cfg.alpha1) << " beta1=" << format_double(r.cfg.beta1)
                  << " " << metric << " analytic=" << format_double(analytic)
                  << " mc=" << format_double(mc) << " tol=" << format_double(tol) << "\n";
    };

    for (const KpiReport& r : reports) {
        const auto& mc = *r.mc_rates;
        check(r, "op_1", r.op.op_1, mc.op_1.value, 3.0 * mc.op_1.std_err);
        check(r, "op_2", r.op.op_2, mc.op_2.value, 3.0 * mc.op_2.std_err);
        check(r, "ec_1", r.ec.ec_1, mc.ec_1.value, std::max(0.02, 3.0 * mc.ec_1.std_err));
        check(r, "ec_2", r.ec.ec_2, mc.ec_2.value, std::max(0.02, 3.0 * mc.ec_2.std_err));
        if (with_ber && r.mc_ber_est) {
            const auto& mb = *r.mc_ber_est;
            if (r.bep.bep_e2e_1 >= 1e-4)
                check(r, "ber_1", r.bep.bep_e2e_1, mb.ber_1.value, 3.0 * mb.ber_1.std_err);
            if (r.bep.bep_e2e_2 >= 1e-4)
                check(r, "ber_2", r.bep.bep_e2e_2, mb.ber_2.value, 3.0 * mb.ber_2.std_err);
        }
    }

    if (!args.out_path.empty()) {
        ReportMeta meta;
        meta.job = "validate";
        meta.seed = {args.seed, 0};
        write_output(args, args.format == "json" ? kpi_json(reports, meta)
                                                 : kpi_csv(reports, meta));
    }
    std::cout << (failures == 0 ? "validation passed" : "validation FAILED") << " ("
              << reports.size() << " points)\n";
    return failures == 0 ? 0 : 1;
}

}  // namespace

namespace {

int run_main(int argc, char** argv) {
    CLI::App app{"link-level evaluation toolkit for two-hop decode-forward NOMA "
                 "with channel-dependent imperfect SIC"};
    app.set_version_flag("--version", kToolVersion);
    app.require_subcommand(1);

    CommonArgs analyze_args, simulate_args, sweep_args, compare_args, validate_args;
    std::uint64_t sim_trials = 1'000'000, sweep_trials = 0, compare_trials = 0,
                  validate_trials = 1'000'000;
    std::uint64_t sim_ber_bits = 10'000'000, sweep_ber_bits = 1'000'000,
                  compare_ber_bits = 1'000'000, validate_ber_bits = 10'000'000;
    bool sim_ber = false, sweep_ber = false, compare_ber = false, validate_ber = false;
    bool sim_genie = false;

    auto* analyze = app.add_subcommand("analyze", "closed-form KPIs over a grid");
    add_common(analyze, analyze_args, true);

    auto* simulate =
        app.add_subcommand("simulate", "Monte Carlo estimates alongside the closed forms");
    add_common(simulate, simulate_args, true);
    simulate->add_option("--trials", sim_trials, "SINR-level trials per grid point");
    simulate->add_flag("--ber", sim_ber, "run the symbol-level BER chain too");
    simulate->add_option("--ber-bits", sim_ber_bits, "bits per user per grid point");
    simulate->add_flag("--genie", sim_genie, "genie-aided cancellation (diagnostic)");

    auto* sweepc = app.add_subcommand("sweep", "power-allocation / SNR sweeps with "
                                               "fairness argmin summary");
    add_common(sweepc, sweep_args, true);
    sweepc->add_option("--trials", sweep_trials, "optional SINR-level trials per point");
    sweepc->add_flag("--ber", sweep_ber, "add symbol-level BER per point");
    sweepc->add_option("--ber-bits", sweep_ber_bits, "bits per user per point");

    auto* compare = app.add_subcommand(
        "compare", "R-DFNOMA vs parameter-matched C-DFNOMA (alpha1* = 1 - alpha1)");
    add_common(compare, compare_args, true);
    compare->add_option("--trials", compare_trials, "optional SINR-level trials per point");
    compare->add_flag("--ber", compare_ber, "add symbol-level BER per point");
    compare->add_option("--ber-bits", compare_ber_bits, "bits per user per point");

    auto* validate_cmd = app.add_subcommand(
        "validate", "analytic-vs-simulation agreement suite; nonzero exit on any "
                    "3-sigma violation");
    add_common(validate_cmd, validate_args, false);
    validate_cmd->add_option("--trials", validate_trials, "SINR-level trials per point");
    validate_cmd->add_flag("--ber", validate_ber, "include the symbol-level BER check");
    validate_cmd->add_option("--ber-bits", validate_ber_bits, "bits per user per point");

    CLI11_PARSE(app, argc, argv);

    try {
        if (analyze->parsed()) {
            return run_kpi_job(analyze_args, "analyze",
                               make_options(analyze_args, false, 0, false, 0, false), false);
        }
        if (simulate->parsed()) {
            return run_kpi_job(simulate_args, "simulate",
                               make_options(simulate_args, true, sim_trials, sim_ber,
                                            sim_ber_bits, sim_genie),
                               false);
        }
        if (sweepc->parsed()) {
            return run_kpi_job(sweep_args, "sweep",
                               make_options(sweep_args, sweep_trials > 0, sweep_trials,
                                            sweep_ber, sweep_ber_bits, false),
                               true);
        }
        if (compare->parsed()) {
            return run_compare(compare_args,
                               make_options(compare_args, compare_trials > 0, compare_trials,
                                            compare_ber, compare_ber_bits, false));
        }
        if (validate_cmd->parsed()) {
            return run_validate(validate_args, validate_trials, validate_ber,
                                validate_ber_bits);
        }
    } catch (const ConfigError& e) {
        std::cerr << "config error: " << e.what() << "\n";
        return 2;
    } catch (const ModulationError& e) {
        std::cerr << "config error: " << e.what() << "\n";
        return 2;
    } catch (const QuadratureError& e) {
        std::cerr << "quadrature error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 3;
    }
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    try {
        return run_main(argc, argv);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 3;
    }
}
