#include "dfnoma/config.hpp"

#include <algorithm>
#include <cctype>
#include <cmath>
#include <cstdlib>
#include <fstream>
#include <sstream>

namespace dfnoma {

namespace {

std::string lower(std::string s) {
    std::transform(s.begin(), s.end(), s.begin(),
                   [](unsigned char c) { return static_cast<char>(std::tolower(c)); });
    return s;
}

std::string trim(const std::string& s) {
    const auto b = s.find_first_not_of(" \t\r\n");
    if (b == std::string::npos) return {};
    const auto e = s.find_last_not_of(" \t\r\n");
    return s.substr(b, e - b + 1);
}

double parse_number(const std::string& key, const std::string& value) {
    const std::string v = trim(value);
    if (v.empty()) throw ConfigError(key, "empty value");
    char* end = nullptr;
    const double x = std::strtod(v.c_str(), &end);
    if (end != v.c_str() + v.size())
        throw ConfigError(key, "not a number: '" + value + "'");
    return x;
}

// xi fields accept "perfect" for a zero-residual canceler.
double parse_xi_db(const std::string& key, const std::string& value) {
    if (lower(trim(value)) == "perfect")
        return -std::numeric_limits<double>::infinity();
    return parse_number(key, value);
}

int parse_int(const std::string& key, const std::string& value) {
    const double x = parse_number(key, value);
    const int i = static_cast<int>(x);
    if (static_cast<double>(i) != x)
        throw ConfigError(key, "not an integer: '" + value + "'");
    return i;
}

void check(bool ok, const std::string& field, const std::string& message) {
    if (!ok) throw ConfigError(field, message);
}

std::string format_xi(double xi_db) {
    if (std::isinf(xi_db) && xi_db < 0) return "perfect";
    std::ostringstream os;
    os << xi_db;
    return os.str();
}

}  // namespace

std::string to_string(Scheme s) {
    return s == Scheme::Reversed ? "R-DFNOMA" : "C-DFNOMA";
}

Scheme scheme_from_string(const std::string& name) {
    const std::string n = lower(trim(name));
    if (n == "r-dfnoma" || n == "r_dfnoma" || n == "reversed" || n == "r")
        return Scheme::Reversed;
    if (n == "c-dfnoma" || n == "c_dfnoma" || n == "conventional" || n == "c")
        return Scheme::Conventional;
    throw ConfigError("scheme", "unknown scheme '" + name + "'");
}

double db_to_linear(double db) {
    if (std::isinf(db) && db < 0) return 0.0;
    return std::pow(10.0, db / 10.0);
}

double linear_to_db(double lin) {
    if (lin == 0.0) return -std::numeric_limits<double>::infinity();
    return 10.0 * std::log10(lin);
}

SystemConfig validate(const SystemConfig& raw) {
    check(std::isfinite(raw.alpha1) && raw.alpha1 > 0.0 && raw.alpha1 < 1.0,
          "alpha1", "power fraction must lie strictly in (0, 1)");
    check(std::isfinite(raw.beta1) && raw.beta1 > 0.0 && raw.beta1 < 1.0,
          "beta1", "power fraction must lie strictly in (0, 1)");

    if (raw.scheme == Scheme::Reversed) {
        check(raw.alpha1 > 0.5, "alpha1",
              "R-DFNOMA power ordering requires alpha1 > alpha2 (alpha1 > 0.5)");
    } else {
        check(raw.alpha1 < 0.5, "alpha1",
              "C-DFNOMA power ordering requires alpha1 < alpha2 (alpha1 < 0.5)");
    }
    check(raw.beta1 < 0.5, "beta1",
          "relay power ordering requires beta2 > beta1 (beta1 < 0.5)");

    check(raw.d_sr > 0.0, "d_sr", "distance must be positive");
    check(raw.d_r1 > 0.0, "d_r1", "distance must be positive");
    check(raw.d_r2 > 0.0, "d_r2", "distance must be positive");
    check(raw.mu > 0.0, "mu", "propagation constant must be positive");
    check(raw.tau >= 0.0, "tau", "path-loss exponent must be nonnegative");

    check(!std::isnan(raw.rho_s_db), "rho_s_db", "must be a number");
    if (raw.rho_r_db) check(!std::isnan(*raw.rho_r_db), "rho_r_db", "must be a number");

    // xi in dB <= 0 keeps the linear residual coefficient within [0, 1].
    check(raw.xi_r_db <= 0.0 && !std::isnan(raw.xi_r_db), "xi_r_db",
          "SIC residual must satisfy 0 <= xi <= 1 (xi_db <= 0, or 'perfect')");
    check(raw.xi_1_db_resolved() <= 0.0 && !std::isnan(raw.xi_1_db_resolved()), "xi_1_db",
          "SIC residual must satisfy 0 <= xi <= 1 (xi_db <= 0, or 'perfect')");

    check(raw.rate_target_1 > 0.0, "rate_target_1", "target rate must be positive");
    check(raw.rate_target_2 > 0.0, "rate_target_2", "target rate must be positive");

    check(raw.m1 >= 2, "m1", "modulation order must be >= 2");
    check(raw.m2 >= 2, "m2", "modulation order must be >= 2");

    return raw;
}

LinkBudget derive_budget(const SystemConfig& cfg) {
    LinkBudget b;
    b.sigma2_sr = cfg.mu * std::pow(cfg.d_sr, -cfg.tau);
    b.sigma2_r1 = cfg.mu * std::pow(cfg.d_r1, -cfg.tau);
    b.sigma2_r2 = cfg.mu * std::pow(cfg.d_r2, -cfg.tau);
    b.rho_s = db_to_linear(cfg.rho_s_db);
    b.rho_r = db_to_linear(cfg.rho_r_db_resolved());
    b.xi_r = db_to_linear(cfg.xi_r_db);
    b.xi_1 = db_to_linear(cfg.xi_1_db_resolved());
    return b;
}

std::map<std::string, std::string> read_config_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ConfigError("config", "cannot open '" + path + "'");

    std::map<std::string, std::string> kv;
    std::string line;
    int lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        const auto comment = line.find_first_of("#;");
        if (comment != std::string::npos) line.erase(comment);
        line = trim(line);
        if (line.empty()) continue;
        if (line.front() == '[') {
            if (line.back() != ']')
                throw ConfigError("config", path + ":" + std::to_string(lineno) +
                                                ": malformed section header");
            continue;  // sections are documentation only
        }
        const auto eq = line.find('=');
        if (eq == std::string::npos)
            throw ConfigError("config", path + ":" + std::to_string(lineno) +
                                            ": expected key = value");
        const std::string key = lower(trim(line.substr(0, eq)));
        const std::string value = trim(line.substr(eq + 1));
        if (key.empty())
            throw ConfigError("config", path + ":" + std::to_string(lineno) + ": empty key");
        kv[key] = value;
    }
    return kv;
}

void apply_setting(SystemConfig& cfg, const std::string& rawkey, const std::string& value) {
    const std::string key = lower(trim(rawkey));
    if (key == "scheme") {
        cfg.scheme = scheme_from_string(value);
    } else if (key == "alpha1") {
        cfg.alpha1 = parse_number(key, value);
    } else if (key == "beta1") {
        cfg.beta1 = parse_number(key, value);
    } else if (key == "rho_s_db") {
        cfg.rho_s_db = parse_number(key, value);
    } else if (key == "rho_r_db") {
        cfg.rho_r_db = parse_number(key, value);
    } else if (key == "d_sr") {
        cfg.d_sr = parse_number(key, value);
    } else if (key == "d_r1") {
        cfg.d_r1 = parse_number(key, value);
    } else if (key == "d_r2") {
        cfg.d_r2 = parse_number(key, value);
    } else if (key == "mu") {
        cfg.mu = parse_number(key, value);
    } else if (key == "tau") {
        cfg.tau = parse_number(key, value);
    } else if (key == "xi_r_db") {
        cfg.xi_r_db = parse_xi_db(key, value);
    } else if (key == "xi_1_db") {
        cfg.xi_1_db = parse_xi_db(key, value);
    } else if (key == "xi_db") {
        // convenience: set both nodes at once
        cfg.xi_r_db = parse_xi_db(key, value);
        cfg.xi_1_db.reset();
    } else if (key == "rate_target_1") {
        cfg.rate_target_1 = parse_number(key, value);
    } else if (key == "rate_target_2") {
        cfg.rate_target_2 = parse_number(key, value);
    } else if (key == "m1") {
        cfg.m1 = parse_int(key, value);
    } else if (key == "m2") {
        cfg.m2 = parse_int(key, value);
    } else {
        throw ConfigError(key, "unknown config key");
    }
}

SystemConfig config_from_map(const std::map<std::string, std::string>& kv,
                             const SystemConfig& base) {
    SystemConfig cfg = base;
    for (const auto& [k, v] : kv) apply_setting(cfg, k, v);
    return cfg;
}

std::string format_config(const SystemConfig& cfg) {
    std::ostringstream os;
    os << "scheme=" << to_string(cfg.scheme)
       << " alpha1=" << cfg.alpha1 << " beta1=" << cfg.beta1
       << " rho_s_db=" << cfg.rho_s_db << " rho_r_db=" << cfg.rho_r_db_resolved()
       << " d_sr=" << cfg.d_sr << " d_r1=" << cfg.d_r1 << " d_r2=" << cfg.d_r2
       << " mu=" << cfg.mu << " tau=" << cfg.tau
       << " xi_r_db=" << format_xi(cfg.xi_r_db)
       << " xi_1_db=" << format_xi(cfg.xi_1_db_resolved())
       << " rate_target_1=" << cfg.rate_target_1
       << " rate_target_2=" << cfg.rate_target_2
       << " m1=" << cfg.m1 << " m2=" << cfg.m2;
    return os.str();
}

}  // namespace dfnoma
