// Scenario parameters for the two-hop decode-forward NOMA link and the
// derived per-link budget. Every other module consumes only validated
// configs, so validation lives here and nowhere else.

#pragma once

#include <limits>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>

namespace dfnoma {

inline constexpr const char* kToolVersion = "1.0.0";

// Power-allocation ordering in the source->relay phase. Reversed gives the
// near user (D1) the larger source power fraction and flips the relay's
// detection order; Conventional is the usual far-user-first arrangement.
enum class Scheme { Reversed, Conventional };

std::string to_string(Scheme s);         // "R-DFNOMA" / "C-DFNOMA"
Scheme scheme_from_string(const std::string& name);

double db_to_linear(double db);          // 10^(db/10); -inf maps to 0
double linear_to_db(double lin);

struct SystemConfig {
    Scheme scheme = Scheme::Reversed;

    // Power fractions for D1's symbol; the complement goes to D2.
    double alpha1 = 0.9;                 // at the source (alpha1* for C-DFNOMA)
    double beta1 = 0.2;                  // at the relay

    double rho_s_db = 20.0;              // transmit SNR at the source [dB]
    std::optional<double> rho_r_db;      // relay SNR; tracks rho_s_db if unset

    double d_sr = 5.0;                   // source->relay distance
    double d_r1 = 1.0;                   // relay->D1
    double d_r2 = 3.0;                   // relay->D2
    double mu = 10.0;                    // propagation constant
    double tau = 2.0;                    // path-loss exponent

    // Residual-interference coefficients after SIC, in dB. -inf encodes a
    // perfect canceler (linear 0); 0 dB encodes no cancellation at all.
    double xi_r_db = -10.0;              // at the relay
    std::optional<double> xi_1_db;       // at D1; tracks xi_r_db if unset

    double rate_target_1 = 0.2;          // QoS target rates [bit/s/Hz]
    double rate_target_2 = 0.1;

    int m1 = 4;                          // modulation orders; the error-rate
    int m2 = 4;                          //   analysis supports only 4 (QPSK)

    double alpha2() const { return 1.0 - alpha1; }
    double beta2() const { return 1.0 - beta1; }
    double rho_r_db_resolved() const { return rho_r_db ? *rho_r_db : rho_s_db; }
    double xi_1_db_resolved() const { return xi_1_db ? *xi_1_db : xi_r_db; }
};

// Validation failure; names the offending field so callers can report it.
class ConfigError : public std::runtime_error {
public:
    ConfigError(std::string field, const std::string& message)
        : std::runtime_error(field + ": " + message), field_(std::move(field)) {}
    const std::string& field() const { return field_; }

private:
    std::string field_;
};

// Returns the config iff every invariant holds, throws ConfigError otherwise.
// Scheme-specific power ordering: Reversed needs alpha1 > 1/2, Conventional
// needs alpha1 < 1/2; both need beta1 < 1/2.
SystemConfig validate(const SystemConfig& raw);

// Mean channel power gains sigma^2 = mu * d^-tau and linearized SNR / SIC
// coefficients. Pure function of a validated config.
struct LinkBudget {
    double sigma2_sr = 0.0;
    double sigma2_r1 = 0.0;
    double sigma2_r2 = 0.0;
    double rho_s = 0.0;
    double rho_r = 0.0;
    double xi_r = 0.0;
    double xi_1 = 0.0;
};

LinkBudget derive_budget(const SystemConfig& cfg);

// --- config file handling -------------------------------------------------
//
// Structured text, key = value with [section] headers. Sections are
// organisational only: keys are globally unique. '#' and ';' start comments.
// The key set matches the SystemConfig field names; "scheme" takes
// R-DFNOMA / C-DFNOMA and the xi_*_db keys accept the word "perfect".

std::map<std::string, std::string> read_config_file(const std::string& path);

// Applies one key=value setting (config-file key names). Unknown keys and
// malformed values throw ConfigError.
void apply_setting(SystemConfig& cfg, const std::string& key, const std::string& value);

SystemConfig config_from_map(const std::map<std::string, std::string>& kv,
                             const SystemConfig& base = SystemConfig{});

// Formats a config back to the file syntax (used to embed the resolved
// scenario in outputs). xi = -inf round-trips as "perfect".
std::string format_config(const SystemConfig& cfg);

}  // namespace dfnoma
