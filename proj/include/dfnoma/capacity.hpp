// Ergodic capacity: exact values by adaptive quadrature of the
// complementary-CDF integral, plus the closed-form high-SNR ceilings.
//
// For each user the two hop SINRs are independent and each has CDF
// 1 - exp(-z / ((num - den*z) * rho * sigma2)) on z in [0, num/den), so
//   EC = 1/(2 ln 2) * Integral_0^z* exp(-...) / (1+z) dz
// with z* the first ceiling. The integrand is defined as 0 from z* on,
// where the min-SINR CDF saturates; the upper limit is additionally capped
// at 1e3. The ceiling argument eta = min of the two hop ceilings gives the
// high-SNR approximation (1/2) log2(eta); the exact integral converges to
// (1/2) log2(1 + eta), so it may exceed that approximation once eta is
// small. Values are reported unclamped with flags for the degenerate cases.

#pragma once

#include <utility>

#include "dfnoma/config.hpp"
#include "dfnoma/quadrature.hpp"

namespace dfnoma {

struct EcBound {
    double bound_1 = 0.0, bound_2 = 0.0;  // max(0, 1/2 log2(eta)); +inf if unbounded
    double eta_1 = 0.0, eta_2 = 0.0;      // SINR ceilings, may be +inf
    bool unbounded_1 = false, unbounded_2 = false;  // eta infinite (perfect SIC)
    bool degenerate_1 = false, degenerate_2 = false;  // eta <= 1, bound clamped to 0
};

struct EcResult {
    double ec_1 = 0.0, ec_2 = 0.0;        // exact ergodic capacities [bit/s/Hz]
    double ec_sum = 0.0;                  // ec_1 + ec_2
    double err_1 = 0.0, err_2 = 0.0;      // quadrature error estimates
    EcBound bound;
};

inline constexpr double kDefaultQuadTol = 1e-8;

EcBound ec_bound(const SystemConfig& cfg, const LinkBudget& budget);

// Throws QuadratureError if the requested tolerance cannot be reached.
std::pair<double, double> ec_exact(const SystemConfig& cfg, const LinkBudget& budget,
                                   double abs_tol = kDefaultQuadTol);

EcResult ec_analysis(const SystemConfig& cfg, const LinkBudget& budget,
                     double abs_tol = kDefaultQuadTol);

}  // namespace dfnoma
