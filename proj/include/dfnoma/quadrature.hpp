// Globally adaptive Gauss-Kronrod (7,15) quadrature with absolute error
// control. Worst interval first; deterministic for a given integrand.

#pragma once

#include <functional>
#include <stdexcept>
#include <string>

namespace dfnoma {

class QuadratureError : public std::runtime_error {
public:
    explicit QuadratureError(const std::string& message) : std::runtime_error(message) {}
};

struct QuadratureResult {
    double value = 0.0;
    double error_estimate = 0.0;
    int subdivisions = 0;
};

// Integrates f over [a, b] until the summed Kronrod error estimate drops
// below abs_tol. Throws QuadratureError if max_subdivisions is exhausted
// first or the integrand produces non-finite values.
QuadratureResult integrate_adaptive(const std::function<double(double)>& f, double a,
                                    double b, double abs_tol, int max_subdivisions = 4000);

}  // namespace dfnoma
