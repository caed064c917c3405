#pragma once

#include "heun/complex.hpp"

#include <functional>

namespace heun {

enum class EndpointHandling { none, algebraic_weakening };

struct QuadratureConfig {
    double rel_tol = 1e-12;
    double abs_tol = 1e-15;
    int max_depth = 40;
    EndpointHandling endpoint_singularity_handling = EndpointHandling::none;
    int initial_panels = 8;

    void validate() const;
};

struct QuadratureResult {
    Complex value;
    double error = 0.0;
    bool converged = true;
    long evaluations = 0;

    QuadratureResult& operator+=(const QuadratureResult& o)
    {
        value += o.value;
        error += o.error;
        converged = converged && o.converged;
        evaluations += o.evaluations;
        return *this;
    }
};

// Globally adaptive Gauss-Kronrod (7, 15) on [a, b]. With algebraic_weakening
// the substitution t = a + (b - a) u^2 is applied at the left endpoint.
QuadratureResult integrate_interval(const std::function<Complex(double)>& f, double a, double b,
                                    const QuadratureConfig& cfg);

} // namespace heun
