#pragma once

#include "heun/dche_model.hpp"
#include "heun/report.hpp"
#include "heun/unfold_model.hpp"

#include <span>
#include <vector>

namespace heun {

struct Extrapolation {
    Complex limit;
    double empirical_order;  // fitted p in v = L + C h^p, from the last three points
    bool fallback;           // single-term fit residual above 10%: limit is the last value
    double residual;
};

// Richardson extrapolation to h -> 0. Neville elimination runs in h^q with
// q = order_hint when positive, else q = fitted p. Needs at least 3 points.
Extrapolation richardson_extrapolate(std::span<const Complex> values, std::span<const double> h,
                                     double order_hint = 0.0);

// 1e-2, 1e-3, ..., 1e-6.
std::vector<double> default_eps_sequence();
// 25, 50, 100, 200.
std::vector<long> default_m_values();

inline constexpr double default_limit_tolerance = 1e-4;

// q_R + q_L against lambda = gamma^(alpha-1)/(alpha-1)!, extrapolated in eps.
SweepReport check_sum_limit(const DcheParams& p, std::span<const double> eps_values,
                            double rel_tol = default_limit_tolerance);

// Signs of Re q_R, Re q_L and the growth order -(alpha-1)/2 of |q_k| in eps.
SweepReport check_divergence_sign(const DcheParams& p, std::span<const double> eps_values,
                                  double order_slack = 0.2);

// d_L along the resonant sequence against (-beta)^(1-alpha) Sum ..., extrapolated in sqrt eps.
SweepReport check_dL_limit(const DcheParams& p, std::span<const long> m_values,
                           double rel_tol = default_limit_tolerance);

// Top-right entry of the unfolded Stokes matrix against mu.
SweepReport check_stokes_limit(const DcheParams& p, std::span<const long> m_values,
                               double rel_tol = default_limit_tolerance);

// Top-right entry of the unfolded monodromy against 2 pi i lambda.
SweepReport check_monodromy_limit(const DcheParams& p, std::span<const double> eps_values,
                                  double rel_tol = default_limit_tolerance);

struct EpsSeriesCheck {
    Complex gamma;
    double eps;
    Complex direct_minus;  // ((1-eps)/(1+eps))^(gamma/(2 sqrt eps))
    Complex direct_plus;   // ((1+eps)/(1-eps))^(gamma/(2 sqrt eps))
    Complex series_minus;  // expansion through (sqrt eps)^5
    Complex series_plus;
    double residual;
    double bound;  // C eps^3
    bool pass;
};

EpsSeriesCheck eps_power_series_check(Complex gamma, double eps);

// eps_power_series_check over a sweep; values are direct_minus, target 1.
SweepReport eps_series_sweep(Complex gamma, std::span<const double> eps_values,
                             double rel_tol = default_limit_tolerance);

} // namespace heun
