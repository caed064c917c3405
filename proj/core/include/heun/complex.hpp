#pragma once

#include <cmath>
#include <complex>
#include <numbers>
#include <optional>

namespace heun {

using Complex = std::complex<double>;

inline constexpr double pi = std::numbers::pi;
inline constexpr Complex two_pi_i{0.0, 2.0 * std::numbers::pi};

inline bool is_finite(Complex z) { return std::isfinite(z.real()) && std::isfinite(z.imag()); }

// Integer value of z when z is real and integral within rel_tol, else nullopt.
std::optional<long> as_integer(Complex z, double rel_tol = 0.0);

// z^n by repeated squaring; ipow(z, 0) == 1 for every z.
Complex ipow(Complex z, long n);

// log(1 + w) without cancellation for small |w|, principal branch.
Complex log1p(Complex w);

// sin(pi z), cos(pi z) with exact reduction of Re z.
Complex sinpi(Complex z);
Complex cospi(Complex z);

} // namespace heun
