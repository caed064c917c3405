#pragma once

#include "heun/complex.hpp"

namespace heun {

// Principal branch of ln Gamma(z), continuous off the non-positive real axis.
// Throws PoleError for z in {0, -1, -2, ...}.
Complex log_gamma(Complex z);

Complex gamma(Complex z);

// 1/Gamma(z); exactly zero at the poles of Gamma.
Complex reciprocal_gamma(Complex z);

// ln Gamma(z + a) - ln Gamma(z), accurate when |z| >> |a|.
Complex log_gamma_ratio(Complex z, Complex a);

// |Gamma(1-z) Gamma(z) - pi/sin(pi z)| / |pi/sin(pi z)|. Throws for integer z.
double reflection_residual(Complex z);

// Rising factorial a (a+1) ... (a+n-1).
Complex pochhammer(Complex a, long n);

// Falling factorial a (a-1) ... (a-n+1).
Complex falling_factorial(Complex a, long n);

// Generalized binomial coefficient a choose k.
Complex binomial(Complex a, long k);

// Bessel J of complex order by its power series; intended for |z| up to ~30.
Complex bessel_j(Complex nu, Complex z);

// Sum_{k>=0} x^k / (k! Gamma(c + k)), valid for every complex c.
// Shared by the S/W/Q invariants, the Stokes series and the Borel transforms.
Complex bessel_type_series(Complex c, Complex x);

} // namespace heun
