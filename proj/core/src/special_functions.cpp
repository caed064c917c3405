#include "heun/special_functions.hpp"

#include "heun/error.hpp"

#include <array>
#include <cmath>
#include <limits>
#include <string>

namespace heun {

std::optional<long> as_integer(Complex z, double rel_tol)
{
    const double scale = std::max(1.0, std::abs(z));
    if (std::abs(z.imag()) > rel_tol * scale) return std::nullopt;
    const double r = std::round(z.real());
    if (std::abs(z.real() - r) > rel_tol * scale) return std::nullopt;
    if (std::abs(r) > 9.0e15) return std::nullopt;
    return static_cast<long>(r);
}

Complex ipow(Complex z, long n)
{
    if (n < 0) return 1.0 / ipow(z, -n);
    Complex result{1.0, 0.0};
    Complex base = z;
    auto e = static_cast<unsigned long>(n);
    while (e != 0) {
        if (e & 1UL) result *= base;
        e >>= 1U;
        if (e != 0) base *= base;
    }
    return result;
}

Complex log1p(Complex w)
{
    const double u = w.real();
    const double v = w.imag();
    return {0.5 * std::log1p(2.0 * u + u * u + v * v), std::atan2(v, 1.0 + u)};
}

namespace {

// sin(pi r), cos(pi r) for real r, reduced to [-1/2, 1/2] exactly.
void sincospi_real(double x, double& s, double& c)
{
    double r = x - 2.0 * std::round(0.5 * x);  // [-1, 1]
    if (r > 0.5 || r < -0.5) {
        r = (r > 0.0 ? 1.0 : -1.0) - r;
        s = std::sin(pi * r);
        c = -std::cos(pi * r);
        return;
    }
    s = std::sin(pi * r);
    c = std::cos(pi * r);
}

bool is_gamma_pole(Complex z)
{
    return z.imag() == 0.0 && z.real() <= 0.0 && z.real() == std::round(z.real());
}

constexpr std::array<double, 10> stirling_coeff = {
    1.0 / 12.0,          -1.0 / 360.0,          1.0 / 1260.0,       -1.0 / 1680.0,
    1.0 / 1188.0,        -691.0 / 360360.0,     1.0 / 156.0,        -3617.0 / 122400.0,
    43867.0 / 244188.0,  -174611.0 / 125400.0};

Complex stirling_tail(Complex z)
{
    const Complex inv = 1.0 / z;
    const Complex inv2 = inv * inv;
    Complex acc{0.0, 0.0};
    for (std::size_t k = stirling_coeff.size(); k-- > 0;)
        acc = acc * inv2 + stirling_coeff[k];
    return acc * inv;
}

const double half_log_two_pi = 0.5 * std::log(2.0 * pi);

Complex stirling(Complex z)
{
    return (z - 0.5) * std::log(z) - z + half_log_two_pi + stirling_tail(z);
}

constexpr double stirling_min = 15.0;

bool stirling_ok(Complex z)
{
    return z.real() >= stirling_min || (z.real() >= 0.0 && std::abs(z) >= stirling_min);
}

Complex log_gamma_by_recurrence(Complex z)
{
    Complex shift_logs{0.0, 0.0};
    Complex w = z;
    while (!stirling_ok(w)) {
        shift_logs += std::log(w);
        w += 1.0;
    }
    return stirling(w) - shift_logs;
}

} // namespace

Complex sinpi(Complex z)
{
    double s = 0.0;
    double c = 0.0;
    sincospi_real(z.real(), s, c);
    const double y = pi * z.imag();
    return {s * std::cosh(y), c * std::sinh(y)};
}

Complex cospi(Complex z)
{
    double s = 0.0;
    double c = 0.0;
    sincospi_real(z.real(), s, c);
    const double y = pi * z.imag();
    return {c * std::cosh(y), -s * std::sinh(y)};
}

Complex log_gamma(Complex z)
{
    if (is_gamma_pole(z))
        throw PoleError("log_gamma: pole of Gamma at z = " + std::to_string(z.real()));
    if (!is_finite(z)) throw PreconditionError("log_gamma: non-finite argument");
    // libm tgamma is within an ulp on the positive axis; lgamma would touch signgam.
    if (z.imag() == 0.0 && z.real() > 0.0 && z.real() < 171.0) return {std::log(std::tgamma(z.real())), 0.0};
    if (z.real() < -50.0 && std::abs(z.imag()) <= 100.0) {
        const double y = z.imag();
        const double turns = std::floor(0.5 * z.real() + 0.25);
        const double branch = (y < 0.0 ? -2.0 * pi : 2.0 * pi) * turns;
        return std::log(pi) - std::log(sinpi(z)) - log_gamma(1.0 - z) + Complex{0.0, branch};
    }
    return log_gamma_by_recurrence(z);
}

Complex gamma(Complex z) { return std::exp(log_gamma(z)); }

Complex reciprocal_gamma(Complex z)
{
    if (is_gamma_pole(z)) return {0.0, 0.0};
    if (z.imag() == 0.0 && std::abs(z.real()) < 170.0) return {1.0 / std::tgamma(z.real()), 0.0};
    return std::exp(-log_gamma(z));
}

Complex log_gamma_ratio(Complex z, Complex a)
{
    const Complex za = z + a;
    if (z.real() >= stirling_min && za.real() >= stirling_min &&
        std::abs(z) >= 10.0 * (std::abs(a) + 1.0)) {
        return (za - 0.5) * log1p(a / z) + a * std::log(z) - a + stirling_tail(za) -
               stirling_tail(z);
    }
    return log_gamma(za) - log_gamma(z);
}

double reflection_residual(Complex z)
{
    if (as_integer(z)) throw PreconditionError("reflection_residual: z must not be an integer");
    const Complex lhs = std::exp(log_gamma(1.0 - z) + log_gamma(z));
    const Complex rhs = pi / sinpi(z);
    return std::abs(lhs - rhs) / std::abs(rhs);
}

Complex pochhammer(Complex a, long n)
{
    require(n >= 0, "pochhammer: n must be non-negative");
    Complex p{1.0, 0.0};
    for (long j = 0; j < n; ++j) p *= a + static_cast<double>(j);
    return p;
}

Complex falling_factorial(Complex a, long n)
{
    require(n >= 0, "falling_factorial: n must be non-negative");
    Complex p{1.0, 0.0};
    for (long j = 0; j < n; ++j) p *= a - static_cast<double>(j);
    return p;
}

Complex binomial(Complex a, long k)
{
    if (k < 0) return {0.0, 0.0};
    Complex p{1.0, 0.0};
    for (long j = 1; j <= k; ++j) p *= (a - static_cast<double>(j - 1)) / static_cast<double>(j);
    return p;
}

Complex bessel_type_series(Complex c, Complex x)
{
    long k0 = 0;
    if (auto n = as_integer(c); n && *n <= 0) k0 = 1 - *n;

    Complex term;
    if (x == Complex{0.0, 0.0}) return k0 == 0 ? reciprocal_gamma(c) : Complex{0.0, 0.0};
    if (k0 == 0) {
        term = reciprocal_gamma(c);
    } else {
        const double kd = static_cast<double>(k0);
        term = std::exp(kd * std::log(x) - std::lgamma(kd + 1.0) - log_gamma(c + kd));
    }

    Complex sum = term;
    double largest = std::abs(sum);
    int small_run = 0;
    constexpr long cap = 100000;
    for (long k = k0 + 1; k < k0 + cap; ++k) {
        const double kd = static_cast<double>(k);
        const Complex denom = kd * (c + (kd - 1.0));
        term *= x / denom;
        sum += term;
        largest = std::max(largest, std::abs(sum));
        const bool shrinking = std::abs(x) < std::abs(denom);
        if (shrinking && std::abs(term) <= 1e-16 * largest) {
            if (++small_run == 3) return sum;
        } else {
            small_run = 0;
        }
        if (term == Complex{0.0, 0.0} && shrinking) return sum;
    }
    throw NumericError("bessel_type_series: term cap reached without convergence");
}

Complex bessel_j(Complex nu, Complex z)
{
    if (auto n = as_integer(nu); n && *n < 0) {
        const Complex j = bessel_j(Complex{static_cast<double>(-*n), 0.0}, z);
        return (*n % 2 == 0) ? j : -j;
    }
    const Complex h = 0.5 * z;
    if (h == Complex{0.0, 0.0}) {
        if (nu == Complex{0.0, 0.0}) return {1.0, 0.0};
        if (nu.real() > 0.0) return {0.0, 0.0};
        return {std::numeric_limits<double>::infinity(), 0.0};
    }
    Complex prefactor;
    if (auto n = as_integer(nu)) prefactor = ipow(h, *n);
    else prefactor = std::exp(nu * std::log(h));
    return prefactor * bessel_type_series(nu + 1.0, -h * h);
}

} // namespace heun
