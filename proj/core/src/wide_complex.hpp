#pragma once

// Minimal complex arithmetic over double, long double and __float128.

#include <cmath>
#include <complex>

#if defined(HEUN_HAVE_QUADMATH)
#include <quadmath.h>
#endif

namespace heun::detail {

#if defined(HEUN_HAVE_QUADMATH)
using wide_real = __float128;
inline wide_real w_exp(wide_real x) { return expq(x); }
inline wide_real w_cos(wide_real x) { return cosq(x); }
inline wide_real w_sin(wide_real x) { return sinq(x); }
inline wide_real w_log1p(wide_real x) { return log1pq(x); }
inline wide_real w_abs(wide_real x) { return fabsq(x); }
inline wide_real w_hypot(wide_real x, wide_real y) { return hypotq(x, y); }
inline constexpr int wide_digits = 113;
#else
using wide_real = long double;
inline wide_real w_exp(wide_real x) { return std::exp(x); }
inline wide_real w_cos(wide_real x) { return std::cos(x); }
inline wide_real w_sin(wide_real x) { return std::sin(x); }
inline wide_real w_log1p(wide_real x) { return std::log1p(x); }
inline wide_real w_abs(wide_real x) { return std::fabs(x); }
inline wide_real w_hypot(wide_real x, wide_real y) { return std::hypot(x, y); }
inline constexpr int wide_digits = 64;
#endif

inline double w_exp(double x) { return std::exp(x); }
inline double w_cos(double x) { return std::cos(x); }
inline double w_sin(double x) { return std::sin(x); }
inline double w_log1p(double x) { return std::log1p(x); }
inline double w_abs(double x) { return std::fabs(x); }
inline double w_hypot(double x, double y) { return std::hypot(x, y); }

template <class T>
struct Cx {
    T re{0};
    T im{0};

    Cx() = default;
    Cx(T r, T i = T(0)) : re(r), im(i) {}
    explicit Cx(std::complex<double> z) : re(z.real()), im(z.imag()) {}

    std::complex<double> narrow() const
    {
        return {static_cast<double>(re), static_cast<double>(im)};
    }

    Cx& operator+=(const Cx& o)
    {
        re += o.re;
        im += o.im;
        return *this;
    }
    Cx& operator*=(const Cx& o)
    {
        const T r = re * o.re - im * o.im;
        im = re * o.im + im * o.re;
        re = r;
        return *this;
    }
    friend Cx operator+(Cx a, const Cx& b) { return a += b; }
    friend Cx operator-(const Cx& a, const Cx& b) { return {a.re - b.re, a.im - b.im}; }
    friend Cx operator*(Cx a, const Cx& b) { return a *= b; }
    friend Cx operator*(T s, const Cx& a) { return {s * a.re, s * a.im}; }
};

template <class T>
T abs(const Cx<T>& z)
{
    return w_hypot(z.re, z.im);
}

template <class T>
Cx<T> exp(const Cx<T>& z)
{
    const T m = w_exp(z.re);
    return {m * w_cos(z.im), m * w_sin(z.im)};
}

template <class T>
Cx<T> ipow(Cx<T> z, long n)
{
    Cx<T> r{T(1)};
    if (n < 0) {
        const T d = z.re * z.re + z.im * z.im;
        z = Cx<T>{z.re / d, -z.im / d};
        n = -n;
    }
    while (n != 0) {
        if (n & 1L) r *= z;
        n >>= 1;
        if (n != 0) z *= z;
    }
    return r;
}

template <class T>
T ipow(T x, long n)
{
    T r(1);
    if (n < 0) {
        x = T(1) / x;
        n = -n;
    }
    while (n != 0) {
        if (n & 1L) r *= x;
        n >>= 1;
        if (n != 0) x *= x;
    }
    return r;
}

} // namespace heun::detail
