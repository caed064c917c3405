#include "heun/unfold_model.hpp"

#include "heun/error.hpp"
#include "heun/special_functions.hpp"
#include "wide_complex.hpp"

#include <cmath>
#include <string>

namespace heun {

std::string_view to_string(ResonanceCase r)
{
    switch (r) {
    case ResonanceCase::res1: return "res1";
    case ResonanceCase::res2: return "res2";
    case ResonanceCase::none: return "none";
    }
    return "?";
}

std::string_view to_string(Side s) { return s == Side::L ? "L" : "R"; }

UnfoldParams::UnfoldParams(DcheParams base, double sqrt_eps) : base_(base), sqrt_eps_(sqrt_eps)
{
    require(std::isfinite(sqrt_eps) && sqrt_eps > 0.0 && sqrt_eps < 1.0,
            "sqrt_eps must lie in (0, 1)");
    if (base_.beta() == 0.0 && base_.alpha_class() == AlphaClass::even_natural) {
        case_ = ResonanceCase::res1;
        return;
    }
    const Complex m = base_.beta() / (2.0 * sqrt_eps) + 0.5 * base_.alpha();
    const auto mi = as_integer(m, 1e-9);
    if (!mi || *mi < 1) return;
    const auto diff = as_integer(base_.alpha() - static_cast<double>(*mi), 1e-9);
    if (diff && *diff >= 1) return;
    case_ = ResonanceCase::res2;
    m_ = *mi;
    boundary_ = diff && *diff == 0;
}

Complex UnfoldParams::exponent_R() const
{
    if (case_ == ResonanceCase::res2) return static_cast<double>(m_) - base_.alpha();
    return base_.beta() / (2.0 * sqrt_eps_) - 0.5 * base_.alpha();
}

Complex UnfoldParams::exponent_L() const
{
    if (case_ == ResonanceCase::res2) return {-static_cast<double>(m_), 0.0};
    return -base_.beta() / (2.0 * sqrt_eps_) - 0.5 * base_.alpha();
}

SingularPoints singular_points(const UnfoldParams& u)
{
    const double s = u.sqrt_eps();
    return {-s, s, -1.0 / s, 1.0 / s};
}

std::vector<ResonantPoint> resonant_eps_sequence(const DcheParams& p, long m_min, long m_max)
{
    require(p.beta() > 0.0, "resonant sequence requires beta > 0");
    require(p.alpha().imag() == 0.0, "resonant sequence requires real alpha");
    std::vector<ResonantPoint> out;
    const double a = p.alpha().real();
    for (long m = std::max(m_min, 1L); m <= m_max; ++m) {
        const double denom = 2.0 * static_cast<double>(m) - a;
        if (denom <= 0.0) continue;
        const double s = p.beta() / denom;
        if (!(s > 0.0 && s < 1.0)) continue;
        if (auto diff = as_integer(Complex{a - static_cast<double>(m), 0.0}, 1e-12); diff && *diff >= 1)
            continue;
        out.push_back({m, s});
    }
    return out;
}

namespace {

void require_res1(const UnfoldParams& u)
{
    require(u.resonance() == ResonanceCase::res1, "res1 requires beta=0, alpha in 2N");
}

void require_res2(const UnfoldParams& u)
{
    require(u.resonance() == ResonanceCase::res2,
            "res2 requires beta/(2 sqrt eps)+alpha/2 in N and alpha-m not in N");
}

// One side of the res1 closed form, k-term by k-term, in arithmetic T.
template <class T>
struct SideTerms {
    std::vector<detail::Cx<T>> terms;  // already multiplied by all prefactors
};

template <class T>
SideTerms<T> res1_terms(const UnfoldParams& u, Side side)
{
    using C = detail::Cx<T>;
    const long alpha = *u.base().alpha_integer();
    const long n = alpha / 2;
    const T s = static_cast<T>(u.sqrt_eps());
    const T eps = s * s;
    const C c_wide{static_cast<T>(u.ratio_exponent().real()), static_cast<T>(u.ratio_exponent().imag())};

    // ln((1+eps)/(1-eps)) without cancellation.
    const T log_r = detail::w_log1p(eps) - detail::w_log1p(-eps);
    const bool right = side == Side::R;
    const T r = right ? (T(1) + eps) / (T(1) - eps) : (T(1) - eps) / (T(1) + eps);
    const C f0 = detail::exp(C{right ? log_r : -log_r} * c_wide);
    const T b = right ? s / (T(1) + eps) : s / (T(1) - eps);
    const T base = right ? T(2) * s : T(-2) * s;

    // (n-1)!^2 denominator.
    T fact_n1(1);
    for (long j = 2; j < n; ++j) fact_n1 *= static_cast<T>(j);

    SideTerms<T> out;
    for (long k = 0; k < n; ++k) {
        // inner sum  Sum_j C(k,j) (c)_j ff(c, k-j) r^j
        C inner{T(0)};
        for (long j = 0; j <= k; ++j) {
            T binom(1);
            for (long i = 1; i <= j; ++i) binom = binom * static_cast<T>(k - j + i) / static_cast<T>(i);
            C rising{T(1)};
            for (long i = 0; i < j; ++i) rising *= c_wide + C{static_cast<T>(i)};
            C falling{T(1)};
            for (long i = 0; i < k - j; ++i) falling *= c_wide - C{static_cast<T>(i)};
            inner += (binom * detail::ipow(r, j)) * (rising * falling);
        }
        const C a_k = detail::ipow(b, k) * (f0 * inner);

        T binom_n1(1);
        for (long i = 1; i <= k; ++i) binom_n1 = binom_n1 * static_cast<T>(n - 1 - k + i) / static_cast<T>(i);
        T gamma_ratio(1);  // (alpha-2-k)!
        for (long i = 2; i <= alpha - 2 - k; ++i) gamma_ratio *= static_cast<T>(i);
        const T sign = ((n - 1 - k) % 2 == 0) ? T(1) : T(-1);
        const T pref = sign * binom_n1 * gamma_ratio / (fact_n1 * fact_n1) *
                       detail::ipow(base, -alpha + 1 + k);
        out.terms.push_back(pref * a_k);
    }
    return out;
}

} // namespace

Complex q_k(const UnfoldParams& u, Side side)
{
    require_res1(u);
    const auto t = res1_terms<double>(u, side);
    detail::Cx<double> acc{0.0};
    for (const auto& term : t.terms) acc += term;
    return acc.narrow();
}

PairedSum q_sum(const UnfoldParams& u)
{
    require_res1(u);
    using T = detail::wide_real;
    const auto right = res1_terms<T>(u, Side::R);
    const auto left = res1_terms<T>(u, Side::L);
    detail::Cx<T> acc{T(0)};
    T magnitude(0);
    for (std::size_t k = 0; k < right.terms.size(); ++k) {
        acc += right.terms[k] + left.terms[k];
        magnitude += detail::abs(right.terms[k]) + detail::abs(left.terms[k]);
    }
    const Complex value = acc.narrow();
    const double mag = static_cast<double>(magnitude);
    const double condition = mag / std::max(std::abs(value), 1.0);
    const double unit = std::ldexp(1.0, -detail::wide_digits);
    return {value, condition, condition * unit <= std::ldexp(1.0, -26)};
}

Matrix2C monodromy_Mk(const UnfoldParams& u, Side side)
{
    return Matrix2C::unipotent(two_pi_i * q_k(u, side));
}

Matrix2C unfolded_monodromy(const UnfoldParams& u, SumEvaluation mode)
{
    if (mode == SumEvaluation::paired) return Matrix2C::unipotent(two_pi_i * q_sum(u).value);
    return monodromy_Mk(u, Side::R) * monodromy_Mk(u, Side::L);
}

NilpotentLog nilpotent_log_J(const UnfoldParams& u, Side side)
{
    return {q_k(u, side), side == Side::L ? NilpotentWhich::J_L : NilpotentWhich::J_R};
}

NilpotentLog nilpotent_log_T(const UnfoldParams& u) { return {d_L(u), NilpotentWhich::T_L}; }

Complex d_L(const UnfoldParams& u)
{
    require_res2(u);
    const long m = u.resonant_index();
    require(m <= d_L_max_m, "d_L: resonant index m exceeds the cap " + std::to_string(d_L_max_m));
    const Complex alpha = u.base().alpha();
    const double s = u.sqrt_eps();
    const double eps = s * s;
    const Complex c = u.ratio_exponent();
    const double log_r = std::log1p(eps) - std::log1p(-eps);
    const Complex f0 = std::exp(-c * log_r);
    const double b1 = s / (1.0 - eps);
    const double b2 = s / (1.0 + eps);

    // Taylor coefficients at x_L of (1 + h b1)^c and (1 - h b2)^(-c).
    const auto mm = static_cast<std::size_t>(m);
    std::vector<Complex> up(mm), vp(mm);
    up[0] = vp[0] = 1.0;
    for (std::size_t j = 1; j < mm; ++j) {
        const double jd = static_cast<double>(j);
        up[j] = up[j - 1] * (c - (jd - 1.0)) / jd * b1;
        vp[j] = vp[j - 1] * (c + (jd - 1.0)) / jd * b2;
    }

    const Complex log_top = log_gamma(static_cast<double>(m) + 1.0 - alpha);
    const Complex log_base{std::log(2.0 * s), pi};
    Complex sum{0.0, 0.0};
    for (long k = 0; k < m; ++k) {
        const Complex g = 2.0 + static_cast<double>(k) - alpha;
        if (auto gi = as_integer(g); gi && *gi <= 0) continue;
        const Complex lg = log_top - std::lgamma(static_cast<double>(m - k)) - log_gamma(g) +
                           (1.0 - alpha + static_cast<double>(k)) * log_base;
        if (lg.real() > 700.0)
            throw NumericError("d_L: term magnitude overflow, log-modulus " + std::to_string(lg.real()));
        Complex a_k{0.0, 0.0};
        const auto kk = static_cast<std::size_t>(k);
        for (std::size_t j = 0; j <= kk; ++j) a_k += up[j] * vp[kk - j];
        sum += std::exp(lg) * (f0 * a_k);
    }
    return sum;
}

Matrix2C unfolded_stokes(const UnfoldParams& u) { return Matrix2C::unipotent(two_pi_i * d_L(u)); }

Complex PartialFractions::evaluate(Complex z) const
{
    Complex acc{0.0, 0.0};
    for (std::size_t j = 0; j < c.size(); ++j) {
        const long p = static_cast<long>(j) + 1;
        acc += c[j] / ipow(z - sqrt_eps, p) + d[j] / ipow(z + sqrt_eps, p);
    }
    return acc;
}

PartialFractions partial_fraction_split(const UnfoldParams& u)
{
    require_res1(u);
    const long n = *u.base().alpha_integer() / 2;
    const double s = u.sqrt_eps();
    PartialFractions pf{{}, {}, s};
    for (long j = 1; j <= n; ++j) {
        const Complex coef = binomial(Complex{-static_cast<double>(n), 0.0}, n - j);
        pf.c.push_back(coef * ipow(Complex{2.0 * s, 0.0}, -2 * n + j));
        pf.d.push_back(coef * ipow(Complex{-2.0 * s, 0.0}, -2 * n + j));
    }
    return pf;
}

} // namespace heun
