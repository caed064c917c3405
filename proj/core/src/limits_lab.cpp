#include "heun/limits_lab.hpp"

#include "heun/error.hpp"

#include <cmath>
#include <limits>
#include <string>

namespace heun {

namespace {

constexpr double nan = std::numeric_limits<double>::quiet_NaN();

// (h2^p - h3^p) / (h1^p - h2^p), decreasing in p for decreasing h.
double difference_ratio(double h1, double h2, double h3, double p)
{
    return (std::pow(h2, p) - std::pow(h3, p)) / (std::pow(h1, p) - std::pow(h2, p));
}

double fit_order(double h1, double h2, double h3, double rho)
{
    double lo = 1e-3;
    double hi = 20.0;
    if (rho >= difference_ratio(h1, h2, h3, lo)) return lo;
    if (rho <= difference_ratio(h1, h2, h3, hi)) return hi;
    for (int i = 0; i < 200; ++i) {
        const double mid = 0.5 * (lo + hi);
        if (difference_ratio(h1, h2, h3, mid) > rho) lo = mid;
        else hi = mid;
    }
    return 0.5 * (lo + hi);
}

Complex neville_at_zero(std::span<const double> t, std::span<const Complex> v)
{
    std::vector<Complex> p(v.begin(), v.end());
    const std::size_t n = p.size();
    for (std::size_t level = 1; level < n; ++level) {
        for (std::size_t i = 0; i + level < n; ++i) {
            const double ti = t[i];
            const double tj = t[i + level];
            p[i] = (tj * p[i] - ti * p[i + 1]) / (tj - ti);
        }
    }
    return p[0];
}

double ls_slope(std::span<const double> x, std::span<const double> y)
{
    const double n = static_cast<double>(x.size());
    double sx = 0, sy = 0, sxx = 0, sxy = 0;
    for (std::size_t i = 0; i < x.size(); ++i) {
        sx += x[i];
        sy += y[i];
        sxx += x[i] * x[i];
        sxy += x[i] * y[i];
    }
    return (n * sxy - sx * sy) / (n * sxx - sx * sx);
}

void require_decreasing(std::span<const double> v, const char* what)
{
    for (std::size_t i = 1; i < v.size(); ++i)
        require(v[i] < v[i - 1], std::string(what) + " must be strictly decreasing");
}

void finish(SweepReport& rep, std::span<const double> h, double order_hint, double rel_tol)
{
    const Extrapolation ex = richardson_extrapolate(rep.values, h, order_hint);
    rep.extrapolated = ex.limit;
    rep.empirical_order = ex.empirical_order;
    rep.extrapolation_fallback = ex.fallback;
    rep.tolerance = rel_tol * (1.0 + std::abs(rep.target));
    rep.diagnostics.push_back({"fit_residual", ex.residual});
    if (ex.fallback) rep.notes.push_back("power-law fit residual above 10%; limit is the last value");
    rep.verdict = rep.error() <= rep.tolerance ? Verdict::pass : Verdict::fail;
}

} // namespace

Extrapolation richardson_extrapolate(std::span<const Complex> values, std::span<const double> h,
                                     double order_hint)
{
    require(values.size() == h.size(), "values and eps lists differ in length");
    require(values.size() >= 3, "extrapolation needs at least 3 points");
    for (double x : h) require(x > 0.0 && std::isfinite(x), "extrapolation abscissae must be positive");
    require_decreasing(h, "extrapolation abscissae");

    const std::size_t n = values.size();
    const Complex d1 = values[n - 2] - values[n - 3];
    const Complex d2 = values[n - 1] - values[n - 2];
    double scale = 0.0;
    for (auto v : values) scale = std::max(scale, std::abs(v));
    if (std::abs(d1) <= 1e-15 * scale && std::abs(d2) <= 1e-15 * scale)
        return {values[n - 1], nan, false, 0.0};

    const double p = fit_order(h[n - 3], h[n - 2], h[n - 1], std::abs(d2) / std::abs(d1));
    const double q = order_hint > 0.0 ? order_hint : p;
    std::vector<double> t(n);
    for (std::size_t i = 0; i < n; ++i) t[i] = std::pow(h[i], q);
    const Complex limit = neville_at_zero(t, values);

    // Single-term model v - L = C h^p, least squares in C.
    Complex num{0.0, 0.0};
    double den = 0.0;
    double spread = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
        const double hp = std::pow(h[i], p);
        num += hp * (values[i] - limit);
        den += hp * hp;
        spread = std::max(spread, std::abs(values[i] - limit));
    }
    const Complex c = num / den;
    double misfit = 0.0;
    for (std::size_t i = 0; i < n; ++i)
        misfit = std::max(misfit, std::abs(values[i] - limit - c * std::pow(h[i], p)));
    const double residual = spread > 0.0 ? misfit / spread : 0.0;
    if (residual > 0.1) return {values[n - 1], p, true, residual};
    return {limit, p, false, residual};
}

std::vector<double> default_eps_sequence() { return {1e-2, 1e-3, 1e-4, 1e-5, 1e-6}; }
std::vector<long> default_m_values() { return {25, 50, 100, 200}; }

namespace {

std::vector<UnfoldParams> res1_sweep(const DcheParams& p, std::span<const double> eps_values)
{
    require(eps_values.size() >= 1, "eps sweep is empty");
    require_decreasing(eps_values, "eps values");
    std::vector<UnfoldParams> out;
    for (double eps : eps_values) {
        require(eps > 0.0 && eps < 1.0, "eps must lie in (0, 1)");
        UnfoldParams u(p, std::sqrt(eps));
        require(u.resonance() == ResonanceCase::res1, "res1 requires beta=0, alpha in 2N");
        out.push_back(u);
    }
    return out;
}

struct Res2Point {
    long m;
    UnfoldParams u;
};

std::vector<Res2Point> res2_sweep(const DcheParams& p, std::span<const long> m_values, SweepReport& rep)
{
    require(p.beta() > 0.0, "d_L limit requires beta > 0");
    for (std::size_t i = 1; i < m_values.size(); ++i)
        require(m_values[i] > m_values[i - 1], "m values must be strictly increasing");
    std::vector<Res2Point> out;
    for (long m : m_values) {
        require(m <= d_L_max_m, "m exceeds the d_L cap " + std::to_string(d_L_max_m));
        const auto seq = resonant_eps_sequence(p, m, m);
        if (seq.empty()) {
            rep.notes.push_back("m=" + std::to_string(m) + " skipped: no admissible resonant sqrt eps");
            continue;
        }
        UnfoldParams u(p, seq.front().sqrt_eps);
        require(u.resonance() == ResonanceCase::res2, "res2 does not hold along the resonant sequence");
        if (u.res2_boundary()) rep.notes.push_back("m=" + std::to_string(m) + ": alpha-m=0 boundary case");
        out.push_back({m, u});
    }
    require(out.size() >= 3, "d_L limit needs at least 3 admissible m values");
    return out;
}

} // namespace

SweepReport check_sum_limit(const DcheParams& p, std::span<const double> eps_values, double rel_tol)
{
    const auto sweep = res1_sweep(p, eps_values);
    SweepReport rep;
    rep.check = "sum-limit";
    rep.parameter = "q_R+q_L";
    rep.target = lambda_coefficient(p);
    NamedColumn cond{"condition", {}};
    bool precise = true;
    double worst = 0.0;
    for (const auto& u : sweep) {
        const PairedSum ps = q_sum(u);
        rep.eps_values.push_back(eps_values[rep.values.size()]);
        rep.values.push_back(ps.value);
        cond.values.push_back({ps.condition, 0.0});
        worst = std::max(worst, ps.condition);
        precise = precise && ps.precision_ok;
    }
    rep.extra_columns.push_back(std::move(cond));
    rep.diagnostics.push_back({"max_condition", worst});
    finish(rep, rep.eps_values, 1.0, rel_tol);
    if (!precise) {
        rep.verdict = Verdict::inconclusive;
        rep.notes.push_back("cancellation in q_R+q_L exceeds half the mantissa at some eps");
    }
    return rep;
}

SweepReport check_divergence_sign(const DcheParams& p, std::span<const double> eps_values,
                                  double order_slack)
{
    const auto sweep = res1_sweep(p, eps_values);
    require(sweep.size() >= 2, "divergence check needs at least 2 eps values");
    const long half = *p.alpha_integer() / 2;
    const double parity = (half % 2 == 0) ? 1.0 : -1.0;  // (-1)^(alpha/2)

    SweepReport rep;
    rep.check = "divergence-sign";
    rep.parameter = "q_R";
    NamedColumn left{"q_L", {}};
    std::vector<double> log_eps, log_r, log_l;
    bool signs = true;
    bool monotone = true;
    for (const auto& u : sweep) {
        const Complex qr = q_k(u, Side::R);
        const Complex ql = q_k(u, Side::L);
        if (!rep.values.empty() && std::abs(qr) <= std::abs(rep.values.back())) monotone = false;
        rep.eps_values.push_back(eps_values[rep.values.size()]);
        rep.values.push_back(qr);
        left.values.push_back(ql);
        signs = signs && (qr.real() * -parity > 0.0) && (ql.real() * parity > 0.0);
        log_eps.push_back(std::log(u.eps()));
        log_r.push_back(std::log(std::abs(qr)));
        log_l.push_back(std::log(std::abs(ql)));
    }
    rep.extra_columns.push_back(std::move(left));

    const double expected = -0.5 * static_cast<double>(2 * half - 1);
    const double order_r = ls_slope(log_eps, log_r);
    const double order_l = ls_slope(log_eps, log_l);
    rep.expected_order = expected;
    rep.empirical_order = order_r;
    rep.target = expected;
    rep.extrapolated = order_r;
    rep.tolerance = order_slack * std::abs(expected);
    rep.diagnostics.push_back({"order_q_L", order_l});
    rep.diagnostics.push_back({"phase_q_R_last", std::arg(rep.values.back())});

    const bool orders = std::abs(order_r - expected) <= rep.tolerance &&
                        std::abs(order_l - expected) <= rep.tolerance;
    if (p.gamma().imag() != 0.0 || p.gamma().real() <= 0.0) {
        rep.verdict = Verdict::inconclusive;
        rep.notes.push_back("sign law is asserted for real gamma > 0 only; phases reported");
        return rep;
    }
    if (!signs) rep.notes.push_back("sign of Re q_R or Re q_L violates the law");
    if (!monotone) rep.notes.push_back("|q_R| is not monotonically increasing");
    rep.verdict = (signs && monotone && orders) ? Verdict::pass : Verdict::fail;
    return rep;
}

SweepReport check_dL_limit(const DcheParams& p, std::span<const long> m_values, double rel_tol)
{
    SweepReport rep;
    rep.check = "dL-limit";
    rep.parameter = "d_L";
    rep.target = stokes_series_limit(p);
    const auto sweep = res2_sweep(p, m_values, rep);
    std::vector<double> h;
    NamedColumn ms{"m", {}};
    for (const auto& pt : sweep) {
        rep.eps_values.push_back(pt.u.eps());
        rep.values.push_back(d_L(pt.u));
        ms.values.push_back({static_cast<double>(pt.m), 0.0});
        h.push_back(pt.u.sqrt_eps());
    }
    rep.extra_columns.push_back(std::move(ms));
    finish(rep, h, 1.0, rel_tol);
    rep.notes.push_back("extrapolated in sqrt eps; empirical_order is in sqrt eps");
    return rep;
}

SweepReport check_stokes_limit(const DcheParams& p, std::span<const long> m_values, double rel_tol)
{
    SweepReport rep;
    rep.check = "stokes-limit";
    rep.parameter = "St_L(eps)[1,2]";
    rep.target = stokes_multiplier_mu(p);
    const auto sweep = res2_sweep(p, m_values, rep);
    std::vector<double> h;
    bool unipotent = true;
    for (const auto& pt : sweep) {
        const Matrix2C st = unfolded_stokes(pt.u);
        unipotent = unipotent && st.is_unipotent_upper();
        rep.eps_values.push_back(pt.u.eps());
        rep.values.push_back(st.a12);
        h.push_back(pt.u.sqrt_eps());
    }
    finish(rep, h, 1.0, rel_tol);
    rep.notes.push_back("extrapolated in sqrt eps; empirical_order is in sqrt eps");
    if (!unipotent) {
        rep.verdict = Verdict::fail;
        rep.notes.push_back("entries (1,1),(2,1),(2,2) differ from 1,0,1");
    }
    return rep;
}

SweepReport check_monodromy_limit(const DcheParams& p, std::span<const double> eps_values, double rel_tol)
{
    const auto sweep = res1_sweep(p, eps_values);
    SweepReport rep;
    rep.check = "monodromy-limit";
    rep.parameter = "M0(eps)[1,2]";
    rep.target = monodromy_M0(p).a12;
    bool unipotent = true;
    bool precise = true;
    for (const auto& u : sweep) {
        const Matrix2C m = unfolded_monodromy(u, SumEvaluation::paired);
        unipotent = unipotent && m.is_unipotent_upper();
        precise = precise && q_sum(u).precision_ok;
        rep.eps_values.push_back(eps_values[rep.values.size()]);
        rep.values.push_back(m.a12);
    }
    if (rep.values.size() >= 3) {
        finish(rep, rep.eps_values, 1.0, rel_tol);
    } else {
        rep.extrapolated = rep.values.back();
        rep.tolerance = rel_tol * (1.0 + std::abs(rep.target));
        rep.empirical_order = nan;
        rep.verdict = rep.error() <= rep.tolerance ? Verdict::pass : Verdict::fail;
    }
    if (!unipotent) {
        rep.verdict = Verdict::fail;
        rep.notes.push_back("entries (1,1),(2,1),(2,2) differ from 1,0,1");
    }
    if (!precise && rep.verdict == Verdict::pass) rep.verdict = Verdict::inconclusive;
    return rep;
}

EpsSeriesCheck eps_power_series_check(Complex gamma, double eps)
{
    require(eps > 0.0 && eps < 1.0, "eps must lie in (0, 1)");
    const double s = std::sqrt(eps);
    const Complex c = gamma / (2.0 * s);
    const double log_r = std::log1p(eps) - std::log1p(-eps);
    EpsSeriesCheck out{gamma, eps, std::exp(-c * log_r), std::exp(c * log_r), {}, {}, 0.0, 0.0, false};

    // exp(+-gamma (s + s^5/3 + ...)) through s^5.
    auto truncated = [&](double sign) {
        const Complex g = sign * gamma * s;
        Complex term{1.0, 0.0};
        Complex sum = term;
        for (int k = 1; k <= 5; ++k) {
            term *= g / static_cast<double>(k);
            sum += term;
        }
        return sum + sign * gamma * std::pow(s, 5) / 3.0;
    };
    out.series_minus = truncated(-1.0);
    out.series_plus = truncated(1.0);
    out.residual = std::max(std::abs(out.direct_minus - out.series_minus),
                            std::abs(out.direct_plus - out.series_plus));
    const double g = std::abs(gamma);
    out.bound = 2.0 * (std::pow(g, 6) / 720.0 + g * g / 3.0) * eps * eps * eps + 1e-15 * std::abs(out.direct_plus);
    out.pass = out.residual <= out.bound;
    return out;
}

SweepReport eps_series_sweep(Complex gamma, std::span<const double> eps_values, double rel_tol)
{
    require_decreasing(eps_values, "eps values");
    SweepReport rep;
    rep.check = "eps-series";
    rep.parameter = "((1-eps)/(1+eps))^(gamma/(2 sqrt eps))";
    rep.target = 1.0;
    NamedColumn plus{"direct_plus", {}};
    NamedColumn residual{"residual", {}};
    bool all = true;
    std::vector<double> h;
    for (double eps : eps_values) {
        const auto c = eps_power_series_check(gamma, eps);
        rep.eps_values.push_back(eps);
        rep.values.push_back(c.direct_minus);
        plus.values.push_back(c.direct_plus);
        residual.values.push_back({c.residual, 0.0});
        h.push_back(std::sqrt(eps));
        all = all && c.pass;
    }
    rep.extra_columns.push_back(std::move(plus));
    rep.extra_columns.push_back(std::move(residual));
    if (rep.values.size() >= 3) {
        finish(rep, h, 1.0, rel_tol);
    } else {
        rep.extrapolated = rep.values.back();
        rep.empirical_order = nan;
        rep.tolerance = rel_tol * 2.0;
        rep.verdict = rep.error() <= rep.tolerance ? Verdict::pass : Verdict::fail;
    }
    if (!all) {
        rep.verdict = Verdict::fail;
        rep.notes.push_back("truncated expansion residual exceeds C eps^3");
    }
    return rep;
}

} // namespace heun
