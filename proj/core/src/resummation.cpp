#include "heun/resummation.hpp"

#include "heun/error.hpp"
#include "heun/special_functions.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <numeric>

namespace heun {

std::string_view to_string(FormalKind k)
{
    switch (k) {
    case FormalKind::phi_hat: return "phi_hat";
    case FormalKind::psi_hat: return "psi_hat";
    case FormalKind::phi_hat_neg: return "phi_hat_neg";
    }
    return "?";
}

std::string_view to_string(Lateral l)
{
    switch (l) {
    case Lateral::none: return "none";
    case Lateral::plus: return "plus";
    case Lateral::minus: return "minus";
    }
    return "?";
}

Complex FormalSeries::truncated(Complex x, std::size_t N) const
{
    require(N <= coefficients.size(), "truncation order exceeds the stored coefficients");
    Complex sum{0.0, 0.0};
    Complex xp = x;
    for (std::size_t n = 0; n < N; ++n) {
        sum += coefficients[n] * xp;
        xp *= x;
    }
    return sum;
}

FormalSeries formal_series(const DcheParams& p, std::size_t N, double tol_zero)
{
    require(p.beta() > 0.0, "formal series needs beta > 0");
    require(N >= 1 && N <= formal_series_max_terms, "N must lie in [1, 10000]");

    const SeriesKind sk = series_kind_for(p);
    const SeriesInvariant inv = series_invariant(p, sk);
    const double beta = p.beta();
    const double log_beta = std::log(beta);
    const Complex a = p.alpha();

    FormalSeries fs;
    fs.kind = sk == SeriesKind::S ? FormalKind::phi_hat : sk == SeriesKind::W ? FormalKind::psi_hat
                                                                              : FormalKind::phi_hat_neg;
    fs.governing_constant = inv.limit;
    fs.divergent = std::abs(inv.limit) > tol_zero;
    fs.coefficients.reserve(N);

    for (std::size_t n = 0; n < N; ++n) {
        const double nd = static_cast<double>(n);
        // Partial sum as limit minus tail keeps S_n accurate when S is tiny. Below tol_zero
        // the limit is roundoff; keeping it would feed Gamma(n) growth into a convergent series.
        const Complex partial = (fs.divergent ? inv.limit : Complex{0.0, 0.0}) - inv.tail(n);
        if (partial == Complex{0.0, 0.0}) {
            fs.coefficients.push_back({0.0, 0.0});
            continue;
        }
        Complex log_mag;
        switch (fs.kind) {
        case FormalKind::phi_hat: log_mag = log_gamma(2.0 - a + nd) - nd * log_beta; break;
        case FormalKind::psi_hat: log_mag = std::lgamma(nd + 1.0) - nd * log_beta; break;
        case FormalKind::phi_hat_neg: log_mag = log_gamma(2.0 - a + nd) - (1.0 - a + nd) * log_beta; break;
        }
        const double sign = (n % 2 == 0) ? 1.0 : -1.0;
        fs.coefficients.push_back(sign * partial * std::exp(log_mag));
    }

    if (fs.kind == FormalKind::psi_hat) {
        // x^2 h' + beta h = x^(2-alpha) e^(gamma x) for h = sum_j u_j x^j, j >= 2-alpha.
        const long alpha = *p.alpha_integer();
        const Complex g = p.gamma();
        Complex prev{0.0, 0.0};
        for (long j = 2 - alpha; j <= 0; ++j) {
            const long e = j + alpha - 2;
            const Complex rhs = ipow(g, e) / std::tgamma(static_cast<double>(e) + 1.0);
            const Complex u = (rhs - static_cast<double>(j - 1) * prev) / beta;
            fs.polynomial_part.push_back(u);
            prev = u;
        }
        std::reverse(fs.polynomial_part.begin(), fs.polynomial_part.end());
    }
    return fs;
}

Complex borel_v(Complex xi, const DcheParams& p)
{
    require(p.alpha_in_natural(), "v(xi) needs alpha natural");
    return bessel_type_series(p.alpha(), p.gamma() * xi);
}

Complex borel_q(Complex xi, const DcheParams& p) { return bessel_type_series(2.0 - p.alpha(), p.gamma() * xi); }

RayDirection::RayDirection(double theta_, Lateral lateral_, double delta_)
    : theta(theta_), lateral(lateral_), delta(delta_)
{
    require(std::isfinite(theta) && theta > -pi && theta <= pi, "theta must lie in (-pi, pi]");
    require(lateral == Lateral::none || theta == pi, "lateral rays need theta = pi");
    require(delta > 0.0 && delta <= 0.2, "delta_lateral must lie in (0, 0.2]");
}

double RayDirection::effective_angle() const
{
    switch (lateral) {
    case Lateral::plus: return pi + delta;
    case Lateral::minus: return pi - delta;
    case Lateral::none: break;
    }
    return theta;
}

namespace {

double disc_margin(const DcheParams& p, Complex x, double angle)
{
    return (std::polar(1.0, angle) / x).real() - std::abs(p.gamma());
}

void require_disc(const DcheParams& p, Complex x, const RayDirection& dir)
{
    require(x != Complex{0.0, 0.0} && is_finite(x), "x must be finite and nonzero");
    require(dir.lateral != Lateral::none || dir.theta != pi, "theta = pi needs a lateral side");
    require(disc_margin(p, x, dir.effective_angle()) > 0.0, "x lies outside the summation disc Re(e^(i theta)/x) > |gamma|");
}

// int_0^(inf e^(i angle)) g(xi) d xi where |g| <= A e^(-margin |xi|).
Complex ray_integral(const std::function<Complex(Complex)>& g, double angle, double margin, double beta,
                     const QuadratureConfig& cfg)
{
    const Complex dir = std::polar(1.0, angle);
    auto f = [&](double t) { return g(t * dir) * dir; };

    const double log_cut = std::log(1e18);
    double T = log_cut / margin;

    std::vector<double> pts{0.0};
    const double c = std::cos(angle);
    if (c < 0.0) {
        // Closest approach to the pole at -beta.
        const double tp = -beta * c;
        const double d = beta * std::abs(std::sin(angle));
        for (double k : {-16.0, -4.0, -1.0, 0.0, 1.0, 4.0, 16.0}) {
            const double t = tp + k * d;
            if (t > pts.back()) pts.push_back(t);
        }
    }
    double step = std::max(pts.back(), 0.25 / margin);
    while (pts.back() < T) {
        pts.push_back(std::min(T, pts.back() + step));
        step *= 2.0;
    }

    QuadratureResult total;
    total.value = {0.0, 0.0};
    for (std::size_t i = 0; i + 1 < pts.size(); ++i) total += integrate_interval(f, pts[i], pts[i + 1], cfg);

    // Extend while the integrand at the cut is not negligible.
    for (int extend = 0; extend < 40; ++extend) {
        const double tail = std::abs(f(T)) / margin;
        if (tail <= 1e-18 * std::max(std::abs(total.value), 1e-300) || tail == 0.0) break;
        const double next = 2.0 * T;
        total += integrate_interval(f, T, next, cfg);
        T = next;
    }
    if (!total.converged) throw NumericError("ray quadrature did not reach tolerance");
    return total.value;
}

} // namespace

bool in_summation_disc(const DcheParams& p, Complex x, const RayDirection& dir)
{
    return x != Complex{0.0, 0.0} && disc_margin(p, x, dir.effective_angle()) > 0.0;
}

Complex laplace_sum(const DcheParams& p, Complex x, const RayDirection& dir, const QuadratureConfig& cfg)
{
    require(p.beta() > 0.0, "laplace sum needs beta > 0");
    require(p.alpha_integer().has_value(), "laplace sum needs integer alpha; use varphi_sum");
    require_disc(p, x, dir);
    cfg.validate();
    const double beta = p.beta();
    const double angle = dir.effective_angle();
    const double margin = disc_margin(p, x, angle);

    if (p.alpha_in_natural()) {
        auto g = [&](Complex xi) { return borel_v(xi, p) * std::exp(-xi / x) / (xi + beta); };
        return beta * ray_integral(g, angle, margin, beta, cfg);
    }
    const long e = 1 - *p.alpha_integer();
    auto g = [&](Complex xi) { return ipow(xi, e) * borel_q(xi, p) * std::exp(-xi / x) / (xi + beta); };
    return beta / ipow(x, e) * ray_integral(g, angle, margin, beta, cfg);
}

Complex varphi_term_integral(const DcheParams& p, Complex x, const RayDirection& dir, long k,
                             const QuadratureConfig& cfg)
{
    require(p.beta() > 0.0, "varphi needs beta > 0");
    require(k >= 0, "k must be non-negative");
    require_disc(p, x, dir);
    const double beta = p.beta();
    const double angle = dir.effective_angle();
    const Complex e = p.alpha() - 2.0 - static_cast<double>(k);
    // 1 + xi/beta keeps the sign of Im along the ray, so the principal branch is continuous.
    auto g = [&](Complex xi) { return std::exp(-xi / x + e * std::log(1.0 + xi / beta)); };
    const double margin = std::max((std::polar(1.0, angle) / x).real(), 1e-300);
    return ray_integral(g, angle, margin, beta, cfg);
}

Complex varphi_term_jump(const DcheParams& p, Complex x, long k)
{
    require(p.beta() > 0.0, "varphi needs beta > 0");
    require(k >= 0, "k must be non-negative");
    const Complex a = p.alpha();
    const double kd = static_cast<double>(k);
    const double sign = (k % 2 == 0) ? 1.0 : -1.0;
    const Complex log_part = (2.0 - a + kd) * std::log(p.beta()) - log_gamma(2.0 - a + kd) +
                             (a - kd - 1.0) * std::log(x) + p.beta() / x - Complex{0.0, pi} * a;
    return -two_pi_i * sign * std::exp(log_part);
}

Complex varphi_sum(const DcheParams& p, Complex x, const RayDirection& dir, long K, const QuadratureConfig& cfg)
{
    require(!p.alpha_integer().has_value(), "varphi_sum needs alpha not integer");
    require(K >= 1, "K must be at least 1");
    require_disc(p, x, dir);
    cfg.validate();

    const double angle = dir.effective_angle();
    const double c = (std::polar(1.0, angle) / x).real();
    // Lower bound of |1 + xi/beta| along the ray.
    const double m = std::cos(angle) >= 0.0 ? 1.0 : std::abs(std::sin(angle));
    const double amp = std::exp(std::abs(p.alpha().imag()) * pi);
    const double gx = std::abs(p.gamma() * x);

    Complex sum{0.0, 0.0};
    Complex coef{1.0, 0.0};
    for (long k = 0; k < K; ++k) {
        if (k > 0) coef *= p.gamma() * x / static_cast<double>(k);
        if (coef == Complex{0.0, 0.0}) return sum;
        sum += coef * varphi_term_integral(p, x, dir, k, cfg);
        const double next_bound = std::exp((k + 1) * std::log(gx / m) - std::lgamma(k + 2.0)) * amp *
                                  std::pow(m, p.alpha().real() - 2.0) / c;
        if (gx / m < k + 2.0 && next_bound < 1e-16 * std::abs(sum)) return sum;
    }
    throw NumericError("varphi_sum: term cap reached without convergence");
}

Complex varphi_closed(const DcheParams& p, Complex x, const RayDirection& dir, const QuadratureConfig& cfg)
{
    require(p.beta() > 0.0, "varphi needs beta > 0");
    require_disc(p, x, dir);
    cfg.validate();
    const double beta = p.beta();
    const double angle = dir.effective_angle();
    const Complex e = p.alpha() - 2.0;
    const Complex gx = p.gamma() * x;
    auto g = [&](Complex xi) {
        const Complex w = 1.0 + xi / beta;
        return std::exp(-xi / x + e * std::log(w) + gx / w);
    };
    return ray_integral(g, angle, disc_margin(p, x, angle), beta, cfg);
}

namespace {

// x^(1-alpha) continued across the negative axis from above.
Complex lateral_power(Complex x, Complex e)
{
    double arg = std::arg(x);
    if (x.real() < 0.0 && x.imag() < 0.0) arg += 2.0 * pi;
    return std::exp(e * Complex{std::log(std::abs(x)), arg});
}

} // namespace

Complex stokes_jump(const DcheParams& p, Complex x, double delta_lateral, const QuadratureConfig& cfg)
{
    require(p.beta() > 0.0, "stokes jump needs beta > 0");
    const RayDirection minus(pi, Lateral::minus, delta_lateral);
    const RayDirection plus(pi, Lateral::plus, delta_lateral);
    require_disc(p, x, minus);
    require_disc(p, x, plus);
    const double beta = p.beta();
    const Complex damp = std::exp(-beta / x);

    if (p.alpha_in_natural()) {
        const long a = *p.alpha_integer();
        const Complex diff = laplace_sum(p, x, minus, cfg) - laplace_sum(p, x, plus, cfg);
        return ipow(p.gamma(), a - 1) * damp / beta * diff;
    }
    if (auto a = p.alpha_integer()) {
        const Complex diff = laplace_sum(p, x, minus, cfg) - laplace_sum(p, x, plus, cfg);
        return ipow(x, 1 - *a) * damp / beta * diff;
    }
    const Complex diff = varphi_sum(p, x, minus, 400, cfg) - varphi_sum(p, x, plus, 400, cfg);
    return lateral_power(x, 1.0 - p.alpha()) * damp / beta * diff;
}

std::vector<Complex> default_jump_points(const DcheParams& p, double delta_lateral)
{
    const double g = std::abs(p.gamma());
    double r = p.beta();
    if (g > 0.0) r = std::min(r, 0.6 * std::cos(delta_lateral) / g);
    return {Complex{-r, 0.0}, -0.85 * r * std::polar(1.0, 0.1), -1.15 * r * std::polar(1.0, -0.1)};
}

StokesJumpSamples stokes_jump(const DcheParams& p, std::span<const Complex> xs, double delta_lateral,
                              const QuadratureConfig& cfg)
{
    require(!xs.empty(), "no sample points");
    StokesJumpSamples out;
    out.xs.assign(xs.begin(), xs.end());
    for (Complex x : xs) out.values.push_back(stokes_jump(p, x, delta_lateral, cfg));
    out.mean = std::accumulate(out.values.begin(), out.values.end(), Complex{0.0, 0.0}) /
               static_cast<double>(out.values.size());
    out.spread = 0.0;
    for (Complex v : out.values) out.spread = std::max(out.spread, std::abs(v - out.mean));
    return out;
}

std::vector<double> default_gevrey_points() { return {0.2, 0.14, 0.1, 0.07}; }

GevreyReport gevrey_check(const DcheParams& p, std::span<const double> x_list, const RayDirection& dir,
                          const QuadratureConfig& cfg)
{
    require(p.beta() > 0.0, "gevrey check needs beta > 0");
    require(!x_list.empty(), "x list is empty");
    for (std::size_t i = 0; i < x_list.size(); ++i) {
        require(x_list[i] > 0.0, "x values must be positive");
        if (i > 0) require(x_list[i] < x_list[i - 1], "x values must decrease");
    }
    const double beta = p.beta();
    const std::size_t n_max = static_cast<std::size_t>(std::ceil(2.0 * beta / x_list.back())) + 8;
    const FormalSeries fs = formal_series(p, std::min(n_max, formal_series_max_terms));

    GevreyReport rep;
    rep.kind = fs.kind;
    rep.divergent = fs.divergent;

    std::vector<double> fx, fy;
    for (double xr : x_list) {
        const Complex x{xr, 0.0};
        const Complex exact = p.alpha_integer() ? laplace_sum(p, x, dir, cfg) : varphi_sum(p, x, dir, 400, cfg);
        GevreyRow row{xr, 0, INFINITY, std::exp(-beta / xr), 0.0, {}};
        const std::size_t limit = static_cast<std::size_t>(std::ceil(2.0 * beta / xr)) + 5;
        for (std::size_t N = 1; N <= std::min(limit, fs.coefficients.size()); ++N) {
            const double err = std::abs(exact - fs.truncated(x, N));
            row.errors.push_back(err);
            if (err < row.error_opt) {
                row.error_opt = err;
                row.n_opt = N;
            }
            const double scale = std::lgamma(N + 1.0) + (N + 1.0) * std::log(xr);
            if (err > 0.0 && N <= row.n_opt + 1) {
                fx.push_back(static_cast<double>(N));
                fy.push_back(std::log(err) - scale);
            }
        }
        row.ratio = row.error_opt / row.exp_scale;
        rep.rows.push_back(std::move(row));
    }

    // log(err / (N! x^(N+1))) = log C + N log A.
    const double n = static_cast<double>(fx.size());
    const double sx = std::accumulate(fx.begin(), fx.end(), 0.0);
    const double sy = std::accumulate(fy.begin(), fy.end(), 0.0);
    double sxx = 0.0, sxy = 0.0;
    for (std::size_t i = 0; i < fx.size(); ++i) {
        sxx += fx[i] * fx[i];
        sxy += fx[i] * fy[i];
    }
    const double slope = (n * sxy - sx * sy) / (n * sxx - sx * sx);
    rep.fit_A = std::exp(slope);
    rep.fit_C = std::exp((sy - slope * sx) / n);

    if (fs.divergent) {
        double lo = INFINITY, hi = 0.0;
        for (const auto& r : rep.rows) {
            lo = std::min(lo, r.ratio);
            hi = std::max(hi, r.ratio);
        }
        rep.pass = hi <= 10.0 * lo;
        rep.note = "optimal-truncation error tracks e^(-beta/|x|) within factor " + std::to_string(hi / lo);
    } else {
        rep.pass = true;
        for (const auto& r : rep.rows) {
            const double first = r.errors.front();
            rep.pass = rep.pass && r.errors.back() <= 1e-10 * std::max(first, 1.0);
        }
        rep.note = "convergent series: error decreases with N at fixed x";
    }
    return rep;
}

} // namespace heun
