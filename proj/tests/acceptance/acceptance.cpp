// One PASS/FAIL line per acceptance criterion. Exit status is the number of failures.
#include "fixtures.hpp"
#include "grids.hpp"
#include "heun/dche_model.hpp"
#include "heun/limits_lab.hpp"
#include "heun/ode_oracle.hpp"
#include "heun/path.hpp"
#include "heun/resummation.hpp"
#include "heun/special_functions.hpp"
#include "heun/unfold_model.hpp"

#include <chrono>
#include <cmath>
#include <cstdio>
#include <exception>
#include <functional>
#include <sstream>
#include <string>

using namespace heun;

namespace {

struct Outcome {
    bool ok;
    std::string detail;
};

int failures = 0;

void criterion(int id, const char* name, double budget_s, const std::function<Outcome()>& body)
{
    const auto t0 = std::chrono::steady_clock::now();
    Outcome o{false, ""};
    try {
        o = body();
    } catch (const std::exception& e) {
        o = {false, std::string("exception: ") + e.what()};
    }
    const double dt = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    const bool in_time = dt < budget_s;
    const bool pass = o.ok && in_time;
    if (!pass) ++failures;
    std::printf("%s  %2d  %-34s %7.3fs (< %gs)  %s%s\n", pass ? "PASS" : "FAIL", id, name, dt, budget_s,
                o.detail.c_str(), in_time ? "" : "  [over time budget]");
    std::fflush(stdout);
}

std::string fmt(const char* f, double a)
{
    char buf[96];
    std::snprintf(buf, sizeof buf, f, a);
    return buf;
}

double rel(Complex a, Complex b) { return std::abs(a - b) / std::abs(b); }

Outcome sum_limit_relative(double alpha, Complex gamma, double tol)
{
    const auto eps = default_eps_sequence();
    const SweepReport r = check_sum_limit(DcheParams(alpha, 0.0, gamma), eps);
    const double e = r.error() / std::abs(r.target);
    return {e <= tol, fmt("alpha=%g", alpha) + fmt(" rel_err=%.2e", e)};
}

} // namespace

int main()
{
    criterion(1, "appendix alpha=2", 1.0, [] {
        const Complex g{1.5, 0.0};
        const SweepReport r = check_sum_limit(DcheParams(2.0, 0.0, g), default_eps_sequence());
        const double ext = r.error();
        const double raw = std::abs(r.values.back() - g);
        return Outcome{ext <= 1e-8 * (1.0 + std::abs(g)) && raw <= 1e-3,
                       fmt("extrapolated err=%.2e", ext) + fmt(" raw err at 1e-6=%.2e", raw)};
    });

    criterion(2, "appendix alpha=4,6", 2.0, [] {
        Outcome all{true, ""};
        for (double a : {4.0, 6.0}) {
            const auto t0 = std::chrono::steady_clock::now();
            const Outcome o = sum_limit_relative(a, 1.5, 1e-6);
            const double dt = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
            all.ok = all.ok && o.ok && dt < 1.0;
            all.detail += o.detail + fmt(" (%.3fs) ", dt);
        }
        return all;
    });

    criterion(3, "generalization alpha=8", 2.0, [] { return sum_limit_relative(8.0, {0.7, 0.2}, 1e-5); });

    criterion(4, "sign law alpha=2,4,6", 1.0, [] {
        bool ok = true;
        std::ostringstream d;
        const auto eps = default_eps_sequence();
        for (long a : {2L, 4L, 6L}) {
            const double par = std::pow(-1.0, a / 2);
            const DcheParams p(double(a), 0.0, 1.0);
            for (double e : eps) {
                const UnfoldParams u(p, std::sqrt(e));
                ok = ok && q_k(u, Side::R).real() * (-par) > 0.0 && q_k(u, Side::L).real() * par > 0.0;
            }
            const SweepReport r = check_divergence_sign(p, eps, 0.2);
            const double expected = -(a - 1) / 2.0;
            ok = ok && std::abs(r.empirical_order - expected) <= 0.2 * std::abs(expected);
            d << "p" << a << "=" << fmt("%.3f ", r.empirical_order);
        }
        return Outcome{ok, "orders " + d.str()};
    });

    criterion(5, "residue oracle", 5.0, [] {
        double worst = 0.0;
        const std::pair<double, double> cases[] = {{4.0, 0.1}, {6.0, 0.05}};
        for (auto [a, s] : cases) {
            const UnfoldParams u(DcheParams(a, 0.0, {0.7, 0.3}), s);
            const auto f = unfolded_integrand(u);
            worst = std::max(worst, rel(residue_via_contour(f, s, s), q_k(u, Side::R)));
            worst = std::max(worst, rel(residue_via_contour(f, -s, s), q_k(u, Side::L)));
        }
        return Outcome{worst <= 1e-8, fmt("max rel_err=%.2e", worst)};
    });

    criterion(6, "monodromy oracle", 10.0, [] {
        double vs_closed = 0.0, vs_product = 0.0;
        const std::pair<double, double> cases[] = {{2.0, 0.1}, {4.0, 0.1}};
        for (auto [a, s] : cases) {
            const UnfoldParams u(DcheParams(a, 0.0, {0.7, 0.3}), s);
            const Complex base{0.0, s};
            const auto loop_r = loop_around(base, {s, 0.0}, s / 2.0);
            const auto loop_l = loop_around(base, {-s, 0.0}, s / 2.0);
            const Matrix2C nr = numeric_monodromy_loop(u, loop_r, base).matrix;
            const Matrix2C nl = numeric_monodromy_loop(u, loop_l, base).matrix;
            const Matrix2C nb = numeric_monodromy_loop(u, ComplexPath::composite({loop_r, loop_l}), base).matrix;
            const Matrix2C mr = monodromy_Mk(u, Side::R);
            const Matrix2C ml = monodromy_Mk(u, Side::L);
            vs_closed = std::max({vs_closed, max_abs(nr - mr), max_abs(nl - ml), max_abs(nb - mr * ml)});
            vs_product = std::max(vs_product, max_abs(nb - nr * nl));
        }
        return Outcome{vs_closed <= 1e-6 && vs_product <= 1e-8,
                       fmt("vs closed form=%.2e", vs_closed) + fmt(" composite vs product=%.2e", vs_product)};
    });

    criterion(7, "d_L limit", 30.0, [] {
        const DcheParams p(0.5, 1.0, 0.4);
        const auto ms = default_m_values();
        const SweepReport r = check_stokes_limit(p, ms);
        const Complex mu = stokes_multiplier_mu(p);
        const double lim_err = std::abs(r.extrapolated - mu);
        const auto pt = resonant_eps_sequence(p, 200, 200);
        const UnfoldParams u(p, pt.at(0).sqrt_eps);
        const double oracle = rel(residue_left_keyhole(u), d_L(u));
        return Outcome{lim_err <= 1e-4 * (1.0 + std::abs(mu)) && oracle <= 1e-8,
                       fmt("|2 pi i d_L -> mu| err=%.2e", lim_err) + fmt(" m=200 oracle rel_err=%.2e", oracle)};
    });

    criterion(8, "Stokes jump triple agreement", 20.0, [] {
        const DcheParams cases[] = {DcheParams(3.0, 1.0, 0.4), DcheParams(0.0, 1.0, 0.4), DcheParams(0.5, 1.0, 0.3)};
        double worst_rel = 0.0, worst_spread = 0.0;
        for (const auto& p : cases) {
            const auto xs = default_jump_points(p);
            const StokesJumpSamples s = stokes_jump(p, xs);
            const Complex mu = stokes_multiplier_mu(p);
            for (Complex v : s.values) worst_rel = std::max(worst_rel, rel(v, mu));
            worst_spread = std::max(worst_spread, s.spread);
        }
        return Outcome{worst_rel <= 1e-6 && worst_spread <= 1e-6,
                       fmt("max rel_err=%.2e", worst_rel) + fmt(" max spread=%.2e", worst_spread)};
    });

    criterion(9, "mu-form identity", 1.0, [] {
        double worst = 0.0;
        for (int a = 1; a <= 6; ++a)
            for (double b : {0.5, 1.0, 2.0})
                for (Complex g : {Complex{0.3, 0.0}, Complex{0.7, 0.2}}) {
                    const DcheParams p(double(a), b, g);
                    worst = std::max(worst, rel(mu_natural_form(p), stokes_multiplier_mu(p)));
                }
        return Outcome{worst <= 1e-12, fmt("max rel diff=%.2e", worst)};
    });

    criterion(10, "Bessel criterion", 1.0, [] {
        // First zero of J_0 by bisection on the library's own J_0.
        double lo = 2.0, hi = 3.0;
        for (int i = 0; i < 200 && hi - lo > 1e-16 * hi; ++i) {
            const double mid = 0.5 * (lo + hi);
            (bessel_j(0.0, lo).real() * bessel_j(0.0, mid).real() <= 0.0 ? hi : lo) = mid;
        }
        const double j01 = 0.5 * (lo + hi);
        const double bg = j01 * j01 / 4.0;
        const DcheParams at(1.0, 1.0, bg);
        const bool holo = entire_solution_test(at).verdict == EntireVerdict::holomorphic_in_cstar;
        const double mu = std::abs(stokes_multiplier_mu(at));
        const bool up = entire_solution_test(DcheParams(1.0, 1.0, 1.01 * bg)).verdict == EntireVerdict::divergent_type;
        const bool down = entire_solution_test(DcheParams(1.0, 1.0, 0.99 * bg)).verdict == EntireVerdict::divergent_type;
        const double root_err = std::abs(j01 - fixtures::j0_first_zero);
        return Outcome{holo && mu <= 1e-10 && up && down && root_err < 1e-14,
                       fmt("j01=%.16g", j01) + fmt(" |mu|=%.2e", mu) + (up && down ? " flips at +-1%" : " no flip")};
    });

    criterion(11, "convergence probe", 10.0, [] {
        std::vector<Complex> xs;
        for (int k = 0; k < 8; ++k) xs.push_back(std::polar(0.5, -2.8 + 5.6 * k / 7.0));
        const double eps[] = {1e-2, 1e-3, 1e-4};
        const SweepReport r = convergence_probe(DcheParams(2.0, 0.0, 1.0), eps, xs);
        bool decreasing = true;
        for (std::size_t i = 1; i < r.values.size(); ++i)
            decreasing = decreasing && r.values[i].real() < r.values[i - 1].real();
        return Outcome{decreasing && r.empirical_order >= 0.5, fmt("order=%.3f", r.empirical_order)};
    });

    criterion(12, "special-function suite", 1.0, [] {
        double refl = 0.0;
        for (Complex z : testgrid::gamma_grid()) refl = std::max(refl, reflection_residual(z));
        double worst_ratio = 0.0;  // observed / bound
        for (double z : testgrid::ratio_points)
            for (Complex a : testgrid::ratio_shifts()) {
                const Complex ratio = std::exp(log_gamma_ratio(z, a) - a * std::log(z));
                worst_ratio = std::max(worst_ratio, std::abs(ratio - 1.0) / (2.0 * std::abs(a * (a - 1.0)) / z));
            }
        return Outcome{refl <= 1e-11 && worst_ratio <= 1.0,
                       fmt("reflection max=%.2e", refl) + fmt(" ratio/bound max=%.3f", worst_ratio)};
    });

    std::printf("%s: %d failing criteria\n", failures == 0 ? "ALL PASS" : "FAILURES", failures);
    return failures == 0 ? 0 : 1;
}
