#include <doctest.h>

#include "heun/error.hpp"
#include "heun/limits_lab.hpp"

#include <nlohmann/json.hpp>

#include <algorithm>
#include <cmath>

using namespace heun;

TEST_CASE("Richardson on synthetic sequences")
{
    const double h[] = {0.1, 0.01, 0.001};
    std::vector<Complex> v;
    for (double e : h) v.push_back(1.0 + e);
    const auto lin = richardson_extrapolate(v, h);
    CHECK(std::abs(lin.limit - 1.0) < 1e-12);
    CHECK(std::abs(lin.empirical_order - 1.0) < 1e-6);
    CHECK_FALSE(lin.fallback);

    const Complex g{0.7, -0.2};
    std::vector<Complex> w;
    for (double e : h) w.push_back(g + 3.0 * std::sqrt(e));
    const auto half = richardson_extrapolate(w, h);
    CHECK(std::abs(half.limit - g) < 1e-10);
    CHECK(std::abs(half.empirical_order - 0.5) < 1e-6);

    const std::vector<Complex> flat(3, Complex{2.0, 1.0});
    const auto c = richardson_extrapolate(flat, h);
    CHECK(c.limit == Complex{2.0, 1.0});
    CHECK(std::isnan(c.empirical_order));

    const double two[] = {0.1, 0.01};
    CHECK_THROWS_AS(richardson_extrapolate(std::span<const Complex>(v.data(), 2), two), PreconditionError);
}

TEST_CASE("Richardson with an order hint")
{
    const double h[] = {0.2, 0.1, 0.05, 0.025};
    std::vector<Complex> v;
    for (double e : h) v.push_back(5.0 + 2.0 * e + 0.5 * e * e);
    const auto r = richardson_extrapolate(v, h, 1.0);
    CHECK(std::abs(r.limit - 5.0) < 1e-12);
}

TEST_CASE("q_R + q_L for alpha = 2 extrapolates to gamma")
{
    const DcheParams p(2.0, 0.0, 1.5);
    const double eps[] = {1e-2, 1e-4, 1e-6};
    const auto r = check_sum_limit(p, eps);
    CHECK(std::abs(r.extrapolated - 1.5) < 1e-8 * 2.5);
    CHECK(r.verdict == Verdict::pass);
}

TEST_CASE("sum limits on the default sequence")
{
    const auto eps = default_eps_sequence();
    REQUIRE(eps.size() == 5);
    CHECK(eps.front() == 1e-2);
    CHECK(eps.back() == 1e-6);

    const auto r2 = check_sum_limit(DcheParams(2.0, 0.0, 1.5), eps);
    CHECK(r2.verdict == Verdict::pass);
    CHECK(r2.error() <= 1e-8 * 2.5);
    CHECK(std::abs(r2.values.back() - 1.5) < 1e-3);

    const auto r4 = check_sum_limit(DcheParams(4.0, 0.0, 1.5), eps);
    CHECK(r4.verdict == Verdict::pass);
    CHECK(r4.error() <= 1e-6 * std::pow(1.5, 3) / 6.0);

    const auto r6 = check_sum_limit(DcheParams(6.0, 0.0, 1.5), eps);
    CHECK(r6.verdict == Verdict::pass);
    CHECK(r6.error() <= 1e-6 * std::pow(1.5, 5) / 120.0);

    const Complex g{0.7, 0.2};
    const auto r8 = check_sum_limit(DcheParams(8.0, 0.0, g), eps);
    const Complex target = std::pow(g, 7) / 5040.0;
    CHECK(std::abs(r8.target - target) < 1e-15);
    CHECK(r8.error() <= 1e-5 * std::abs(target));

    const auto r0 = check_sum_limit(DcheParams(4.0, 0.0, 0.0), eps);
    CHECK(r0.verdict == Verdict::pass);
    CHECK_THROWS_AS(check_sum_limit(DcheParams(3.0, 0.0, 1.0), eps), PreconditionError);
}

TEST_CASE("divergence signs")
{
    const auto eps = default_eps_sequence();
    for (double a : {2.0, 4.0, 6.0}) {
        const auto r = check_divergence_sign(DcheParams(a, 0.0, 1.0), eps);
        CAPTURE(a);
        CHECK(r.verdict == Verdict::pass);
        CHECK(std::abs(r.empirical_order + (a - 1.0) / 2.0) <= 0.2 * (a - 1.0) / 2.0);
        const double sgn = -std::pow(-1.0, a / 2.0);
        CHECK(r.values.back().real() * sgn > 0.0);
    }
    const auto c = check_divergence_sign(DcheParams(4.0, 0.0, {0.7, 0.3}), eps);
    CHECK(c.verdict == Verdict::inconclusive);
    bool has_phase = false;
    for (const auto& [k, v] : c.diagnostics) has_phase = has_phase || k == "phase_q_R_last";
    CHECK(has_phase);
}

TEST_CASE("d_L and Stokes limits")
{
    const DcheParams p(0.5, 1.0, 0.4);
    const auto ms = default_m_values();
    REQUIRE(ms.size() == 4);
    const auto d = check_dL_limit(p, ms);
    CHECK(d.verdict == Verdict::pass);
    const auto st = check_stokes_limit(p, ms);
    CHECK(st.verdict == Verdict::pass);
    const Complex mu = stokes_multiplier_mu(p);
    CHECK(std::abs(st.extrapolated - mu) <= 1e-4 * (1.0 + std::abs(mu)));
    CHECK(std::abs(st.values.back() - mu) < 1e-2);
}

TEST_CASE("monodromy limits")
{
    const auto eps = default_eps_sequence();
    const auto z = check_monodromy_limit(DcheParams(2.0, 0.0, 0.0), eps);
    CHECK(z.verdict == Verdict::pass);
    for (Complex v : z.values) CHECK(std::abs(v) < 1e-12);

    const auto one = check_monodromy_limit(DcheParams(2.0, 0.0, 1.0), eps);
    CHECK(one.verdict == Verdict::pass);
    CHECK(std::abs(one.target - two_pi_i) < 1e-15);

    const auto four = check_monodromy_limit(DcheParams(4.0, 0.0, 2.0), eps);
    CHECK(four.verdict == Verdict::pass);
    CHECK(std::abs(four.target - two_pi_i * 8.0 / 6.0) < 1e-14);
}

TEST_CASE("eps power series")
{
    const auto z = eps_power_series_check(0.0, 1e-2);
    CHECK(z.direct_minus == Complex{1.0, 0.0});
    CHECK(z.series_minus == Complex{1.0, 0.0});
    CHECK(z.residual == 0.0);

    const auto one = eps_power_series_check(1.0, 1e-4);
    CHECK(one.residual <= 1e-10);
    CHECK(one.pass);

    const auto eps = default_eps_sequence();
    const auto sw = eps_series_sweep({0.5, 0.5}, eps);
    CHECK(sw.verdict == Verdict::pass);
    CHECK(std::abs(sw.values.back() - 1.0) < std::abs(sw.values.front() - 1.0));
}

TEST_CASE("report serialization")
{
    const auto r = check_sum_limit(DcheParams(2.0, 0.0, 1.5), default_eps_sequence());
    const auto j = nlohmann::json::parse(to_json(r));
    CHECK(j["verdict"] == "pass");
    CHECK(j["sweep"].size() == 5);
    CHECK(j.contains("extrapolated"));
    CHECK(j["target"]["re"].get<double>() == doctest::Approx(1.5));

    const std::string csv = to_csv(r);
    CHECK(csv.rfind("eps,re,im,abs_err\n", 0) == 0);
    CHECK(std::count(csv.begin(), csv.end(), '\n') == 6);
    CHECK(to_string(Verdict::inconclusive) == "inconclusive");
}
