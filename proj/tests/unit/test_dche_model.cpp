#include <doctest.h>

#include "fixtures.hpp"
#include "heun/dche_model.hpp"
#include "heun/error.hpp"
#include "heun/special_functions.hpp"

#include <cmath>

using namespace heun;

namespace {

double rel(Complex a, Complex b) { return std::abs(a - b) / std::max(std::abs(b), 1e-300); }

} // namespace

TEST_CASE("parameter validation and alpha classes")
{
    CHECK_THROWS_AS(DcheParams(1.0, -1.0, 1.0), PreconditionError);
    CHECK(DcheParams(4.0, 0.0, 1.0).alpha_class() == AlphaClass::even_natural);
    CHECK(DcheParams(3.0, 0.0, 1.0).alpha_class() == AlphaClass::natural);
    CHECK(DcheParams(0.0, 1.0, 1.0).alpha_class() == AlphaClass::non_positive_integer);
    CHECK(DcheParams(-2.0, 1.0, 1.0).alpha_class() == AlphaClass::non_positive_integer);
    CHECK(DcheParams(2.5, 1.0, 1.0).alpha_class() == AlphaClass::non_integer);
    CHECK(DcheParams(Complex{2.0, 0.1}, 1.0, 1.0).alpha_class() == AlphaClass::non_integer);
}

TEST_CASE("classify_origin")
{
    CHECK(classify_origin(DcheParams(4.0, 0.0, 1.0)) == OriginClass::regular_resonant);
    CHECK(classify_origin(DcheParams(2.5, 0.0, 1.0)) == OriginClass::regular_nonresonant);
    CHECK(classify_origin(DcheParams(3.0, 0.0, 1.0)) == OriginClass::regular_nonresonant);
    CHECK(classify_origin(DcheParams(2.5, 1.0, 1.0)) == OriginClass::irregular_rank1);
}

TEST_CASE("lambda and M0")
{
    CHECK(std::abs(lambda_coefficient(DcheParams(2.0, 0.0, 1.7)) - 1.7) < 1e-15);
    CHECK(std::abs(lambda_coefficient(DcheParams(4.0, 0.0, 2.0)) - 8.0 / 6.0) < 1e-15);
    CHECK(lambda_coefficient(DcheParams(4.0, 0.0, 0.0)) == Complex{0.0, 0.0});
    CHECK_THROWS_AS(lambda_coefficient(DcheParams(3.0, 0.0, 1.0)), PreconditionError);
    CHECK_THROWS_AS(lambda_coefficient(DcheParams(2.0, 1.0, 1.0)), PreconditionError);

    CHECK(monodromy_M0(DcheParams(2.0, 0.0, 0.0)) == Matrix2C::identity());
    const Matrix2C m = monodromy_M0(DcheParams(2.0, 0.0, 1.0));
    CHECK(std::abs(m.a12 - two_pi_i) < 1e-15);
    CHECK(m.a11 == Complex{1.0, 0.0});
    CHECK(m.a21 == Complex{0.0, 0.0});
    CHECK(m.a22 == Complex{1.0, 0.0});
    const Matrix2C m4 = monodromy_M0(DcheParams(4.0, 0.0, 2.0));
    CHECK(std::abs(m4.a12 - two_pi_i * 8.0 / 6.0) < 1e-14);
    const Matrix2C n = m4 - Matrix2C::identity();
    CHECK(n * n == Matrix2C{{0, 0}, {0, 0}, {0, 0}, {0, 0}});
}

TEST_CASE("lambda derivative in gamma")
{
    for (long a : {2L, 4L, 6L}) {
        const double g = 0.8;
        const double h = 1e-5;
        const Complex fd = (lambda_coefficient(DcheParams(double(a), 0.0, g + h)) -
                            lambda_coefficient(DcheParams(double(a), 0.0, g - h))) /
                           (2.0 * h);
        const double exact = (a - 1) * std::pow(g, a - 2) / std::tgamma(double(a));
        CHECK(std::abs(fd - exact) < 1e-6);
    }
}

TEST_CASE("series invariants")
{
    const auto w0 = series_invariant(DcheParams(2.0, 1.0, 0.0), SeriesKind::W);
    CHECK(std::abs(w0.limit - 1.0) < 1e-15);
    const auto q0 = series_invariant(DcheParams(0.0, 2.0, 0.0), SeriesKind::Q);
    CHECK(std::abs(q0.limit - 2.0) < 1e-15);
    const auto s = series_invariant(DcheParams(0.5, 1.0, 1.0), SeriesKind::S);
    CHECK(rel(s.limit, bessel_j(0.5, 2.0)) < 1e-14);
    CHECK(s.converged);

    for (const auto& f : fixtures::series_S) {
        CAPTURE(f.alpha);
        CHECK(rel(series_invariant(DcheParams(f.alpha, f.beta, f.gamma), SeriesKind::S).limit, f.value) < 1e-13);
    }
    for (const auto& f : fixtures::series_W) {
        CAPTURE(f.alpha);
        CHECK(rel(series_invariant(DcheParams(f.alpha, f.beta, f.gamma), SeriesKind::W).limit, f.value) < 1e-12);
    }

    CHECK_THROWS_AS(series_invariant(DcheParams(2.0, 1.0, 1.0), SeriesKind::S), PreconditionError);
    CHECK_THROWS_AS(series_invariant(DcheParams(0.5, 1.0, 1.0), SeriesKind::W), PreconditionError);
    CHECK_THROWS_AS(series_invariant(DcheParams(1.0, 1.0, 1.0), SeriesKind::Q), PreconditionError);
}

TEST_CASE("partial sums approach the limit monotonically past the peak")
{
    const auto s = series_invariant(DcheParams(0.5, 2.0, 3.0), SeriesKind::S);
    REQUIRE(s.partial_sums.size() > 10);
    const std::size_t n = s.partial_sums.size();
    for (std::size_t k = n - 6; k + 1 < n; ++k)
        CHECK(std::abs(s.partial_sums[k + 1] - s.limit) <= std::abs(s.partial_sums[k] - s.limit) + 1e-16);
    CHECK(std::abs(s.tail(2) - (s.limit - s.partial_sum(2))) < 1e-14);
}

TEST_CASE("Q is beta^(1-alpha) times the S-form series")
{
    for (double a : {0.0, -1.0, -3.0}) {
        const DcheParams p(a, 1.7, 0.45);
        const Complex q = series_invariant(p, SeriesKind::Q).limit;
        const Complex r = std::pow(1.7, 1.0 - a) * bessel_type_series(2.0 - a, -1.7 * 0.45);
        CHECK(rel(q, r) < 1e-13);
    }
}

TEST_CASE("Bessel identity for S")
{
    for (double a : {0.5, 1.5, 2.3, -0.7}) {
        for (double b : {0.5, 2.0}) {
            const double g = 0.9;
            const double t = std::sqrt(b * g);
            const Complex s = series_invariant(DcheParams(a, b, g), SeriesKind::S).limit;
            const Complex j = std::pow(t, a - 1.0) * bessel_j(1.0 - a, 2.0 * t);
            CAPTURE(a);
            CAPTURE(b);
            CHECK(rel(s, j) < 1e-10);
        }
    }
}

TEST_CASE("Stokes multiplier")
{
    CHECK(std::abs(stokes_multiplier_mu(DcheParams(0.0, 1.3, 0.0)) - (-two_pi_i * 1.3)) < 1e-14);
    const double bg = 0.8;
    const Complex mu1 = stokes_multiplier_mu(DcheParams(1.0, 1.0, bg));
    CHECK(rel(mu1, two_pi_i * bessel_j(0.0, 2.0 * std::sqrt(bg))) < 1e-13);
    CHECK_THROWS_AS(stokes_multiplier_mu(DcheParams(1.0, 0.0, 1.0)), PreconditionError);
    for (const auto& f : fixtures::stokes_mu) {
        const DcheParams p(Complex{f.alpha_re, f.alpha_im}, f.beta, f.gamma);
        CAPTURE(f.alpha_re);
        CHECK(rel(stokes_multiplier_mu(p), f.mu) < 1e-12);
    }
}

TEST_CASE("natural form of mu")
{
    CHECK(std::abs(mu_natural_form(DcheParams(2.0, 1.0, 0.0))) == 0.0);
    const Complex mu1 = mu_natural_form(DcheParams(1.0, 1.0, 1.0));
    CHECK(rel(mu1, two_pi_i * bessel_j(0.0, 2.0)) < 1e-13);
    CHECK_THROWS_AS(mu_natural_form(DcheParams(0.5, 1.0, 1.0)), PreconditionError);

    for (int a = 1; a <= 6; ++a)
        for (double b : {0.5, 1.0, 2.0})
            for (Complex g : {Complex{0.3, 0.0}, Complex{0.7, 0.2}}) {
                const DcheParams p(double(a), b, g);
                const Complex mu = stokes_multiplier_mu(p);
                CAPTURE(a);
                CAPTURE(b);
                CAPTURE(g);
                CHECK(std::abs(mu - mu_natural_form(p)) <= 1e-12 * std::abs(mu));
            }
}

TEST_CASE("entire solution criterion")
{
    const double j01 = fixtures::j0_first_zero;
    const double bg = j01 * j01 / 4.0;
    const auto zero = entire_solution_test(DcheParams(1.0, 1.0, bg));
    CHECK(zero.verdict == EntireVerdict::holomorphic_in_cstar);
    CHECK(zero.kind == SeriesKind::W);
    CHECK(std::abs(stokes_multiplier_mu(DcheParams(1.0, 1.0, bg))) < 1e-10);
    CHECK(max_abs(stokes_matrix(DcheParams(1.0, 1.0, bg)) - Matrix2C::identity()) < 1e-10);

    CHECK(entire_solution_test(DcheParams(1.0, 1.0, 1.01 * bg)).verdict == EntireVerdict::divergent_type);
    CHECK(entire_solution_test(DcheParams(1.0, 1.0, 1.0)).verdict == EntireVerdict::divergent_type);
    CHECK(entire_solution_test(DcheParams(0.5, 1.0, 0.0)).verdict == EntireVerdict::divergent_type);
    CHECK(entire_solution_test(DcheParams(-2.0, 1.0, 0.0)).kind == SeriesKind::Q);
}

TEST_CASE("stokes_matrix")
{
    const Matrix2C st = stokes_matrix(DcheParams(0.0, 1.0, 0.0));
    CHECK(std::abs(st.a12 + two_pi_i) < 1e-14);
    CHECK(is_nilpotent_shift(st));
}
