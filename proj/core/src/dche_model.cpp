#include "heun/dche_model.hpp"

#include "heun/error.hpp"
#include "heun/special_functions.hpp"

#include <cmath>

namespace heun {

std::string_view to_string(AlphaClass c)
{
    switch (c) {
    case AlphaClass::even_natural: return "even-natural";
    case AlphaClass::natural: return "natural";
    case AlphaClass::non_positive_integer: return "non-positive-integer";
    case AlphaClass::non_integer: return "non-integer";
    }
    return "?";
}

std::string_view to_string(OriginClass c)
{
    switch (c) {
    case OriginClass::regular_resonant: return "regular-resonant";
    case OriginClass::regular_nonresonant: return "regular-nonresonant";
    case OriginClass::irregular_rank1: return "irregular-rank-1";
    }
    return "?";
}

std::string_view to_string(SeriesKind k)
{
    switch (k) {
    case SeriesKind::S: return "S";
    case SeriesKind::W: return "W";
    case SeriesKind::Q: return "Q";
    }
    return "?";
}

std::string_view to_string(EntireVerdict v)
{
    return v == EntireVerdict::holomorphic_in_cstar ? "holomorphic-in-C*" : "divergent-type";
}

DcheParams::DcheParams(Complex alpha, double beta, Complex gamma)
    : alpha_(alpha), beta_(beta), gamma_(gamma)
{
    require(is_finite(alpha) && is_finite(gamma) && std::isfinite(beta),
            "DCHE parameters must be finite");
    require(beta >= 0.0, "beta must be real and non-negative");
    alpha_int_ = as_integer(alpha, 1e-12);
    if (!alpha_int_) class_ = AlphaClass::non_integer;
    else if (*alpha_int_ <= 0) class_ = AlphaClass::non_positive_integer;
    else if (*alpha_int_ % 2 == 0) class_ = AlphaClass::even_natural;
    else class_ = AlphaClass::natural;
    if (alpha_int_) alpha_ = Complex{static_cast<double>(*alpha_int_), 0.0};
}

OriginClass classify_origin(const DcheParams& p)
{
    if (p.beta() > 0.0) return OriginClass::irregular_rank1;
    return p.alpha_class() == AlphaClass::even_natural ? OriginClass::regular_resonant
                                                       : OriginClass::regular_nonresonant;
}

Complex lambda_coefficient(const DcheParams& p)
{
    require(classify_origin(p) == OriginClass::regular_resonant,
            "lambda requires beta=0 and alpha in 2N (condition res1)");
    const long n = *p.alpha_integer() - 1;
    return ipow(p.gamma(), n) / std::tgamma(static_cast<double>(n) + 1.0);
}

Matrix2C monodromy_M0(const DcheParams& p)
{
    return Matrix2C::unipotent(two_pi_i * lambda_coefficient(p));
}

Complex SeriesInvariant::tail(std::size_t n) const
{
    Complex acc{0.0, 0.0};
    for (std::size_t k = terms.size(); k-- > n + 1;) acc += terms[k];
    return acc;
}

double SeriesInvariant::max_partial_abs() const
{
    double m = 0.0;
    for (const auto& s : partial_sums) m = std::max(m, std::abs(s));
    return m;
}

SeriesKind series_kind_for(const DcheParams& p)
{
    switch (p.alpha_class()) {
    case AlphaClass::non_integer: return SeriesKind::S;
    case AlphaClass::non_positive_integer: return SeriesKind::Q;
    default: return SeriesKind::W;
    }
}

SeriesInvariant series_invariant(const DcheParams& p, SeriesKind kind)
{
    const AlphaClass ac = p.alpha_class();
    Complex c;
    Complex factor{1.0, 0.0};
    switch (kind) {
    case SeriesKind::S:
        require(ac == AlphaClass::non_integer, "series S requires alpha not an integer");
        c = 2.0 - p.alpha();
        break;
    case SeriesKind::W:
        require(p.alpha_in_natural(), "series W requires alpha in N");
        c = p.alpha();
        break;
    case SeriesKind::Q:
        require(ac == AlphaClass::non_positive_integer, "series Q requires alpha in Z<=0");
        c = 2.0 - p.alpha();
        factor = ipow(Complex{p.beta(), 0.0}, 1 - *p.alpha_integer());
        break;
    }

    const Complex x = -p.beta() * p.gamma();
    SeriesInvariant out{kind, {}, {}, {0.0, 0.0}, false};
    Complex term = factor * reciprocal_gamma(c);
    Complex sum = term;
    out.terms.push_back(term);
    out.partial_sums.push_back(sum);
    double largest = std::abs(sum);
    int small_run = 0;
    constexpr long cap = 100000;
    for (long k = 1; k < cap; ++k) {
        const double kd = static_cast<double>(k);
        const Complex denom = kd * (c + (kd - 1.0));
        term *= x / denom;
        sum += term;
        out.terms.push_back(term);
        out.partial_sums.push_back(sum);
        largest = std::max(largest, std::abs(sum));
        const bool shrinking = std::abs(x) < std::abs(denom);
        if (shrinking && std::abs(term) <= 1e-16 * largest) {
            if (++small_run == 3 || term == Complex{0.0, 0.0}) {
                out.converged = true;
                break;
            }
        } else {
            small_run = 0;
        }
    }
    out.limit = sum;
    if (!out.converged) throw NumericError("series invariant did not converge within the term cap");
    return out;
}

namespace {

Complex minus_beta_power(double beta, const DcheParams& p)
{
    if (auto n = p.alpha_integer()) return ipow(Complex{-beta, 0.0}, 1 - *n);
    return std::exp((1.0 - p.alpha()) * Complex{std::log(beta), pi});
}

} // namespace

Complex stokes_series_limit(const DcheParams& p)
{
    require(p.beta() > 0.0, "Stokes multiplier requires beta > 0");
    return minus_beta_power(p.beta(), p) *
           bessel_type_series(2.0 - p.alpha(), -p.beta() * p.gamma());
}

Complex stokes_multiplier_mu(const DcheParams& p) { return two_pi_i * stokes_series_limit(p); }

Complex mu_natural_form(const DcheParams& p)
{
    require(p.beta() > 0.0, "mu natural form requires beta > 0");
    require(p.alpha_in_natural(), "mu natural form requires alpha in N");
    const long a = *p.alpha_integer();
    return two_pi_i * ipow(p.gamma(), a - 1) * bessel_type_series(p.alpha(), -p.beta() * p.gamma());
}

EntireSolutionReport entire_solution_test(const DcheParams& p, double tol_zero)
{
    require(p.beta() > 0.0, "entire-solution test requires beta > 0");
    const SeriesKind kind = series_kind_for(p);
    const SeriesInvariant s = series_invariant(p, kind);
    const double scale = s.max_partial_abs();
    const bool zero = std::abs(s.limit) < tol_zero * scale;
    return {zero ? EntireVerdict::holomorphic_in_cstar : EntireVerdict::divergent_type, kind,
            s.limit, scale};
}

Matrix2C stokes_matrix(const DcheParams& p) { return Matrix2C::unipotent(stokes_multiplier_mu(p)); }

} // namespace heun
