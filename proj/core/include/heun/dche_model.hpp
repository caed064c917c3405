#pragma once

#include "heun/complex.hpp"
#include "heun/matrix.hpp"

#include <optional>
#include <string_view>
#include <vector>

namespace heun {

// Integer classes use the convention N = {1, 2, 3, ...}.
enum class AlphaClass { even_natural, natural, non_positive_integer, non_integer };

std::string_view to_string(AlphaClass c);

// Reducible DCHE  x^2 w'' + (alpha x - beta - gamma x^2) w' = 0.
class DcheParams {
public:
    DcheParams(Complex alpha, double beta, Complex gamma);

    Complex alpha() const { return alpha_; }
    double beta() const { return beta_; }
    Complex gamma() const { return gamma_; }
    AlphaClass alpha_class() const { return class_; }
    // Integer value of alpha for the integer classes.
    std::optional<long> alpha_integer() const { return alpha_int_; }

    bool alpha_in_natural() const
    {
        return class_ == AlphaClass::even_natural || class_ == AlphaClass::natural;
    }

    // G = diag(0, gamma), Lambda = diag(0, -alpha), B = diag(0, beta).
    Matrix2C g_matrix() const { return {{0, 0}, {0, 0}, {0, 0}, gamma_}; }
    Matrix2C lambda_matrix() const { return {{0, 0}, {0, 0}, {0, 0}, -alpha_}; }
    Matrix2C b_matrix() const { return {{0, 0}, {0, 0}, {0, 0}, {beta_, 0}}; }

private:
    Complex alpha_;
    double beta_;
    Complex gamma_;
    AlphaClass class_;
    std::optional<long> alpha_int_;
};

enum class OriginClass { regular_resonant, regular_nonresonant, irregular_rank1 };

std::string_view to_string(OriginClass c);

OriginClass classify_origin(const DcheParams& p);

// gamma^(alpha-1)/(alpha-1)!; requires beta = 0, alpha even natural.
Complex lambda_coefficient(const DcheParams& p);

// [[1, 2 pi i lambda], [0, 1]].
Matrix2C monodromy_M0(const DcheParams& p);

enum class SeriesKind { S, W, Q };

std::string_view to_string(SeriesKind k);

struct SeriesInvariant {
    SeriesKind kind;
    std::vector<Complex> partial_sums;
    std::vector<Complex> terms;
    Complex limit;
    bool converged = false;

    // Partial sum through index n; equals the limit past the stored range.
    Complex partial_sum(std::size_t n) const { return n < partial_sums.size() ? partial_sums[n] : limit; }
    // Limit minus partial sum through n, summed from the stored tail terms.
    Complex tail(std::size_t n) const;
    double max_partial_abs() const;
};

// S: alpha not integer, W: alpha natural, Q: alpha in Z<=0.
SeriesInvariant series_invariant(const DcheParams& p, SeriesKind kind);

// The kind matching the alpha class.
SeriesKind series_kind_for(const DcheParams& p);

// 2 pi i (-beta)^(1-alpha) Sum (-1)^k beta^k gamma^k / (k! Gamma(2+k-alpha)), arg(-beta) = pi.
Complex stokes_multiplier_mu(const DcheParams& p);

// 2 pi i gamma^(alpha-1) Sum (-1)^n beta^n gamma^n / (n! Gamma(alpha+n)); alpha natural.
Complex mu_natural_form(const DcheParams& p);

// Sum (-1)^k beta^k gamma^k / (k! Gamma(2+k-alpha)) times (-beta)^(1-alpha).
Complex stokes_series_limit(const DcheParams& p);

enum class EntireVerdict { holomorphic_in_cstar, divergent_type };

std::string_view to_string(EntireVerdict v);

struct EntireSolutionReport {
    EntireVerdict verdict;
    SeriesKind kind;
    Complex value;
    double scale;  // largest partial-sum modulus
};

EntireSolutionReport entire_solution_test(const DcheParams& p, double tol_zero = 1e-12);

// [[1, mu], [0, 1]].
Matrix2C stokes_matrix(const DcheParams& p);

} // namespace heun
