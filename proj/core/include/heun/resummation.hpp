#pragma once

#include "heun/dche_model.hpp"
#include "heun/quadrature.hpp"

#include <span>
#include <string_view>
#include <vector>

namespace heun {

enum class FormalKind { phi_hat, psi_hat, phi_hat_neg };

std::string_view to_string(FormalKind k);

// Formal solution sum_n a_n x^(n+1) attached to the origin for beta > 0.
// phi_hat:     a_n = (-1)^n S_n Gamma(2-alpha+n) / beta^n          (alpha not integer)
// psi_hat:     a_n = (-1)^n W_n n! / beta^n                        (alpha natural)
// phi_hat_neg: a_n = (-1)^n Q_n Gamma(2-alpha+n) / beta^(1-alpha+n) (alpha <= 0 integer)
struct FormalSeries {
    FormalKind kind;
    std::vector<Complex> coefficients;
    // p_i of P(1/x) = sum_i p_i x^-i, i = 0..alpha-2; psi_hat with alpha >= 2 only.
    std::vector<Complex> polynomial_part;
    Complex governing_constant;  // S, W or Q
    bool divergent;

    // sum_{n<N} a_n x^(n+1).
    Complex truncated(Complex x, std::size_t N) const;
};

inline constexpr std::size_t formal_series_max_terms = 10000;

FormalSeries formal_series(const DcheParams& p, std::size_t N, double tol_zero = 1e-12);

// v(xi) = sum gamma^n xi^n / (n! Gamma(alpha+n)); alpha natural.
Complex borel_v(Complex xi, const DcheParams& p);
// q(xi) = sum gamma^k xi^k / (k! Gamma(2-alpha+k)).
Complex borel_q(Complex xi, const DcheParams& p);

enum class Lateral { none, plus, minus };

std::string_view to_string(Lateral l);

struct RayDirection {
    double theta = 0.0;
    Lateral lateral = Lateral::none;
    double delta = 0.05;

    RayDirection() = default;
    RayDirection(double theta, Lateral lateral = Lateral::none, double delta = 0.05);

    // pi -+ delta for the lateral rays, theta otherwise.
    double effective_angle() const;
};

// Re(e^(i theta) / x) > |gamma|.
bool in_summation_disc(const DcheParams& p, Complex x, const RayDirection& dir);

// psi_theta (alpha natural) or phi_theta (alpha <= 0 integer) by ray quadrature.
Complex laplace_sum(const DcheParams& p, Complex x, const RayDirection& dir, const QuadratureConfig& cfg = {});

// int_0^(inf e^(i theta)) e^(-xi/x) (1 + xi/beta)^(alpha-2-k) d xi.
Complex varphi_term_integral(const DcheParams& p, Complex x, const RayDirection& dir, long k,
                             const QuadratureConfig& cfg = {});

// Lateral difference of the k-th integral, minus ray minus plus ray, in closed form.
Complex varphi_term_jump(const DcheParams& p, Complex x, long k);

// sum_k gamma^k x^k / k! times the k-th integral; alpha not integer.
Complex varphi_sum(const DcheParams& p, Complex x, const RayDirection& dir, long K = 400,
                   const QuadratureConfig& cfg = {});

// The same function as one ray integral of e^(-xi/x) (1+xi/beta)^(alpha-2) exp(gamma x beta/(beta+xi)).
Complex varphi_closed(const DcheParams& p, Complex x, const RayDirection& dir, const QuadratureConfig& cfg = {});

// Stokes multiplier from the lateral difference at theta = pi.
Complex stokes_jump(const DcheParams& p, Complex x, double delta_lateral = 0.05, const QuadratureConfig& cfg = {});

struct StokesJumpSamples {
    std::vector<Complex> xs;
    std::vector<Complex> values;
    Complex mean;
    double spread;  // max |value - mean|
};

// Three sample points near the negative axis, inside both lateral discs.
std::vector<Complex> default_jump_points(const DcheParams& p, double delta_lateral = 0.05);

StokesJumpSamples stokes_jump(const DcheParams& p, std::span<const Complex> xs, double delta_lateral = 0.05,
                              const QuadratureConfig& cfg = {});

struct GevreyRow {
    double x;
    std::size_t n_opt;     // truncation with the smallest error
    double error_opt;
    double exp_scale;      // e^(-beta/|x|)
    double ratio;          // error_opt / exp_scale
    std::vector<double> errors;  // by truncation order N = 1, 2, ...
};

struct GevreyReport {
    FormalKind kind;
    bool divergent;
    std::vector<GevreyRow> rows;
    double fit_C;
    double fit_A;
    bool pass;
    std::string note;
};

std::vector<double> default_gevrey_points();

GevreyReport gevrey_check(const DcheParams& p, std::span<const double> x_list, const RayDirection& dir = {},
                          const QuadratureConfig& cfg = {});

} // namespace heun
