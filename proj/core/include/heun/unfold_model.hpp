#pragma once

#include "heun/dche_model.hpp"

#include <string_view>
#include <vector>

namespace heun {

enum class ResonanceCase { res1, res2, none };
enum class Side { L, R };

std::string_view to_string(ResonanceCase r);
std::string_view to_string(Side s);

struct SingularPoints {
    double x_L;
    double x_R;
    double x_LL;
    double x_RR;
};

// Unfolded equation with singular points -sqrt(eps), sqrt(eps), -1/sqrt(eps), 1/sqrt(eps).
class UnfoldParams {
public:
    UnfoldParams(DcheParams base, double sqrt_eps);

    const DcheParams& base() const { return base_; }
    double sqrt_eps() const { return sqrt_eps_; }
    double eps() const { return sqrt_eps_ * sqrt_eps_; }
    ResonanceCase resonance() const { return case_; }
    // m = beta/(2 sqrt eps) + alpha/2 under res2.
    long resonant_index() const { return m_; }
    // alpha - m == 0 under res2: accepted since 0 is not in N, but reported.
    bool res2_boundary() const { return boundary_; }

    // Exponent of (z - sqrt eps) and of (z + sqrt eps) in w2'.
    Complex exponent_R() const;
    Complex exponent_L() const;
    // gamma / (2 sqrt eps), exponent of (1 + sqrt(eps) z)/(1 - sqrt(eps) z).
    Complex ratio_exponent() const { return base_.gamma() / (2.0 * sqrt_eps_); }

private:
    DcheParams base_;
    double sqrt_eps_;
    ResonanceCase case_ = ResonanceCase::none;
    long m_ = 0;
    bool boundary_ = false;
};

SingularPoints singular_points(const UnfoldParams& u);

struct ResonantPoint {
    long m;
    double sqrt_eps;
};

// sqrt(eps_m) = beta/(2m - alpha) for m in [m_min, m_max], kept when 0 < sqrt eps < 1
// and alpha - m is not in N.
std::vector<ResonantPoint> resonant_eps_sequence(const DcheParams& p, long m_min, long m_max);

// Closed-form residue of w2' at x_L or x_R under res1.
Complex q_k(const UnfoldParams& u, Side side);

struct PairedSum {
    Complex value;     // q_R + q_L
    double condition;  // sum of term moduli over |value|
    bool precision_ok; // condition * unit roundoff below half the double mantissa
};

// q_R + q_L with the k-terms of both sides combined in extended precision.
PairedSum q_sum(const UnfoldParams& u);

Matrix2C monodromy_Mk(const UnfoldParams& u, Side side);

enum class SumEvaluation { product, paired };

// M_R M_L. With SumEvaluation::paired the top-right entry is 2 pi i q_sum(u).
Matrix2C unfolded_monodromy(const UnfoldParams& u, SumEvaluation mode = SumEvaluation::product);

enum class NilpotentWhich { J_L, J_R, T_L };

struct NilpotentLog {
    Complex coefficient;
    NilpotentWhich which;
    Matrix2C matrix() const { return {{0, 0}, coefficient, {0, 0}, {0, 0}}; }
};

NilpotentLog nilpotent_log_J(const UnfoldParams& u, Side side);
NilpotentLog nilpotent_log_T(const UnfoldParams& u);

inline constexpr long d_L_max_m = 2000;

// Closed-form residue of w2' at x_L under res2.
Complex d_L(const UnfoldParams& u);

Matrix2C unfolded_stokes(const UnfoldParams& u);

// 1/((z - s)(z + s))^n = Sum_j c[j-1]/(z - s)^j + d[j-1]/(z + s)^j, n = alpha/2.
struct PartialFractions {
    std::vector<Complex> c;
    std::vector<Complex> d;
    double sqrt_eps;
    Complex evaluate(Complex z) const;
};

PartialFractions partial_fraction_split(const UnfoldParams& u);

} // namespace heun
