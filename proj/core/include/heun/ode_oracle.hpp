#pragma once

#include "heun/dche_model.hpp"
#include "heun/path.hpp"
#include "heun/quadrature.hpp"
#include "heun/report.hpp"
#include "heun/unfold_model.hpp"

#include <functional>
#include <optional>
#include <span>
#include <vector>

namespace heun {

// (slope z + offset)^exponent.
struct PowerFactor {
    Complex slope;
    Complex offset;
    Complex exponent;

    Complex branch_point() const { return -offset / slope; }
};

// exp(log_regular(z)) * Prod_j (slope_j z + offset_j)^exponent_j, branches continued along a path.
class BranchedIntegrand {
public:
    BranchedIntegrand(std::vector<PowerFactor> factors, std::function<Complex(Complex)> log_regular,
                      std::vector<Complex> extra_singular_points = {});

    const std::vector<PowerFactor>& factors() const { return factors_; }
    // Factors with non-integer exponent; only these need a tracked argument.
    const std::vector<std::size_t>& tracked() const { return tracked_; }
    std::vector<Complex> singular_points() const;

    // args[i] is the continued argument of factor tracked()[i] at z.
    Complex operator()(Complex z, std::span<const double> args) const;
    // Principal branch of every factor.
    Complex principal(Complex z) const;

private:
    std::vector<PowerFactor> factors_;
    std::vector<std::size_t> tracked_;
    std::function<Complex(Complex)> log_regular_;
    std::vector<Complex> extra_;
};

// Continuous arguments of the tracked factors along a path. The seed is the
// argument at the path start; by default the principal one.
class BranchTracker {
public:
    BranchTracker(const ComplexPath& path, const BranchedIntegrand& f,
                  std::optional<std::vector<double>> seed = std::nullopt);

    void args_at(std::size_t piece, double t, std::span<double> out) const;
    const std::vector<double>& start_args() const { return start_; }
    const std::vector<double>& end_args() const { return end_; }

private:
    struct Table {
        std::vector<double> t;
        std::vector<double> args;  // row-major, tracked count per sample
    };
    const ComplexPath* path_;
    const BranchedIntegrand* f_;
    std::vector<Table> tables_;
    std::vector<double> start_;
    std::vector<double> end_;
};

struct PathIntegral {
    QuadratureResult quad;
    Complex start_value;  // integrand at the path start
    Complex end_value;    // continued integrand at the path end
};

// Integral of f along the path with continued branches. Throws PreconditionError
// when a singular point lies within 1e-3 * path scale of the path.
PathIntegral integrate_along_path(const BranchedIntegrand& f, const ComplexPath& path,
                                  const QuadratureConfig& cfg = {},
                                  std::optional<std::vector<double>> seed = std::nullopt);

// Single-valued integrand.
QuadratureResult integrate_along_path(const std::function<Complex(Complex)>& f,
                                      const ComplexPath& path, const QuadratureConfig& cfg = {});

// z^(-alpha) e^(-beta/z) e^(gamma z); arg z is taken congruent to Arg z and nearest branch_angle.
Complex w2prime_dche(const DcheParams& p, Complex z, double branch_angle = 0.0);

// Unfolded integrand. near_args, when given, holds reference arguments of
// (z - s), (z + s), (1 + s z), (1 - s z); each is taken nearest its reference.
Complex w2prime_unfolded(const UnfoldParams& u, Complex z, std::span<const double> near_args = {});

BranchedIntegrand dche_integrand(const DcheParams& p);
BranchedIntegrand unfolded_integrand(const UnfoldParams& u);

// (1/2 pi i) times the integral over a ccw circle. The radius is shrunk to half the
// distance to the nearest other singular point. Throws BranchPointError when the
// integrand does not return to its start value after one turn.
Complex residue_via_contour(const BranchedIntegrand& f, Complex center, double radius,
                            const QuadratureConfig& cfg = {});
Complex residue_via_contour(const std::function<Complex(Complex)>& f, Complex center, double radius,
                            const QuadratureConfig& cfg = {});

// Circle |z| = 1, back along the real axis, then a cw circle around x_R. Under res2
// the integral over it is 2 pi i res(w2', x_L) with the branch reached from Im z > 0.
ComplexPath left_keyhole_path(const UnfoldParams& u);
Complex residue_left_keyhole(const UnfoldParams& u, const QuadratureConfig& cfg = {});

struct LoopMonodromy {
    Matrix2C matrix;
    Complex delta;  // integral of w2' around the loop
    Complex m22;    // factor picked up by w2'
    QuadratureResult quad;
};

// Continuation of [[1, w2], [0, w2']] around a closed loop starting at base (res1).
LoopMonodromy numeric_monodromy_loop(const UnfoldParams& u, const ComplexPath& loop, Complex base,
                                     const QuadratureConfig& cfg = {});

// Prescribed base points: 1 (beta = 0) or 0 (beta > 0); unfolded 1 + sqrt eps or sqrt eps.
Complex base_point(const DcheParams& p);
Complex base_point(const UnfoldParams& u);

// Radial segment from the base point to |x| on the positive axis, then an arc to x.
ComplexPath default_path_to(Complex base, Complex x);

Complex w2_value(const DcheParams& p, Complex x, const ComplexPath& path, const QuadratureConfig& cfg = {});
Complex w2_value(const UnfoldParams& u, Complex x, const ComplexPath& path, const QuadratureConfig& cfg = {});

// max over samples of |w2(x, eps) - w2(x, 0)| for each eps, with the fitted order in eps.
SweepReport convergence_probe(const DcheParams& p, std::span<const double> eps_list,
                              std::span<const Complex> sample_points, double min_order = 0.5,
                              const QuadratureConfig& cfg = {});

} // namespace heun
