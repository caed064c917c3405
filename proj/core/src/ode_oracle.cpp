#include "heun/ode_oracle.hpp"

#include "heun/error.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <limits>

namespace heun {

namespace {

constexpr std::size_t max_tracked = 8;

double nearest_congruent(double principal, double reference)
{
    return principal + 2.0 * pi * std::round((reference - principal) / (2.0 * pi));
}

Complex linear(const PowerFactor& f, Complex z) { return f.slope * z + f.offset; }

} // namespace

BranchedIntegrand::BranchedIntegrand(std::vector<PowerFactor> factors,
                                     std::function<Complex(Complex)> log_regular,
                                     std::vector<Complex> extra_singular_points)
    : factors_(std::move(factors)), log_regular_(std::move(log_regular)),
      extra_(std::move(extra_singular_points))
{
    for (std::size_t i = 0; i < factors_.size(); ++i) {
        require(factors_[i].slope != Complex{0.0, 0.0}, "power factor needs a non-zero slope");
        if (!as_integer(factors_[i].exponent)) tracked_.push_back(i);
    }
    require(tracked_.size() <= max_tracked, "too many multivalued factors");
}

std::vector<Complex> BranchedIntegrand::singular_points() const
{
    std::vector<Complex> pts = extra_;
    for (const auto& f : factors_) {
        if (f.exponent == Complex{0.0, 0.0}) continue;
        pts.push_back(f.branch_point());
    }
    return pts;
}

Complex BranchedIntegrand::operator()(Complex z, std::span<const double> args) const
{
    Complex log_total = log_regular_ ? log_regular_(z) : Complex{0.0, 0.0};
    std::size_t next = 0;
    for (std::size_t i = 0; i < factors_.size(); ++i) {
        const auto& f = factors_[i];
        if (f.exponent == Complex{0.0, 0.0}) {
            if (next < tracked_.size() && tracked_[next] == i) ++next;
            continue;
        }
        const Complex l = linear(f, z);
        if (next < tracked_.size() && tracked_[next] == i) {
            log_total += f.exponent * Complex{std::log(std::abs(l)), args[next]};
            ++next;
        } else {
            log_total += f.exponent * std::log(l);
        }
    }
    return std::exp(log_total);
}

Complex BranchedIntegrand::principal(Complex z) const
{
    std::array<double, max_tracked> args{};
    for (std::size_t k = 0; k < tracked_.size(); ++k) args[k] = std::arg(linear(factors_[tracked_[k]], z));
    return (*this)(z, std::span<const double>(args.data(), tracked_.size()));
}

BranchTracker::BranchTracker(const ComplexPath& path, const BranchedIntegrand& f,
                             std::optional<std::vector<double>> seed)
    : path_(&path), f_(&f)
{
    const auto& tracked = f.tracked();
    const std::size_t n = tracked.size();
    const Complex z0 = path.start();
    if (seed) {
        require(seed->size() == n, "branch seed size must match the multivalued factors");
        start_ = *seed;
    } else {
        for (auto idx : tracked) {
            const Complex l = linear(f.factors()[idx], z0);
            require(l != Complex{0.0, 0.0}, "path starts at a branch point");
            start_.push_back(std::arg(l));
        }
    }

    std::vector<double> current = start_;
    for (const auto& piece : path.pieces()) {
        Table table;
        table.t.push_back(0.0);
        table.args.insert(table.args.end(), current.begin(), current.end());
        if (n > 0) {
            // Refine each of 16 coarse intervals until the argument change per
            // step is small and steps stay short relative to branch-point distance.
            struct Job {
                double t0, t1;
                int depth;
            };
            std::vector<Job> stack;
            constexpr int coarse = 16;
            for (int i = coarse; i-- > 0;)
                stack.push_back({static_cast<double>(i) / coarse, static_cast<double>(i + 1) / coarse, 0});
            while (!stack.empty()) {
                const Job job = stack.back();
                stack.pop_back();
                const Complex za = point_at(piece, job.t0);
                const Complex zb = point_at(piece, job.t1);
                const std::size_t row = table.t.size() - 1;
                bool ok = true;
                std::vector<double> next(n);
                for (std::size_t k = 0; k < n; ++k) {
                    const auto& fac = f.factors()[tracked[k]];
                    const Complex la = linear(fac, za);
                    const Complex lb = linear(fac, zb);
                    if (lb == Complex{0.0, 0.0} || la == Complex{0.0, 0.0})
                        throw PreconditionError("path passes through a branch point");
                    const double step = std::arg(lb / la);
                    const double reach = 0.5 * std::min(std::abs(la), std::abs(lb)) / std::abs(fac.slope);
                    if (std::abs(step) > pi / 4 || std::abs(zb - za) > reach) ok = false;
                    next[k] = table.args[row * n + k] + step;
                }
                if (ok) {
                    table.t.push_back(job.t1);
                    table.args.insert(table.args.end(), next.begin(), next.end());
                } else {
                    if (job.depth > 50) throw NumericError("branch tracking failed to resolve the path");
                    const double tm = 0.5 * (job.t0 + job.t1);
                    stack.push_back({tm, job.t1, job.depth + 1});
                    stack.push_back({job.t0, tm, job.depth + 1});
                }
            }
            current.assign(table.args.end() - static_cast<std::ptrdiff_t>(n), table.args.end());
        }
        tables_.push_back(std::move(table));
    }
    end_ = current;
}

void BranchTracker::args_at(std::size_t piece, double t, std::span<double> out) const
{
    const auto& tracked = f_->tracked();
    const std::size_t n = tracked.size();
    if (n == 0) return;
    const Table& table = tables_[piece];
    auto it = std::upper_bound(table.t.begin(), table.t.end(), t);
    std::size_t row = it == table.t.begin() ? 0 : static_cast<std::size_t>(it - table.t.begin()) - 1;
    if (row + 1 >= table.t.size() && row > 0 && t < table.t[row]) --row;
    const Complex z_ref = point_at(path_->pieces()[piece], table.t[row]);
    const Complex z = point_at(path_->pieces()[piece], t);
    for (std::size_t k = 0; k < n; ++k) {
        const auto& fac = f_->factors()[tracked[k]];
        out[k] = table.args[row * n + k] + std::arg(linear(fac, z) / linear(fac, z_ref));
    }
}

namespace {

void check_clearance(const BranchedIntegrand& f, const ComplexPath& path)
{
    const double margin = 1e-3 * std::max(path.scale(), 1e-300);
    for (const auto& sp : f.singular_points()) {
        if (path.distance_to(sp) < margin)
            throw PreconditionError("singular point on or too close to the integration path");
    }
}

int panels_for(const PathPiece& piece, const QuadratureConfig& cfg)
{
    if (const auto* arc = std::get_if<CircularArc>(&piece))
        return std::max(cfg.initial_panels, static_cast<int>(std::ceil(64.0 * std::abs(arc->sweep) / (2.0 * pi))));
    return cfg.initial_panels;
}

} // namespace

PathIntegral integrate_along_path(const BranchedIntegrand& f, const ComplexPath& path,
                                  const QuadratureConfig& cfg, std::optional<std::vector<double>> seed)
{
    cfg.validate();
    check_clearance(f, path);
    const BranchTracker tracker(path, f, std::move(seed));
    const std::size_t n = f.tracked().size();
    PathIntegral out{};
    for (std::size_t i = 0; i < path.pieces().size(); ++i) {
        const auto& piece = path.pieces()[i];
        QuadratureConfig pc = cfg;
        pc.initial_panels = panels_for(piece, cfg);
        out.quad += integrate_interval(
            [&](double t) {
                std::array<double, max_tracked> args{};
                tracker.args_at(i, t, std::span<double>(args.data(), n));
                return f(point_at(piece, t), std::span<const double>(args.data(), n)) * tangent_at(piece, t);
            },
            0.0, 1.0, pc);
    }
    out.start_value = f(path.start(), tracker.start_args());
    out.end_value = f(path.end(), tracker.end_args());
    return out;
}

QuadratureResult integrate_along_path(const std::function<Complex(Complex)>& f, const ComplexPath& path,
                                      const QuadratureConfig& cfg)
{
    cfg.validate();
    QuadratureResult total;
    for (const auto& piece : path.pieces()) {
        QuadratureConfig pc = cfg;
        pc.initial_panels = panels_for(piece, cfg);
        total += integrate_interval([&](double t) { return f(point_at(piece, t)) * tangent_at(piece, t); },
                                    0.0, 1.0, pc);
    }
    return total;
}

Complex w2prime_dche(const DcheParams& p, Complex z, double branch_angle)
{
    require(z != Complex{0.0, 0.0}, "w2' of the DCHE is singular at z = 0");
    const double arg = nearest_congruent(std::arg(z), branch_angle);
    const Complex log_z{std::log(std::abs(z)), arg};
    return std::exp(-p.alpha() * log_z - p.beta() / z + p.gamma() * z);
}

BranchedIntegrand dche_integrand(const DcheParams& p)
{
    std::vector<Complex> extra;
    if (p.beta() > 0.0) extra.push_back({0.0, 0.0});
    const double beta = p.beta();
    const Complex gamma = p.gamma();
    return BranchedIntegrand({PowerFactor{{1.0, 0.0}, {0.0, 0.0}, -p.alpha()}},
                             [beta, gamma](Complex z) { return -beta / z + gamma * z; }, extra);
}

BranchedIntegrand unfolded_integrand(const UnfoldParams& u)
{
    const double s = u.sqrt_eps();
    const Complex c = u.ratio_exponent();
    return BranchedIntegrand({PowerFactor{{1.0, 0.0}, {-s, 0.0}, u.exponent_R()},
                              PowerFactor{{1.0, 0.0}, {s, 0.0}, u.exponent_L()},
                              PowerFactor{{s, 0.0}, {1.0, 0.0}, c},
                              PowerFactor{{-s, 0.0}, {1.0, 0.0}, -c}},
                             nullptr);
}

Complex w2prime_unfolded(const UnfoldParams& u, Complex z, std::span<const double> near_args)
{
    const auto sp = singular_points(u);
    for (double x : {sp.x_L, sp.x_R, sp.x_LL, sp.x_RR})
        require(z != Complex{x, 0.0}, "w2' of the unfolded equation is singular at z");
    require(near_args.empty() || near_args.size() == 4, "near_args needs four reference arguments");
    const BranchedIntegrand f = unfolded_integrand(u);
    std::array<double, max_tracked> args{};
    for (std::size_t k = 0; k < f.tracked().size(); ++k) {
        const std::size_t idx = f.tracked()[k];
        const double principal = std::arg(linear(f.factors()[idx], z));
        args[k] = near_args.empty() ? principal : nearest_congruent(principal, near_args[idx]);
    }
    return f(z, std::span<const double>(args.data(), f.tracked().size()));
}

Complex residue_via_contour(const BranchedIntegrand& f, Complex center, double radius,
                            const QuadratureConfig& cfg)
{
    require(radius > 0.0, "contour radius must be positive");
    double r = radius;
    for (const auto& sp : f.singular_points()) {
        const double d = std::abs(sp - center);
        if (d > 1e-12 * (1.0 + std::abs(center))) r = std::min(r, 0.5 * d);
    }
    QuadratureConfig pc = cfg;
    pc.initial_panels = std::max(cfg.initial_panels, 64);
    const auto circle = ComplexPath::circle(center, r);
    const PathIntegral res = integrate_along_path(f, circle, pc);
    const double tol = std::max(cfg.rel_tol, 1e-11);
    if (std::abs(res.end_value - res.start_value) > tol * std::abs(res.start_value))
        throw BranchPointError("integrand is not single-valued around the contour");
    if (!res.quad.converged) throw NumericError("contour quadrature did not reach tolerance");
    return res.quad.value / two_pi_i;
}

Complex residue_via_contour(const std::function<Complex(Complex)>& f, Complex center, double radius,
                            const QuadratureConfig& cfg)
{
    require(radius > 0.0, "contour radius must be positive");
    QuadratureConfig pc = cfg;
    pc.initial_panels = std::max(cfg.initial_panels, 64);
    const auto res = integrate_along_path(f, ComplexPath::circle(center, radius), pc);
    if (!res.converged) throw NumericError("contour quadrature did not reach tolerance");
    return res.value / two_pi_i;
}

ComplexPath left_keyhole_path(const UnfoldParams& u)
{
    const double s = u.sqrt_eps();
    const double r0 = std::min(s, 0.5 * (1.0 - s));
    const double a = s + r0;
    return ComplexPath::composite({ComplexPath::polyline({a, 1.0}),
                                   ComplexPath::circle(0.0, 1.0, 1, Orientation::ccw, 0.0),
                                   ComplexPath::polyline({1.0, a}),
                                   ComplexPath::circle(s, r0, 1, Orientation::cw, 0.0)});
}

Complex residue_left_keyhole(const UnfoldParams& u, const QuadratureConfig& cfg)
{
    require(u.resonance() == ResonanceCase::res2,
            "keyhole residue requires res2 (integer exponent at x_L)");
    const PathIntegral res = integrate_along_path(unfolded_integrand(u), left_keyhole_path(u), cfg);
    if (!res.quad.converged) throw NumericError("keyhole quadrature did not reach tolerance");
    return res.quad.value / two_pi_i;
}

LoopMonodromy numeric_monodromy_loop(const UnfoldParams& u, const ComplexPath& loop, Complex base,
                                     const QuadratureConfig& cfg)
{
    require(u.resonance() == ResonanceCase::res1, "res1 requires beta=0, alpha in 2N");
    require(loop.is_closed(1e-12), "monodromy loop must be closed");
    require(std::abs(loop.start() - base) <= 1e-12 * std::max(1.0, std::abs(base)),
            "loop must start at the base point");
    const PathIntegral res = integrate_along_path(unfolded_integrand(u), loop, cfg);
    if (!res.quad.converged) throw NumericError("loop quadrature did not reach tolerance");
    const Complex m22 = res.end_value / res.start_value;
    return {{{1.0, 0.0}, res.quad.value, {0.0, 0.0}, m22}, res.quad.value, m22, res.quad};
}

Complex base_point(const DcheParams& p) { return p.beta() > 0.0 ? Complex{0.0, 0.0} : Complex{1.0, 0.0}; }

Complex base_point(const UnfoldParams& u)
{
    const double s = u.sqrt_eps();
    return u.base().beta() > 0.0 ? Complex{s, 0.0} : Complex{1.0 + s, 0.0};
}

ComplexPath default_path_to(Complex base, Complex x)
{
    require(base.imag() == 0.0 && base.real() >= 0.0, "base point must lie on [0, inf)");
    const double r = std::abs(x);
    require(r > 0.0, "target point must be non-zero");
    const double theta = std::arg(x);
    std::vector<ComplexPath> parts;
    if (std::abs(base.real() - r) > 1e-15 * r) parts.push_back(ComplexPath::polyline({base, r}));
    if (theta != 0.0) parts.push_back(ComplexPath::arc(0.0, r, 0.0, theta));
    require(!parts.empty(), "target coincides with the base point");
    return ComplexPath::composite(parts);
}

namespace {

void check_endpoints(const ComplexPath& path, Complex base, Complex x)
{
    require(std::abs(path.start() - base) <= 1e-12 * std::max(1.0, std::abs(base)),
            "path must start at the prescribed base point");
    require(std::abs(path.end() - x) <= 1e-12 * std::max(1.0, std::abs(x)), "path must end at x");
}

// First piece leaving a beta > 0 base point along the positive real axis.
double radial_exit(const ComplexPath& path, Complex base)
{
    const auto* seg = std::get_if<LineSegment>(&path.pieces().front());
    require(seg != nullptr && seg->b.imag() == 0.0 && seg->b.real() > base.real(),
            "path must leave the base point along the positive real axis");
    return seg->b.real();
}

Complex integrate_checked(const BranchedIntegrand& f, const ComplexPath& path, const QuadratureConfig& cfg)
{
    const PathIntegral res = integrate_along_path(f, path, cfg);
    if (!res.quad.converged) throw NumericError("path quadrature did not reach tolerance");
    return res.quad.value;
}

} // namespace

Complex w2_value(const DcheParams& p, Complex x, const ComplexPath& path, const QuadratureConfig& cfg)
{
    const Complex base = base_point(p);
    if (x == base) return {0.0, 0.0};
    check_endpoints(path, base, x);
    const BranchedIntegrand f = dche_integrand(p);
    if (p.beta() == 0.0) return integrate_checked(f, path, cfg);

    // z = beta/t turns the essential singularity at 0 into exponential decay.
    const double b = radial_exit(path, base);
    const double beta = p.beta();
    const Complex alpha = p.alpha();
    const Complex gamma = p.gamma();
    auto g = [&](double t) {
        return std::exp(-alpha * std::log(beta / t) - t + gamma * beta / t) * (beta / (t * t));
    };
    const double t0 = beta / b;
    Complex head{0.0, 0.0};
    constexpr double width = 20.0;
    for (int k = 0; k < 200; ++k) {
        const double lo = t0 + width * k;
        const auto part = integrate_interval(g, lo, lo + width, cfg);
        if (!part.converged) throw NumericError("radial quadrature did not reach tolerance");
        head += part.value;
        if (k > 0 && lo > alpha.real() + 5.0 && std::abs(part.value) <= 1e-17 * std::abs(head)) break;
    }
    if (path.pieces().size() == 1) return head;
    return head + integrate_checked(f, path.tail(1), cfg);
}

Complex w2_value(const UnfoldParams& u, Complex x, const ComplexPath& path, const QuadratureConfig& cfg)
{
    const Complex base = base_point(u);
    if (x == base) return {0.0, 0.0};
    check_endpoints(path, base, x);
    const BranchedIntegrand f = unfolded_integrand(u);
    if (u.base().beta() == 0.0) return integrate_checked(f, path, cfg);

    const double b = radial_exit(path, base);
    require(b < 1.0 / u.sqrt_eps(), "radial exit must stay inside (sqrt eps, 1/sqrt eps)");
    require(u.exponent_R().real() > -1.0, "w2' is not integrable at the base point x_R");
    const double s = u.sqrt_eps();
    QuadratureConfig weak = cfg;
    weak.endpoint_singularity_handling = EndpointHandling::algebraic_weakening;
    const auto head = integrate_interval([&](double t) { return f.principal(s + (b - s) * t) * (b - s); },
                                         0.0, 1.0, weak);
    if (!head.converged) throw NumericError("radial quadrature did not reach tolerance");
    if (path.pieces().size() == 1) return head.value;
    return head.value + integrate_checked(f, path.tail(1), cfg);
}

SweepReport convergence_probe(const DcheParams& p, std::span<const double> eps_list,
                              std::span<const Complex> sample_points, double min_order,
                              const QuadratureConfig& cfg)
{
    require(!eps_list.empty(), "convergence probe needs at least one eps");
    require(!sample_points.empty(), "convergence probe needs sample points");
    for (std::size_t i = 1; i < eps_list.size(); ++i)
        require(eps_list[i] < eps_list[i - 1], "eps values must be strictly decreasing");

    std::vector<Complex> reference;
    for (auto x : sample_points) reference.push_back(w2_value(p, x, default_path_to(base_point(p), x), cfg));

    SweepReport rep;
    rep.check = "convergence-probe";
    rep.parameter = "max |w2(x,eps) - w2(x,0)|";
    rep.expected_order = min_order;
    for (double eps : eps_list) {
        require(eps > 0.0 && eps < 1.0, "eps must lie in (0, 1)");
        const UnfoldParams u(p, std::sqrt(eps));
        double worst = 0.0;
        for (std::size_t i = 0; i < sample_points.size(); ++i) {
            const Complex x = sample_points[i];
            const Complex w = w2_value(u, x, default_path_to(base_point(u), x), cfg);
            worst = std::max(worst, std::abs(w - reference[i]));
        }
        rep.eps_values.push_back(eps);
        rep.values.push_back({worst, 0.0});
    }

    // Least-squares slope of log(diff) against log(eps).
    const std::size_t n = rep.values.size();
    if (n >= 2) {
        double sx = 0, sy = 0, sxx = 0, sxy = 0;
        for (std::size_t i = 0; i < n; ++i) {
            const double lx = std::log(rep.eps_values[i]);
            const double ly = std::log(rep.values[i].real());
            sx += lx;
            sy += ly;
            sxx += lx * lx;
            sxy += lx * ly;
        }
        const double dn = static_cast<double>(n);
        rep.empirical_order = (dn * sxy - sx * sy) / (dn * sxx - sx * sx);
        bool decreasing = true;
        for (std::size_t i = 1; i < n; ++i) decreasing = decreasing && rep.values[i].real() < rep.values[i - 1].real();
        rep.verdict = (decreasing && rep.empirical_order >= min_order) ? Verdict::pass : Verdict::fail;
    } else {
        rep.empirical_order = std::numeric_limits<double>::quiet_NaN();
        rep.verdict = Verdict::inconclusive;
        rep.notes.push_back("a single eps gives no convergence order");
    }
    rep.extrapolated = 0.0;
    rep.target = 0.0;
    rep.tolerance = 0.0;
    rep.diagnostics.push_back({"samples", static_cast<double>(sample_points.size())});
    return rep;
}

} // namespace heun
