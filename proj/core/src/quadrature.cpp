#include "heun/quadrature.hpp"

#include "heun/error.hpp"

#include <array>
#include <cmath>
#include <limits>
#include <queue>
#include <vector>

namespace heun {

void QuadratureConfig::validate() const
{
    require(rel_tol >= 1e-14, "quadrature rel_tol must be >= 1e-14");
    require(abs_tol >= 0.0, "quadrature abs_tol must be >= 0");
    require(max_depth >= 1 && max_depth <= 60, "quadrature max_depth must lie in [1, 60]");
    require(initial_panels >= 1, "quadrature needs at least one initial panel");
}

namespace {

constexpr std::array<double, 8> xgk = {
    0.991455371120812639206854697526329, 0.949107912342758524526189684047851,
    0.864864423359769072789712788640926, 0.741531185599394439863864773280788,
    0.586087235467691130294144845693013, 0.405845151377397166906606412076961,
    0.207784955007898467600689403773245, 0.0};
constexpr std::array<double, 8> wgk = {
    0.022935322010529224963732008058970, 0.063092092629978553290700663189204,
    0.104790010322250183839876322541518, 0.140653259715525918745189590510238,
    0.169004726639267902826583426598550, 0.190350578064785409913256402421014,
    0.204432940075298892414161999234649, 0.209482141084727828012999174891714};
constexpr std::array<double, 4> wg = {
    0.129484966168869693270611432679082, 0.279705391489276667901467771423780,
    0.381830050505118944950369775488975, 0.417959183673469387755102040816327};

struct Panel {
    double a;
    double b;
    Complex value;
    double error;
    int depth;
    bool roundoff_limited;
    bool operator<(const Panel& o) const { return error < o.error; }
};

Panel gauss_kronrod(const std::function<Complex(double)>& f, double a, double b, int depth)
{
    const double c = 0.5 * (a + b);
    const double h = 0.5 * (b - a);
    const Complex fc = f(c);
    Complex kronrod = wgk[7] * fc;
    Complex gauss = wg[3] * fc;
    double resabs = wgk[7] * std::abs(fc);
    for (int j = 0; j < 7; ++j) {
        const double dx = h * xgk[static_cast<std::size_t>(j)];
        const Complex lo = f(c - dx);
        const Complex hi = f(c + dx);
        kronrod += wgk[static_cast<std::size_t>(j)] * (lo + hi);
        resabs += wgk[static_cast<std::size_t>(j)] * (std::abs(lo) + std::abs(hi));
        if (j % 2 == 1) gauss += wg[static_cast<std::size_t>(j / 2)] * (lo + hi);
    }
    kronrod *= h;
    gauss *= h;
    // Below this floor the Gauss/Kronrod difference is rounding noise.
    const double floor = 50.0 * std::numeric_limits<double>::epsilon() * std::abs(h) * resabs;
    const double diff = std::abs(kronrod - gauss);
    return {a, b, kronrod, std::max(diff, floor), depth, diff <= floor};
}

} // namespace

QuadratureResult integrate_interval(const std::function<Complex(double)>& f, double a, double b,
                                    const QuadratureConfig& cfg)
{
    cfg.validate();
    if (a == b) return {};
    if (cfg.endpoint_singularity_handling == EndpointHandling::algebraic_weakening) {
        const double w = b - a;
        QuadratureConfig inner = cfg;
        inner.endpoint_singularity_handling = EndpointHandling::none;
        return integrate_interval(
            [&](double u) { return f(a + w * u * u) * (2.0 * w * u); }, 0.0, 1.0, inner);
    }

    std::priority_queue<Panel> heap;
    std::vector<Panel> frozen;
    QuadratureResult result;
    Complex total{0.0, 0.0};
    double total_error = 0.0;
    const double w = (b - a) / cfg.initial_panels;
    for (int i = 0; i < cfg.initial_panels; ++i) {
        const double lo = a + w * i;
        const double hi = (i + 1 == cfg.initial_panels) ? b : a + w * (i + 1);
        Panel p = gauss_kronrod(f, lo, hi, 0);
        total += p.value;
        total_error += p.error;
        heap.push(p);
    }
    result.evaluations = 15L * cfg.initial_panels;

    constexpr std::size_t panel_cap = 200000;
    bool converged = false;
    double limited_error = 0.0;  // error held by panels at the rounding floor
    while (true) {
        const double target = std::max(cfg.abs_tol, cfg.rel_tol * std::abs(total));
        if (total_error <= target) {
            converged = true;
            break;
        }
        if (heap.empty()) {
            // Only rounding-limited panels remain: nothing more can be gained.
            converged = total_error - limited_error <= target;
            break;
        }
        if (heap.size() + frozen.size() >= panel_cap) break;
        Panel worst = heap.top();
        heap.pop();
        if (worst.roundoff_limited) {
            limited_error += worst.error;
            frozen.push_back(worst);
            continue;
        }
        if (worst.depth >= cfg.max_depth) {
            frozen.push_back(worst);
            continue;
        }
        const double mid = 0.5 * (worst.a + worst.b);
        Panel left = gauss_kronrod(f, worst.a, mid, worst.depth + 1);
        Panel right = gauss_kronrod(f, mid, worst.b, worst.depth + 1);
        result.evaluations += 30;
        total += left.value + right.value - worst.value;
        total_error += left.error + right.error - worst.error;
        heap.push(left);
        heap.push(right);
    }

    Complex sum{0.0, 0.0};
    double err = 0.0;
    for (const auto& p : frozen) {
        sum += p.value;
        err += p.error;
    }
    while (!heap.empty()) {
        sum += heap.top().value;
        err += heap.top().error;
        heap.pop();
    }
    result.value = sum;
    result.error = err;
    result.converged = converged;
    return result;
}

} // namespace heun
