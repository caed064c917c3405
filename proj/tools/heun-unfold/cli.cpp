#include "cli.hpp"

#include "commands.hpp"

#include "heun/error.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <charconv>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <functional>
#include <ostream>
#include <sstream>

namespace heun::cli {

namespace {

double to_double(std::string_view s, std::string_view what)
{
    double v = 0.0;
    const char* end = s.data() + s.size();
    auto [ptr, ec] = std::from_chars(s.data(), end, v);
    if (ec != std::errc{} || ptr != end || s.empty())
        throw PreconditionError("cannot parse " + std::string(what) + " '" + std::string(s) + "'");
    return v;
}

std::vector<std::string_view> split(std::string_view s, char sep)
{
    std::vector<std::string_view> out;
    std::size_t start = 0;
    while (true) {
        const std::size_t pos = s.find(sep, start);
        out.push_back(s.substr(start, pos - start));
        if (pos == std::string_view::npos) break;
        start = pos + 1;
    }
    return out;
}

} // namespace

Complex parse_complex(std::string_view text)
{
    std::string s;
    for (char ch : text)
        if (ch != ' ') s += ch;
    if (s.empty()) throw PreconditionError("empty complex number");
    if (s.back() != 'i' && s.back() != 'j') return {to_double(s, "number"), 0.0};

    s.pop_back();
    // Split at the last sign that is not a leading sign or part of an exponent.
    std::size_t cut = std::string::npos;
    for (std::size_t k = s.size(); k-- > 1;) {
        if ((s[k] == '+' || s[k] == '-') && s[k - 1] != 'e' && s[k - 1] != 'E') {
            cut = k;
            break;
        }
    }
    const std::string re = cut == std::string::npos ? "" : s.substr(0, cut);
    std::string im = cut == std::string::npos ? s : s.substr(cut);
    if (im.empty() || im == "+") im = "1";
    else if (im == "-") im = "-1";
    if (im.front() == '+') im.erase(0, 1);
    return {re.empty() ? 0.0 : to_double(re, "real part"), to_double(im, "imaginary part")};
}

std::vector<double> parse_eps_range(std::string_view text)
{
    std::vector<double> out;
    if (text.find(':') != std::string_view::npos) {
        const auto parts = split(text, ':');
        require(parts.size() == 2, "eps range must be 'hi:lo'");
        const double hi = to_double(parts[0], "eps");
        const double lo = to_double(parts[1], "eps");
        require(hi > 0.0 && lo > 0.0 && lo < hi, "eps range needs 0 < lo < hi");
        const int steps = static_cast<int>(std::lround(std::log10(hi / lo)));
        for (int k = 0; k <= steps; ++k) out.push_back(hi * std::pow(10.0, -k));
    } else {
        for (auto part : split(text, ',')) out.push_back(to_double(part, "eps"));
    }
    for (double e : out) require(e > 0.0 && e < 1.0, "eps values must lie in (0, 1)");
    for (std::size_t k = 1; k < out.size(); ++k) require(out[k] < out[k - 1], "eps values must decrease");
    return out;
}

std::vector<long> parse_m_range(std::string_view text)
{
    auto to_long = [](std::string_view s) {
        const double v = to_double(s, "m");
        require(v >= 1.0 && v == std::floor(v), "m values must be natural numbers");
        return static_cast<long>(v);
    };
    std::vector<long> out;
    if (text.find(':') != std::string_view::npos) {
        const auto parts = split(text, ':');
        require(parts.size() == 2, "m range must be 'lo:hi'");
        const long lo = to_long(parts[0]);
        const long hi = to_long(parts[1]);
        require(lo <= hi, "m range needs lo <= hi");
        for (long m = lo; m <= hi; m *= 2) out.push_back(m);
    } else {
        for (auto part : split(text, ',')) out.push_back(to_long(part));
    }
    return out;
}

namespace {

std::string fmt(double x)
{
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.12g", x);
    return buf;
}

bool is_complex(const Json& j)
{
    return j.is_object() && j.size() == 2 && j.contains("re") && j.contains("im");
}

std::string pretty_complex(const Json& j)
{
    const double re = j["re"].is_number() ? j["re"].get<double>() : NAN;
    const double im = j["im"].is_number() ? j["im"].get<double>() : NAN;
    const double mod = std::hypot(re, im);
    if (im != 0.0 && std::abs(re) <= 1e-15 * mod) {
        // Symbolic 2πi form only when the cofactor is a short decimal.
        const double v = im / (2.0 * pi);
        if (std::abs(v - std::round(v * 1e6) / 1e6) <= 1e-12 * std::max(1.0, std::abs(v))) return "2πi·" + fmt(v);
    }
    if (im == 0.0) return fmt(re);
    return fmt(re) + (im < 0 ? "-" : "+") + fmt(std::abs(im)) + "i";
}

void pretty(const Json& j, std::ostream& os, int depth)
{
    const std::string pad(2 * static_cast<std::size_t>(depth), ' ');
    if (j.is_object()) {
        for (const auto& [k, v] : j.items()) {
            if (is_complex(v)) {
                os << pad << k << ": " << pretty_complex(v) << '\n';
            } else if (v.is_object() || (v.is_array() && !v.empty() && (v[0].is_object() || v[0].is_array()))) {
                os << pad << k << ":\n";
                pretty(v, os, depth + 1);
            } else if (v.is_array()) {
                os << pad << k << ": [";
                for (std::size_t i = 0; i < v.size(); ++i) os << (i ? ", " : "") << v[i].dump();
                os << "]\n";
            } else {
                os << pad << k << ": " << (v.is_string() ? v.get<std::string>() : v.dump()) << '\n';
            }
        }
    } else if (j.is_array()) {
        for (const auto& v : j) {
            if (is_complex(v)) {
                os << pad << "- " << pretty_complex(v) << '\n';
            } else if (v.is_array() && !v.empty() && std::all_of(v.begin(), v.end(), is_complex)) {
                os << pad << "- [";
                for (std::size_t i = 0; i < v.size(); ++i) os << (i ? ", " : "") << pretty_complex(v[i]);
                os << "]\n";
            } else {
                os << pad << "-\n";
                pretty(v, os, depth + 1);
            }
        }
    } else {
        os << pad << j.dump() << '\n';
    }
}

void add_params(CLI::App* sc, RunConfig& c, bool gamma_required = true)
{
    sc->add_option("--alpha", c.alpha, "alpha, complex as a+bi")->required();
    auto* g = sc->add_option("--gamma", c.gamma, "gamma, complex as a+bi");
    if (gamma_required) g->required();
    sc->add_option("--beta", c.beta, "beta >= 0")->capture_default_str();
}

void add_point(CLI::App* sc, RunConfig& c)
{
    auto* se = sc->add_option("--sqrt-eps", c.sqrt_eps, "unfolding parameter sqrt(eps) in (0, 1)");
    auto* m = sc->add_option("--m", c.m, "resonant index m (res2 point along the resonant sequence)");
    se->excludes(m);
}

void add_output(CLI::App* sc, RunConfig& c)
{
    sc->add_option("--output", c.output, "json, csv or pretty")
        ->check(CLI::IsMember({"json", "csv", "pretty"}))
        ->capture_default_str();
    sc->add_option("--out", c.out_path, "write to PATH instead of stdout");
    sc->add_option("--seed", c.seed, "seed for randomized sampling")->capture_default_str();
}

void add_tolerances(CLI::App* sc, RunConfig& c)
{
    sc->add_option("--tol-residue", c.tol_residue, "relative tolerance for residues")->capture_default_str();
    sc->add_option("--tol-monodromy", c.tol_monodromy, "entrywise tolerance for loop monodromies")
        ->capture_default_str();
    sc->add_option("--tol-composite", c.tol_composite, "composite loop vs product of loops")->capture_default_str();
    sc->add_option("--tol-limit", c.tol_limit, "limit verdicts, relative to 1+|target|")->capture_default_str();
    sc->add_option("--tol-jump", c.tol_jump, "Stokes jump vs series value, relative")->capture_default_str();
    sc->add_option("--order-slack", c.order_slack, "relative slack on the divergence order")->capture_default_str();
    sc->add_option("--quad-rel-tol", c.quad_rel_tol, "quadrature relative tolerance")->capture_default_str();
    sc->add_option("--quad-max-depth", c.quad_max_depth, "quadrature bisection depth limit")->capture_default_str();
}

void add_ranges(CLI::App* sc, RunConfig& c)
{
    sc->add_option("--eps-range", c.eps_range, "eps list 'a,b,...' or decades 'hi:lo'");
    sc->add_option("--m-range", c.m_range, "m list 'a,b,...' or doublings 'lo:hi'");
}

int emit(const CommandOutput& res, const RunConfig& cfg, std::ostream& out, std::ostream& err)
{
    std::string text;
    if (cfg.output == "csv") {
        if (!res.csv) {
            err << "error: csv output is available for sweep reports only\n";
            return exit_validation;
        }
        text = *res.csv;
    } else if (cfg.output == "pretty") {
        std::ostringstream os;
        pretty(res.doc, os, 0);
        text = os.str();
    } else {
        text = res.doc.dump(2) + "\n";
    }
    if (cfg.out_path) {
        std::ofstream f(*cfg.out_path, std::ios::binary);
        if (!f) {
            err << "error: cannot open " << *cfg.out_path << '\n';
            return exit_validation;
        }
        f << text;
    } else {
        out << text;
    }
    return res.verdict == Verdict::fail ? exit_verdict : exit_ok;
}

} // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err)
{
    CLI::App app{"Reducible double confluent Heun equation: invariants, unfolding limits and oracles",
                 "heun-unfold"};
    app.require_subcommand(1);
    RunConfig cfg;

    auto* classify = app.add_subcommand("classify", "alpha class, origin type, resonance and singular points");
    add_params(classify, cfg, false);
    add_point(classify, cfg);
    add_output(classify, cfg);

    auto* invariants = app.add_subcommand("invariants", "lambda, M0, S/W/Q, entire-solution test, mu");
    add_params(invariants, cfg);
    add_output(invariants, cfg);

    auto* unfold = app.add_subcommand("unfold", "unfolded residues, monodromies and Stokes data at one point");
    add_params(unfold, cfg);
    add_point(unfold, cfg);
    add_output(unfold, cfg);

    auto* limits = app.add_subcommand("limits", "eps -> 0 sweeps with extrapolation");
    limits->add_option("check", cfg.check, "sum-limit | divergence-sign | dL-limit | stokes-limit | monodromy-limit | eps-series")
        ->required()
        ->check(CLI::IsMember(
            {"sum-limit", "divergence-sign", "dL-limit", "stokes-limit", "monodromy-limit", "eps-series"}));
    limits->add_option("--alpha", cfg.alpha, "alpha, complex as a+bi");
    limits->add_option("--gamma", cfg.gamma, "gamma, complex as a+bi")->required();
    limits->add_option("--beta", cfg.beta, "beta >= 0")->capture_default_str();
    add_ranges(limits, cfg);
    add_tolerances(limits, cfg);
    add_output(limits, cfg);

    auto* oracle = app.add_subcommand("oracle", "closed forms against contour and loop quadrature");
    oracle->add_option("check", cfg.check, "residue | monodromy | probe | cauchy")
        ->required()
        ->check(CLI::IsMember({"residue", "monodromy", "probe", "cauchy"}));
    oracle->add_option("--alpha", cfg.alpha, "alpha, complex as a+bi");
    oracle->add_option("--gamma", cfg.gamma, "gamma, complex as a+bi");
    oracle->add_option("--beta", cfg.beta, "beta >= 0")->capture_default_str();
    oracle->add_option("--radius", cfg.radius, "sample radius for the convergence probe")->capture_default_str();
    add_point(oracle, cfg);
    add_ranges(oracle, cfg);
    add_tolerances(oracle, cfg);
    add_output(oracle, cfg);

    auto* resum = app.add_subcommand("resum", "formal series, Laplace sums and the Stokes jump");
    resum->add_option("check", cfg.check, "jump | laplace | formal | gevrey")
        ->required()
        ->check(CLI::IsMember({"jump", "laplace", "formal", "gevrey"}));
    add_params(resum, cfg);
    resum->add_option("--x", cfg.x, "evaluation point, complex as a+bi");
    resum->add_option("--theta", cfg.theta, "ray direction in (-pi, pi]")->capture_default_str();
    resum->add_option("--lateral", cfg.lateral, "none, plus or minus (theta = pi)")->capture_default_str();
    resum->add_option("--delta", cfg.delta, "lateral offset in (0, 0.2]")->capture_default_str();
    resum->add_option("--n", cfg.n_terms, "number of formal coefficients")->capture_default_str();
    add_tolerances(resum, cfg);
    add_output(resum, cfg);

    auto* appendix = app.add_subcommand("appendix", "limits and sign table for alpha = 2, 4, 6 at beta = 0");
    appendix->add_option("--gamma", cfg.gamma, "gamma, complex as a+bi (default 1.5)");
    add_ranges(appendix, cfg);
    add_tolerances(appendix, cfg);
    add_output(appendix, cfg);

    std::vector<std::string> reversed(args.rbegin(), args.rend());
    try {
        app.parse(reversed);
    } catch (const CLI::CallForHelp&) {
        out << (app.get_subcommands().empty() ? app.help() : app.get_subcommands().front()->help());
        return exit_ok;
    } catch (const CLI::ParseError& e) {
        err << "error: " << e.what() << "\n\n";
        const auto subs = app.get_subcommands();
        err << (subs.empty() ? app.help() : subs.front()->help());
        return exit_validation;
    }

    const std::vector<std::pair<CLI::App*, std::function<CommandOutput(const RunConfig&)>>> table{
        {classify, cmd_classify}, {invariants, cmd_invariants}, {unfold, cmd_unfold}, {limits, cmd_limits},
        {oracle, cmd_oracle},     {resum, cmd_resum},           {appendix, cmd_appendix}};

    try {
        for (const auto& [sc, fn] : table) {
            if (!sc->parsed()) continue;
            cfg.command = sc->get_name();
            return emit(fn(cfg), cfg, out, err);
        }
    } catch (const PreconditionError& e) {
        err << "error: " << e.what() << '\n';
        return exit_validation;
    } catch (const NumericError& e) {
        err << "numeric failure: " << e.what() << '\n';
        return exit_numeric;
    } catch (const Error& e) {
        err << "error: " << e.what() << '\n';
        return exit_numeric;
    }
    return exit_validation;
}

} // namespace heun::cli
