#include "heun/report.hpp"

#include <nlohmann/json.hpp>

#include <cmath>
#include <cstdio>

namespace heun {

std::string_view to_string(Verdict v)
{
    switch (v) {
    case Verdict::pass: return "pass";
    case Verdict::fail: return "fail";
    case Verdict::inconclusive: return "inconclusive";
    }
    return "?";
}

namespace {

using json = nlohmann::ordered_json;

json cj(Complex z) { return json{{"re", z.real()}, {"im", z.imag()}}; }

json number(double x)
{
    if (!std::isfinite(x)) return nullptr;
    return x;
}

std::string fmt(double x)
{
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.17g", x);
    return buf;
}

} // namespace

std::string to_json(const SweepReport& r, int indent)
{
    json j;
    j["check"] = r.check;
    j["parameter"] = r.parameter;
    j["verdict"] = std::string(to_string(r.verdict));
    j["target"] = cj(r.target);
    j["extrapolated"] = cj(r.extrapolated);
    j["abs_error"] = number(r.error());
    j["tolerance"] = number(r.tolerance);
    j["empirical_order"] = number(r.empirical_order);
    if (r.expected_order != 0.0) j["expected_order"] = r.expected_order;
    j["extrapolation_fallback"] = r.extrapolation_fallback;
    json rows = json::array();
    for (std::size_t i = 0; i < r.values.size(); ++i) {
        json row;
        row["eps"] = r.eps_values[i];
        row["value"] = cj(r.values[i]);
        row["abs_err"] = std::abs(r.values[i] - r.target);
        for (const auto& col : r.extra_columns) row[col.name] = cj(col.values[i]);
        rows.push_back(row);
    }
    j["sweep"] = rows;
    json diag = json::object();
    for (const auto& [k, v] : r.diagnostics) diag[k] = number(v);
    j["diagnostics"] = diag;
    j["notes"] = r.notes;
    return j.dump(indent);
}

std::string to_csv(const SweepReport& r)
{
    std::string out = "eps,re,im,abs_err\n";
    for (std::size_t i = 0; i < r.values.size(); ++i) {
        out += fmt(r.eps_values[i]) + ',' + fmt(r.values[i].real()) + ',' + fmt(r.values[i].imag()) + ',' +
               fmt(std::abs(r.values[i] - r.target)) + '\n';
    }
    return out;
}

} // namespace heun
