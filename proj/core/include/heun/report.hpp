#pragma once

#include "heun/complex.hpp"

#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace heun {

enum class Verdict { pass, fail, inconclusive };

std::string_view to_string(Verdict v);

struct NamedColumn {
    std::string name;
    std::vector<Complex> values;
};

// An eps-sequence of invariant values with its extrapolated limit.
struct SweepReport {
    std::string check;
    std::string parameter;
    std::vector<double> eps_values;  // strictly decreasing
    std::vector<Complex> values;
    Complex extrapolated{};
    Complex target{};
    double tolerance = 0.0;
    double empirical_order = 0.0;
    double expected_order = 0.0;  // 0 when no order is asserted
    bool extrapolation_fallback = false;
    Verdict verdict = Verdict::inconclusive;
    std::vector<NamedColumn> extra_columns;
    std::vector<std::pair<std::string, double>> diagnostics;
    std::vector<std::string> notes;

    double error() const { return std::abs(extrapolated - target); }
};

// Compact JSON object for one report.
std::string to_json(const SweepReport& r, int indent = -1);

// Header "eps,re,im,abs_err" followed by one row per sweep point.
std::string to_csv(const SweepReport& r);

} // namespace heun
