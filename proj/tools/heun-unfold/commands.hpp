#pragma once

#include "heun/report.hpp"

#include <nlohmann/json.hpp>

#include <cstdint>
#include <optional>
#include <string>

namespace heun::cli {

using Json = nlohmann::ordered_json;

struct RunConfig {
    std::string command;
    std::string check;

    std::optional<std::string> alpha;
    std::optional<std::string> gamma;
    double beta = 0.0;
    std::optional<double> sqrt_eps;
    std::optional<long> m;
    std::optional<std::string> eps_range;
    std::optional<std::string> m_range;

    double tol_residue = 1e-8;
    double tol_monodromy = 1e-6;
    double tol_composite = 1e-8;
    double tol_limit = 1e-4;
    double tol_jump = 1e-6;
    double order_slack = 0.2;
    double quad_rel_tol = 1e-12;
    int quad_max_depth = 40;

    std::optional<std::string> x;
    double theta = 0.0;
    std::string lateral = "none";
    double delta = 0.05;
    long n_terms = 10;
    double radius = 0.5;

    std::string output = "json";
    std::optional<std::string> out_path;
    std::uint64_t seed = 0;
};

struct CommandOutput {
    Json doc;
    std::optional<std::string> csv;  // sweep table, when the command produces one
    Verdict verdict = Verdict::pass;
};

CommandOutput cmd_classify(const RunConfig& cfg);
CommandOutput cmd_invariants(const RunConfig& cfg);
CommandOutput cmd_unfold(const RunConfig& cfg);
CommandOutput cmd_limits(const RunConfig& cfg);
CommandOutput cmd_oracle(const RunConfig& cfg);
CommandOutput cmd_resum(const RunConfig& cfg);
CommandOutput cmd_appendix(const RunConfig& cfg);

} // namespace heun::cli
