#pragma once

#include <optional>
#include <string>
#include <vector>

#include "treelim/curve.hpp"
#include "treelim/tree.hpp"
#include "treelim/valuation.hpp"

namespace treelim {

// Exit-code contract of the CLI.
enum ExitCode : int {
    kOk = 0,
    kInputError = 1,
    kNoBlowUp = 2,
    kEngineDisagreement = 3,
    kNonAdditiveMetric = 4,
};

struct InputError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct PipelineConfig {
    double tolerance = 1e-9;
    int samples_per_segment = 256;
    int ball_cap = 8;
    double drift_fraction = 0.25;
    int oracle_grid_points = 10000;
    int pmax = 4;

    static PipelineConfig from_environment();             // reads TREELIMITS_CONFIG
    static PipelineConfig from_json_text(const std::string& text);
    HyperbolicContext h3() const;
};

struct RunResult {
    int exit_code = kOk;
    std::string report_json;   // machine report (pretty-printed, deterministic)
    std::string text;          // human-readable table / summary
};

// Radius resolution: an explicit radius wins, then the spec's ball_radius,
// then 3.
int resolve_radius(const std::optional<int>& requested, const CurveSpec& spec);

// limitlen: full three-engine run with cross-checks and a written report.
RunResult run_limit_report(const std::string& spec_path,
                           const std::optional<std::string>& end_text,
                           const std::optional<int>& radius,
                           const std::vector<double>& ts,
                           const std::optional<std::string>& out_path,
                           const PipelineConfig& config);

// treecheck: four-point defect, reconstruction, and the half-integer verdict.
RunResult run_tree_check(const std::string& spec_path,
                         const std::optional<std::string>& end_text,
                         const std::optional<int>& radius,
                         const std::optional<std::string>& out_path,
                         const PipelineConfig& config);

// treecheck --metric: debug entry on a hand-written metric file.
RunResult run_tree_check_on_metric(const std::string& metric_path, const PipelineConfig& config);

// center: approximate center vs. a quasi-random oracle grid.
RunResult run_center(const std::string& spec_path, double t, const PipelineConfig& config);

// newton: Newton polygon and asymptotic exponents, with optional numeric tracking.
RunResult run_newton(const std::string& polynomial_text, bool numeric,
                     const PipelineConfig& config);

// compare: projective distance between numeric lengths at t and the symbolic limit.
RunResult run_compare(const std::string& spec_path,
                      const std::optional<std::string>& end_text, double t, int radius,
                      const PipelineConfig& config);

struct ProjectiveLengthComparison {
    std::vector<double> normalized_lhs, normalized_rhs;
    double sup_distance = 0.0;
    size_t pivot_lhs = 0, pivot_rhs = 0;  // first nonzero entries, shortlex order
};

// Sup-norm distance after dividing each vector by its shortlex-first nonzero
// entry. Throws on an identically-zero vector.
ProjectiveLengthComparison projective_compare(const std::vector<double>& lhs,
                                              const std::vector<double>& rhs);

// LimitMetric file for the treecheck debug mode:
// {"labels": [...], "distances": [["0", "1", ...], ...]} with rationals as strings.
LimitMetric parse_metric_file(const std::string& text);

void atomic_write_file(const std::string& path, const std::string& contents);
std::string read_file(const std::string& path);

}  // namespace treelim
