#include <CLI11.hpp>

#include <cstdio>
#include <iostream>

#include "treelim/pipeline.hpp"

namespace {

int emit(const treelim::RunResult& result) {
    std::cout << result.text;
    return result.exit_code;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"limiting translation-length functions of SL2(C) representation curves"};
    app.require_subcommand(1);

    std::string spec_path, end_text, out_path, metric_path, poly_text;
    int radius = 3;
    double t = 100.0;
    std::vector<double> ts{1e3, 1e4, 1e5, 1e6};
    bool numeric = false;

    CLI::App* limitlen = app.add_subcommand("limitlen", "full three-engine limit report");
    limitlen->add_option("spec", spec_path, "curve spec JSON file")->required();
    limitlen->add_option("--end", end_text, "end: infinity or t0=VALUE");
    CLI::Option* limitlen_radius = limitlen->add_option("--radius", radius, "word ball radius");
    limitlen->add_option("--ts", ts, "numeric sample parameters")->delimiter(',');
    limitlen->add_option("--out", out_path, "write the JSON report here");

    CLI::App* treecheck = app.add_subcommand("treecheck", "limit metric tree checks");
    treecheck->add_option("spec", spec_path, "curve spec JSON file");
    treecheck->add_option("--end", end_text, "end: infinity or t0=VALUE");
    CLI::Option* treecheck_radius = treecheck->add_option("--radius", radius, "word ball radius");
    treecheck->add_option("--metric", metric_path, "debug: check a metric file instead");
    treecheck->add_option("--out", out_path, "write the tree edge list here");

    CLI::App* center = app.add_subcommand("center", "approximate center vs. oracle grid");
    center->add_option("spec", spec_path, "curve spec JSON file")->required();
    center->add_option("--t", t, "curve parameter")->required();

    CLI::App* newton = app.add_subcommand("newton", "Newton polygon and asymptotic exponents");
    newton->add_option("polynomial", poly_text, "bivariate polynomial in y, z")->required();
    newton->add_flag("--numeric", numeric, "track branches numerically at |z| = 1e4");

    CLI::App* compare = app.add_subcommand("compare", "numeric vs. symbolic lengths, projectively");
    compare->add_option("spec", spec_path, "curve spec JSON file")->required();
    compare->add_option("--t", t, "curve parameter")->required();
    compare->add_option("--end", end_text, "end: infinity or t0=VALUE");
    compare->add_option("--radius", radius, "word ball radius");

    CLI11_PARSE(app, argc, argv);

    try {
        treelim::PipelineConfig config = treelim::PipelineConfig::from_environment();
        std::optional<std::string> end_opt =
            end_text.empty() ? std::nullopt : std::make_optional(end_text);
        std::optional<std::string> out_opt =
            out_path.empty() ? std::nullopt : std::make_optional(out_path);

        if (limitlen->parsed()) {
            std::optional<int> r =
                limitlen_radius->count() ? std::make_optional(radius) : std::nullopt;
            return emit(treelim::run_limit_report(spec_path, end_opt, r, ts, out_opt, config));
        }
        if (treecheck->parsed()) {
            if (!metric_path.empty())
                return emit(treelim::run_tree_check_on_metric(metric_path, config));
            if (spec_path.empty()) throw treelim::InputError("treecheck needs a spec or --metric");
            std::optional<int> r =
                treecheck_radius->count() ? std::make_optional(radius) : std::nullopt;
            return emit(treelim::run_tree_check(spec_path, end_opt, r, out_opt, config));
        }
        if (center->parsed()) return emit(treelim::run_center(spec_path, t, config));
        if (newton->parsed()) return emit(treelim::run_newton(poly_text, numeric, config));
        if (compare->parsed())
            return emit(treelim::run_compare(spec_path, end_opt, t, radius, config));
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return treelim::kInputError;
    }
    return treelim::kInputError;
}
