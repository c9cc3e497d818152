#include "treelim/pipeline.hpp"

#include <json.hpp>

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <limits>
#include <cstdlib>
#include <fstream>
#include <sstream>

#include "treelim/expr.hpp"
#include "treelim/newton.hpp"
#include "treelim/polyroots.hpp"

namespace treelim {

using json = nlohmann::ordered_json;

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw InputError("cannot open file: " + path);
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

void atomic_write_file(const std::string& path, const std::string& contents) {
    std::string tmp = path + ".tmp";
    {
        std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
        if (!out) throw InputError("cannot write file: " + tmp);
        out << contents;
        if (!out) throw InputError("write failed: " + tmp);
    }
    if (std::rename(tmp.c_str(), path.c_str()) != 0)
        throw InputError("cannot move report into place: " + path);
}

PipelineConfig PipelineConfig::from_json_text(const std::string& text) {
    PipelineConfig c;
    json doc;
    try {
        doc = json::parse(text);
    } catch (const json::exception& e) {
        throw InputError(std::string("bad config: ") + e.what());
    }
    if (doc.contains("tolerance")) c.tolerance = doc["tolerance"].get<double>();
    if (doc.contains("samples_per_segment")) c.samples_per_segment = doc["samples_per_segment"].get<int>();
    if (doc.contains("ball_cap")) c.ball_cap = doc["ball_cap"].get<int>();
    if (doc.contains("drift_fraction")) c.drift_fraction = doc["drift_fraction"].get<double>();
    if (doc.contains("oracle_grid_points")) c.oracle_grid_points = doc["oracle_grid_points"].get<int>();
    if (doc.contains("pmax")) c.pmax = doc["pmax"].get<int>();
    return c;
}

PipelineConfig PipelineConfig::from_environment() {
    const char* path = std::getenv("TREELIMITS_CONFIG");
    if (!path || !*path) return {};
    return from_json_text(read_file(path));
}

HyperbolicContext PipelineConfig::h3() const {
    HyperbolicContext ctx;
    ctx.samples_per_segment = samples_per_segment;
    ctx.tolerance = tolerance;
    return ctx;
}

namespace {

json config_echo(const PipelineConfig& c) {
    json j;
    j["tolerance"] = c.tolerance;
    j["samples_per_segment"] = c.samples_per_segment;
    j["ball_cap"] = c.ball_cap;
    j["drift_fraction"] = c.drift_fraction;
    j["oracle_grid_points"] = c.oracle_grid_points;
    j["pmax"] = c.pmax;
    return j;
}

End resolve_end(const CurveSpec& spec, const std::optional<std::string>& end_text) {
    End end = end_text ? parse_end(*end_text) : spec.ends.front();
    for (const End& e : spec.ends) {
        if (e == end) return end;
    }
    throw InputError("end " + end.str() + " is not listed in the spec");
}

std::string format_double(double v, int digits = 4) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.*f", digits, v);
    return buf;
}

struct LengthTable {
    std::vector<std::string> words;        // rendered
    std::vector<long> symbolic;
    std::vector<long> orbit;
    std::vector<std::vector<double>> numeric;  // [word][t]
    std::vector<std::string> disagreements;
};

LengthTable build_length_table(const RepCurve& curve, const End& end, const WordBall& ball,
                               const std::vector<double>& ts) {
    LengthTable table;
    for (const Word& w : ball.words) {
        table.words.push_back(render_word(w, curve.alphabet));
        long sym = limit_length(curve, end, w);
        long orb = orbit_limit_length(curve, end, w);
        table.symbolic.push_back(sym);
        table.orbit.push_back(orb);
        if (sym != orb) table.disagreements.push_back(table.words.back());
        std::vector<double> row;
        for (const auto& s : numeric_length_samples(curve, w, ts, end)) row.push_back(s.value);
        table.numeric.push_back(std::move(row));
    }
    return table;
}

json table_json(const LengthTable& table) {
    json rows = json::array();
    for (size_t i = 0; i < table.words.size(); ++i) {
        json row;
        row["word"] = table.words[i];
        row["symbolic"] = table.symbolic[i];
        row["orbit"] = table.orbit[i];
        row["numeric"] = table.numeric[i];
        rows.push_back(std::move(row));
    }
    return rows;
}

std::string table_text(const LengthTable& table, const std::vector<double>& ts) {
    size_t wword = 6;
    for (const auto& w : table.words) wword = std::max(wword, w.size());
    std::ostringstream out;
    out << std::string(wword - 4, ' ') << "word" << "  symbolic  orbit";
    for (double t : ts) {
        std::string head = "t=" + format_double(t, 0);
        out << "  " << head;
    }
    out << "\n";
    for (size_t i = 0; i < table.words.size(); ++i) {
        const std::string& w = table.words[i].empty() ? "1" : table.words[i];
        out << std::string(wword - w.size(), ' ') << w;
        std::string sym = std::to_string(table.symbolic[i]);
        out << std::string(10 - sym.size(), ' ') << sym;
        std::string orb = std::to_string(table.orbit[i]);
        out << std::string(7 - orb.size(), ' ') << orb;
        for (size_t k = 0; k < ts.size(); ++k) {
            std::string head = "t=" + format_double(ts[k], 0);
            std::string val = format_double(table.numeric[i][k]);
            out << "  " << std::string(head.size() > val.size() ? head.size() - val.size() : 0, ' ')
                << val;
        }
        out << "\n";
    }
    return out.str();
}

json half_integer_json(const HalfIntegerReport& hi, const MetricTree& tree) {
    json j;
    j["ok"] = hi.ok;
    if (!hi.ok && hi.witness) {
        auto point_str = [&](const TreePoint& p) {
            if (p.is_vertex()) return std::string("v") + std::to_string(p.vertex);
            return "e" + std::to_string(p.edge) + "+" + to_string(p.offset);
        };
        (void)tree;
        j["witness"] = {point_str(hi.witness->first), point_str(hi.witness->second)};
        j["witness_distance"] = to_string(hi.witness_distance);
        j["worst_deviation"] = to_string(hi.worst_deviation);
    }
    return j;
}

double halton(int index, int base) {
    double f = 1.0, r = 0.0;
    int i = index;
    while (i > 0) {
        f /= base;
        r += f * (i % base);
        i /= base;
    }
    return r;
}

}  // namespace

ProjectiveLengthComparison projective_compare(const std::vector<double>& lhs,
                                              const std::vector<double>& rhs) {
    auto pivot = [](const std::vector<double>& v) -> size_t {
        for (size_t i = 0; i < v.size(); ++i) {
            if (v[i] != 0.0) return i;
        }
        throw InputError("zero length function has no projective class");
    };
    ProjectiveLengthComparison out;
    out.pivot_lhs = pivot(lhs);
    out.pivot_rhs = pivot(rhs);
    out.normalized_lhs.reserve(lhs.size());
    out.normalized_rhs.reserve(rhs.size());
    for (double v : lhs) out.normalized_lhs.push_back(v / lhs[out.pivot_lhs]);
    for (double v : rhs) out.normalized_rhs.push_back(v / rhs[out.pivot_rhs]);
    size_t n = std::min(lhs.size(), rhs.size());
    for (size_t i = 0; i < n; ++i)
        out.sup_distance = std::max(out.sup_distance,
                                    std::abs(out.normalized_lhs[i] - out.normalized_rhs[i]));
    return out;
}

LimitMetric parse_metric_file(const std::string& text) {
    json doc;
    try {
        doc = json::parse(text);
    } catch (const json::exception& e) {
        throw InputError(std::string("malformed metric file: ") + e.what());
    }
    if (!doc.contains("labels") || !doc["labels"].is_array() || !doc.contains("distances") ||
        !doc["distances"].is_array())
        throw InputError("metric file needs \"labels\" and \"distances\"");
    LimitMetric m;
    for (const json& l : doc["labels"]) m.labels.push_back(l.get<std::string>());
    size_t n = m.labels.size();
    if (doc["distances"].size() != n) throw InputError("distance matrix size mismatch");
    for (const json& row : doc["distances"]) {
        if (!row.is_array() || row.size() != n) throw InputError("distance matrix is not square");
        std::vector<Rational> r;
        for (const json& cell : row) {
            Rational q;
            if (cell.is_number_integer()) {
                q = Rational(cell.get<long>());
            } else if (cell.is_string()) {
                q = Rational(cell.get<std::string>());
                q.canonicalize();
            } else {
                throw InputError("distances must be integers or rational strings");
            }
            r.push_back(std::move(q));
        }
        m.d.push_back(std::move(r));
    }
    for (size_t i = 0; i < n; ++i) {
        if (m.d[i][i] != 0) throw InputError("metric diagonal must be zero");
        for (size_t j = 0; j < n; ++j)
            if (m.d[i][j] != m.d[j][i]) throw InputError("metric must be symmetric");
    }
    return m;
}

int resolve_radius(const std::optional<int>& requested, const CurveSpec& spec) {
    if (requested) return *requested;
    if (spec.ball_radius) return *spec.ball_radius;
    return 3;
}

RunResult run_limit_report(const std::string& spec_path,
                           const std::optional<std::string>& end_text,
                           const std::optional<int>& radius_opt,
                           const std::vector<double>& ts,
                           const std::optional<std::string>& out_path,
                           const PipelineConfig& config) {
    std::string raw = read_file(spec_path);
    CurveSpec spec = parse_curve_spec(raw);
    End end = resolve_end(spec, end_text);
    const RepCurve& curve = spec.curve;
    int radius = resolve_radius(radius_opt, spec);
    WordBall ball = enumerate_ball(curve.alphabet, radius, config.ball_cap);

    json report;
    report["tool"] = "treelimits";
    report["command"] = "limitlen";
    report["spec_echo"] = raw;
    report["config"] = config_echo(config);
    report["end"] = end.str();
    report["radius"] = radius;
    report["ts"] = ts;

    RunResult result;
    auto finish = [&](int code, const std::string& text) {
        report["exit_code"] = code;
        result.exit_code = code;
        result.report_json = report.dump(2) + "\n";
        result.text = text;
        if (out_path) atomic_write_file(*out_path, result.report_json);
        return result;
    };

    BlowUpResult blow = blows_up(curve, end, radius, config.ball_cap);
    report["blow_up"]["holds"] = blow.holds;
    if (!blow.holds) {
        report["message"] = "no blow-up at this end; limits are bounded";
        return finish(kNoBlowUp, "no blow-up at this end; limits are bounded\n");
    }
    report["blow_up"]["witness"] = render_word(*blow.witness, curve.alphabet);

    LengthTable table = build_length_table(curve, end, ball, ts);
    report["length_table"] = table_json(table);

    // Words requested by the spec document that fall outside the ball.
    LengthTable extra;
    for (const std::string& text_word : spec.words) {
        Word w = parse_word(text_word, curve.alphabet);
        if (ball.index_of(w)) continue;
        std::string rendered = render_word(w, curve.alphabet);
        if (std::find(extra.words.begin(), extra.words.end(), rendered) != extra.words.end())
            continue;
        extra.words.push_back(rendered);
        long sym = limit_length(curve, end, w);
        long orb = orbit_limit_length(curve, end, w);
        extra.symbolic.push_back(sym);
        extra.orbit.push_back(orb);
        if (sym != orb) extra.disagreements.push_back(rendered);
        std::vector<double> row;
        for (const auto& s : numeric_length_samples(curve, w, ts, end)) row.push_back(s.value);
        extra.numeric.push_back(std::move(row));
    }
    if (!extra.words.empty()) report["extra_words"] = table_json(extra);

    long conversion = 0;
    for (size_t g = 0; g < curve.alphabet.size(); ++g) {
        Word gen{std::vector<int>{static_cast<int>(g) + 1}};
        conversion = std::max(conversion, limit_length(curve, end, gen));
    }
    report["rescaling"]["mode"] = "symbolic";
    report["rescaling"]["conversion_factor"] = conversion;

    std::ostringstream text;
    text << "end: " << end.str() << ", radius " << radius << ", blow-up witness: "
         << render_word(*blow.witness, curve.alphabet) << "\n";
    text << table_text(table, ts);
    if (!extra.words.empty()) text << "spec words outside the ball:\n" << table_text(extra, ts);

    std::vector<std::string> disagreements = table.disagreements;
    disagreements.insert(disagreements.end(), extra.disagreements.begin(),
                         extra.disagreements.end());
    if (!disagreements.empty()) {
        report["failed_check"] = "engine-agreement";
        report["disagreements"] = disagreements;
        text << "FAILED engine-agreement on: ";
        for (const auto& w : disagreements) text << w << " ";
        text << "\n";
        return finish(kEngineDisagreement, text.str());
    }
    report["cross_checks"]["engine_agreement"] = true;

    LimitMetricOptions options;
    options.drift_fraction = config.drift_fraction;
    options.h3 = config.h3();
    LimitMetric metric = limit_metric(curve, end, ball, curve.alphabet, options);

    FourPointResult fp = four_point_defect(metric);
    report["cross_checks"]["four_point_defect"] = to_string(fp.defect);
    if (fp.defect > 0) {
        json witness = json::array();
        for (size_t idx : fp.witness) witness.push_back(metric.labels[idx]);
        report["failed_check"] = "four-point";
        report["four_point_witness"] = witness;
        text << "FAILED four-point condition; witness: " << witness.dump() << "\n";
        return finish(kNonAdditiveMetric, text.str());
    }

    Reconstruction rec = reconstruct_tree(metric);
    report["cross_checks"]["tree_distances_match"] = true;  // reconstruct_tree verifies exactly
    report["tree"]["edges"] = serialize_tree(rec.tree);
    {
        json placements;
        for (size_t i = 0; i < metric.labels.size(); ++i)
            placements[metric.labels[i]] = rec.placement[i].vertex;
        report["tree"]["placements"] = placements;
    }

    std::vector<TreePoint> marked = rec.placement;
    HalfIntegerReport hi = half_integer_branch_check(rec.tree, marked);
    report["cross_checks"]["half_integer"] = half_integer_json(hi, rec.tree);

    IrreducibilityProbe probe = irreducibility_probe(curve, end, radius, config.pmax, config.ball_cap);
    if (probe.witness) {
        report["irreducibility"]["witness"] = {render_word(probe.witness->first, curve.alphabet),
                                               render_word(probe.witness->second, curve.alphabet)};
        json lengths;
        for (const auto& [p, v] : probe.commutator_lengths) lengths[std::to_string(p)] = v;
        report["irreducibility"]["commutator_lengths"] = lengths;
    } else {
        report["irreducibility"]["witness"] = nullptr;
        report["irreducibility"]["message"] = "irreducibility not established";
    }

    json projective = json::array();
    std::vector<double> symbolic_vec(table.symbolic.begin(), table.symbolic.end());
    for (size_t k = 0; k < ts.size(); ++k) {
        std::vector<double> numeric_vec;
        for (size_t i = 0; i < table.words.size(); ++i) numeric_vec.push_back(table.numeric[i][k]);
        ProjectiveLengthComparison cmp = projective_compare(numeric_vec, symbolic_vec);
        json entry;
        entry["t"] = ts[k];
        entry["sup_distance"] = cmp.sup_distance;
        projective.push_back(entry);
        text << "projective distance at t=" << format_double(ts[k], 0) << ": "
             << format_double(cmp.sup_distance) << "\n";
    }
    report["cross_checks"]["projective_distances"] = projective;

    text << "four-point defect: " << to_string(fp.defect) << "\n";
    text << "half-integer branch distances: " << (hi.ok ? "true" : "false") << "\n";
    if (probe.witness) {
        text << "irreducibility witness: (" << render_word(probe.witness->first, curve.alphabet)
             << ", " << render_word(probe.witness->second, curve.alphabet) << ")\n";
    } else {
        text << "irreducibility not established\n";
    }
    text << "rescaling conversion factor: " << conversion << "\n";
    text << "tree:\n" << serialize_tree(rec.tree);
    return finish(kOk, text.str());
}

RunResult run_tree_check(const std::string& spec_path,
                         const std::optional<std::string>& end_text,
                         const std::optional<int>& radius_opt,
                         const std::optional<std::string>& out_path,
                         const PipelineConfig& config) {
    std::string raw = read_file(spec_path);
    CurveSpec spec = parse_curve_spec(raw);
    End end = resolve_end(spec, end_text);
    int radius = resolve_radius(radius_opt, spec);
    WordBall ball = enumerate_ball(spec.curve.alphabet, radius, config.ball_cap);

    RunResult result;
    json report;
    report["tool"] = "treelimits";
    report["command"] = "treecheck";
    report["spec_echo"] = raw;
    report["config"] = config_echo(config);
    report["end"] = end.str();
    report["radius"] = radius;

    LimitMetricOptions options;
    options.drift_fraction = config.drift_fraction;
    options.h3 = config.h3();
    LimitMetric metric;
    try {
        metric = limit_metric(spec.curve, end, ball, spec.curve.alphabet, options);
    } catch (const NoBlowUp& e) {
        report["message"] = e.what();
        report["exit_code"] = kNoBlowUp;
        result.exit_code = kNoBlowUp;
        result.report_json = report.dump(2) + "\n";
        result.text = std::string(e.what()) + "\n";
        return result;
    }

    FourPointResult fp = four_point_defect(metric);
    report["four_point_defect"] = to_string(fp.defect);
    std::ostringstream text;
    text << "four-point defect: " << to_string(fp.defect) << "\n";
    if (fp.defect > 0) {
        json witness = json::array();
        for (size_t idx : fp.witness) witness.push_back(metric.labels[idx]);
        report["four_point_witness"] = witness;
        report["exit_code"] = kNonAdditiveMetric;
        text << "metric is not additive; witness: " << witness.dump() << "\n";
        result.exit_code = kNonAdditiveMetric;
        result.report_json = report.dump(2) + "\n";
        result.text = text.str();
        return result;
    }

    Reconstruction rec = reconstruct_tree(metric);
    HalfIntegerReport hi = half_integer_branch_check(rec.tree, rec.placement);
    std::string edges = serialize_tree(rec.tree);
    report["tree"]["edges"] = edges;
    report["half_integer"] = half_integer_json(hi, rec.tree);
    report["exit_code"] = kOk;
    text << "tree:\n" << edges;
    text << "half-integer branch distances: " << (hi.ok ? "true" : "false") << "\n";
    if (out_path) atomic_write_file(*out_path, edges);
    result.exit_code = kOk;
    result.report_json = report.dump(2) + "\n";
    result.text = text.str();
    return result;
}

RunResult run_tree_check_on_metric(const std::string& metric_path, const PipelineConfig& config) {
    (void)config;
    LimitMetric metric = parse_metric_file(read_file(metric_path));
    RunResult result;
    std::ostringstream text;
    FourPointResult fp = four_point_defect(metric);
    text << "four-point defect: " << to_string(fp.defect) << "\n";
    json report;
    report["tool"] = "treelimits";
    report["command"] = "treecheck";
    report["four_point_defect"] = to_string(fp.defect);
    if (fp.defect > 0) {
        json witness = json::array();
        for (size_t idx : fp.witness) witness.push_back(metric.labels[idx]);
        report["four_point_witness"] = witness;
        report["exit_code"] = kNonAdditiveMetric;
        text << "metric is not additive; witness: " << witness.dump() << "\n";
        result.exit_code = kNonAdditiveMetric;
    } else {
        Reconstruction rec = reconstruct_tree(metric);
        HalfIntegerReport hi = half_integer_branch_check(rec.tree, rec.placement);
        std::string edges = serialize_tree(rec.tree);
        report["tree"]["edges"] = edges;
        report["half_integer"] = half_integer_json(hi, rec.tree);
        report["exit_code"] = kOk;
        text << "tree:\n" << edges;
        text << "half-integer branch distances: " << (hi.ok ? "true" : "false") << "\n";
        result.exit_code = kOk;
    }
    result.report_json = report.dump(2) + "\n";
    result.text = text.str();
    return result;
}

RunResult run_center(const std::string& spec_path, double t, const PipelineConfig& config) {
    if (!(t > 1.0)) throw InputError("center requires t > 1");
    CurveSpec spec = parse_curve_spec(read_file(spec_path));
    std::vector<Matrix2C> mats;
    for (const auto& m : spec.curve.matrices) mats.push_back(m.evaluate({t, 0.0}));

    HyperbolicContext ctx = config.h3();
    CenterResult center = approximate_center(mats, ctx, PointH3::basepoint());

    double best = max_displacement(mats, PointH3::basepoint());
    for (int i = 1; i <= config.oracle_grid_points; ++i) {
        double re = -4.0 + 8.0 * halton(i, 2);
        double im = -4.0 + 8.0 * halton(i, 3);
        double lh = -4.0 + 8.0 * halton(i, 5);
        best = std::min(best, max_displacement(mats, PointH3({re, im}, std::exp(lh))));
    }
    double gap = center.radius - best;

    RunResult result;
    std::ostringstream text;
    text << "center: z = " << format_double(center.center.z.real(), 6) << " + "
         << format_double(center.center.z.imag(), 6) << "i, h = "
         << format_double(center.center.h, 6) << "\n";
    text << "r_S(center) = " << format_double(center.radius, 6) << "\n";
    text << "oracle grid best = " << format_double(best, 6) << "\n";
    text << "gap = " << format_double(gap, 6) << (gap <= 1.0 ? " (within contract)" : " (EXCEEDS 1)")
         << "\n";
    json report;
    report["tool"] = "treelimits";
    report["command"] = "center";
    report["t"] = t;
    report["center"] = {{"re", center.center.z.real()},
                        {"im", center.center.z.imag()},
                        {"h", center.center.h}};
    report["r_S"] = center.radius;
    report["grid_best"] = best;
    report["gap"] = gap;
    result.exit_code = gap <= 1.0 ? kOk : kEngineDisagreement;
    report["exit_code"] = result.exit_code;
    result.report_json = report.dump(2) + "\n";
    result.text = text.str();
    return result;
}

RunResult run_newton(const std::string& polynomial_text, bool numeric,
                     const PipelineConfig& config) {
    (void)config;
    BivariatePolynomial p;
    try {
        p = parse_bivariate(polynomial_text);
    } catch (const ExprParseError& e) {
        throw InputError(std::string("bad polynomial: ") + e.what());
    }
    if (p.is_zero()) throw InputError("zero polynomial has no Newton polygon");

    NewtonPolygon np = newton_polygon(p);
    std::ostringstream text;
    text << "polynomial: " << p.str() << "\n";
    text << "support:";
    for (const auto& pt : np.support) text << " (" << pt.m << "," << pt.n << ")";
    text << "\nhull:";
    for (const auto& pt : np.hull) text << " (" << pt.m << "," << pt.n << ")";
    text << "\n";
    for (const auto& e : np.edges) {
        text << "edge (" << e.from.m << "," << e.from.n << ")-(" << e.to.m << "," << e.to.n
             << ") normal (" << e.normal_u << "," << e.normal_v << ")"
             << " terms y^" << e.data.r << " z^" << e.data.s << " q(y^" << e.data.a << " z^"
             << e.data.b << "), q = " << e.data.q.str("w") << "\n";
    }

    if (p.term_count() < 2) throw InputError("no branches");
    std::vector<PolygonEdge> branches = asymptotic_exponents(p);
    std::sort(branches.begin(), branches.end(), [](const PolygonEdge& a, const PolygonEdge& b) {
        return a.data.exponent < b.data.exponent;
    });
    text << "asymptotic exponents:";
    for (const auto& e : branches) text << " " << to_string(e.data.exponent);
    text << "\n";

    if (numeric) {
        const double z0 = 1e4;
        long long max_m = 0;
        for (const auto& [pt, c] : p.terms()) max_m = std::max(max_m, pt.m);
        std::vector<std::complex<double>> coeffs(static_cast<size_t>(max_m) + 1, 0.0);
        for (const auto& [pt, c] : p.terms())
            coeffs[static_cast<size_t>(pt.m)] += c.to_complex() * std::pow(z0, static_cast<double>(pt.n));
        std::vector<std::complex<double>> roots = find_roots(coeffs);
        for (const auto& e : branches) {
            double target = e.data.exponent.get_d();
            double best = std::numeric_limits<double>::infinity();
            double measured = 0.0;
            for (const auto& r : roots) {
                if (std::abs(r) == 0.0) continue;
                double expo = std::log(std::abs(r)) / std::log(z0);
                if (std::abs(expo - target) < best) {
                    best = std::abs(expo - target);
                    measured = expo;
                }
            }
            text << "branch " << to_string(e.data.exponent) << ": measured "
                 << format_double(measured, 6) << " at |z| = 1e4 (deviation "
                 << format_double(best, 6) << ")\n";
        }
    }

    RunResult result;
    result.exit_code = kOk;
    result.text = text.str();
    result.report_json = "";
    return result;
}

RunResult run_compare(const std::string& spec_path,
                      const std::optional<std::string>& end_text, double t, int radius,
                      const PipelineConfig& config) {
    if (!(t > 1.0)) throw InputError("compare requires t > 1");
    std::string raw = read_file(spec_path);
    CurveSpec spec = parse_curve_spec(raw);
    End end = resolve_end(spec, end_text);
    WordBall ball = enumerate_ball(spec.curve.alphabet, radius, config.ball_cap);

    std::vector<double> numeric_vec, symbolic_vec;
    for (const Word& w : ball.words) {
        numeric_vec.push_back(numeric_length_samples(spec.curve, w, {t}, end)[0].value);
        symbolic_vec.push_back(static_cast<double>(limit_length(spec.curve, end, w)));
    }
    ProjectiveLengthComparison cmp = projective_compare(numeric_vec, symbolic_vec);

    RunResult result;
    std::ostringstream text;
    text << "projective sup distance at t = " << format_double(t, 0) << ": "
         << format_double(cmp.sup_distance, 6) << "\n";
    for (size_t i = 0; i < ball.size(); ++i) {
        std::string w = render_word(ball.words[i], spec.curve.alphabet);
        if (w.empty()) w = "1";
        text << w << ": numeric " << format_double(cmp.normalized_lhs[i], 6) << ", symbolic "
             << format_double(cmp.normalized_rhs[i], 6) << "\n";
    }
    json report;
    report["tool"] = "treelimits";
    report["command"] = "compare";
    report["t"] = t;
    report["radius"] = radius;
    report["sup_distance"] = cmp.sup_distance;
    report["exit_code"] = kOk;
    result.exit_code = kOk;
    result.report_json = report.dump(2) + "\n";
    result.text = text.str();
    return result;
}

}  // namespace treelim
