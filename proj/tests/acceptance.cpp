// Acceptance suite: one PASS/FAIL line per criterion, every tolerance pinned
// in code. Exits nonzero if any criterion fails.

#include <cmath>
#include <cstdio>
#include <functional>
#include <random>
#include <set>
#include <sstream>

#include "support.hpp"
#include "treelim/expr.hpp"
#include "treelim/newton.hpp"
#include "treelim/pipeline.hpp"
#include "treelim/polyroots.hpp"
#include "treelim/valuation.hpp"

using namespace treelim;
using namespace testsupport;

namespace {

struct Criterion {
    std::string name;
    std::function<bool(std::ostringstream&)> run;
};

CurveSpec canonical() { return parse_curve_spec(kCanonicalSpec); }

Matrix2C random_sl2(std::mt19937& rng, double scale) {
    std::uniform_real_distribution<double> u(-scale, scale);
    for (;;) {
        std::complex<double> a{u(rng), u(rng)}, b{u(rng), u(rng)}, c{u(rng), u(rng)};
        if (std::abs(a) < 0.2) continue;
        std::complex<double> d = (1.0 + b * c) / a;
        if (std::abs(d) > 10.0) continue;
        return Matrix2C(a, b, c, d);
    }
}

Matrix2C random_loxodromic(std::mt19937& rng) {
    for (;;) {
        Matrix2C m = random_sl2(rng, 3.0);
        double top = std::max({std::abs(m.a), std::abs(m.b), std::abs(m.c), std::abs(m.d)});
        if (top > 10.0) continue;
        if (std::abs(m.trace()) > 2.05) return m;
    }
}

PointH3 random_point_within(std::mt19937& rng, double radius) {
    std::uniform_real_distribution<double> u(-3.0, 3.0);
    for (;;) {
        PointH3 p({u(rng), u(rng)}, std::exp(u(rng)));
        if (dist_h3(p, PointH3::basepoint()) <= radius) return p;
    }
}

double halton(int index, int base) {
    double f = 1.0, r = 0.0;
    for (int i = index; i > 0; i /= base) {
        f /= base;
        r += f * (i % base);
    }
    return r;
}

// 1. Canonical-curve length table, exactly, with the Laurent-degree oracle
// and the closed-form commutator trace.
bool criterion_length_table(std::ostringstream& out) {
    CurveSpec spec = canonical();
    const Alphabet& ab = spec.curve.alphabet;
    End inf = End::infinity();
    auto gens = canonical_laurent_generators();
    bool ok = true;
    const std::pair<const char*, long> expected[] = {
        {"a", 2}, {"b", 0}, {"ab", 2}, {"ba", 2}, {"abAB", 4}};
    for (const auto& [text, value] : expected) {
        Word word = parse_word(text, ab);
        long sym = limit_length(spec.curve, inf, word);
        long oracle = laurent_limit_length(gens, word);
        if (sym != value || oracle != value) {
            out << "  " << text << ": engine " << sym << ", oracle " << oracle
                << ", expected " << value << "\n";
            ok = false;
        }
    }
    RationalFunction tr = trace_function(spec.curve, parse_word("abAB", ab));
    GaussianRational b{make_rational(3, 2)}, c{make_rational(-1, 2)}, one(1), two(2);
    RationalFunction closed =
        RationalFunction(one - b * b + c * c) * parse_rational_function("t^2 + 1/t^2") +
        RationalFunction(two * (b * b - c * c));
    if (!(tr == closed)) {
        out << "  commutator trace differs from the closed form\n";
        ok = false;
    }
    return ok;
}

// 2. Three-engine agreement on the full radius-3 ball: symbolic == orbit
// exactly; numeric at t = 1e6 within 0.15 after 1/log t rescaling.
bool criterion_three_engines(std::ostringstream& out) {
    CurveSpec spec = canonical();
    End inf = End::infinity();
    WordBall ball = enumerate_ball(spec.curve.alphabet, 3);
    bool exact_ok = true;
    double worst = 0.0;
    std::string worst_word;
    for (const Word& word : ball.words) {
        long sym = limit_length(spec.curve, inf, word);
        long orb = orbit_limit_length(spec.curve, inf, word);
        if (sym != orb) {
            out << "  symbolic " << sym << " != orbit " << orb << " at "
                << render_word(word, spec.curve.alphabet) << "\n";
            exact_ok = false;
        }
        double numeric = numeric_length_samples(spec.curve, word, {1e6}, inf)[0].value;
        double dev = std::abs(numeric - static_cast<double>(sym));
        if (dev > worst) {
            worst = dev;
            worst_word = render_word(word, spec.curve.alphabet);
        }
    }
    out << "  symbolic/orbit exact agreement: " << (exact_ok ? "yes" : "NO") << "\n";
    out << "  max numeric deviation at t=1e6: " << worst << " at '" << worst_word
        << "' (tolerance 0.15)\n";
    return exact_ok && worst <= 0.15;
}

// 3. PLF convergence: projective sup distance at t = 2^n is <= 0.05 at n = 20
// and decreasing over n in {10, 14, 17, 20}.
bool criterion_plf_convergence(std::ostringstream& out) {
    CurveSpec spec = canonical();
    End inf = End::infinity();
    WordBall ball = enumerate_ball(spec.curve.alphabet, 3);
    std::vector<double> symbolic;
    for (const Word& word : ball.words)
        symbolic.push_back(static_cast<double>(limit_length(spec.curve, inf, word)));
    std::vector<double> sups;
    for (int n : {10, 14, 17, 20}) {
        double t = std::pow(2.0, n);
        std::vector<double> numeric;
        for (const Word& word : ball.words)
            numeric.push_back(numeric_length_samples(spec.curve, word, {t}, inf)[0].value);
        sups.push_back(projective_compare(numeric, symbolic).sup_distance);
        out << "  n=" << n << ": sup distance " << sups.back() << "\n";
    }
    bool decreasing = sups[0] > sups[1] && sups[1] > sups[2] && sups[2] > sups[3];
    out << "  decreasing: " << (decreasing ? "yes" : "NO") << ", final <= 0.05: "
        << (sups.back() <= 0.05 ? "yes" : "NO") << "\n";
    return decreasing && sups.back() <= 0.05;
}

// 4. Tree realization: defect exactly 0, exact reconstruction, half-integer
// (in fact integer) branch distances.
bool criterion_tree_realization(std::ostringstream& out) {
    CurveSpec spec = canonical();
    WordBall ball = enumerate_ball(spec.curve.alphabet, 3);
    LimitMetricOptions options;
    LimitMetric metric = limit_metric(spec.curve, End::infinity(), ball, spec.curve.alphabet,
                                      options);
    FourPointResult fp = four_point_defect(metric);
    if (fp.defect != 0) {
        out << "  four-point defect " << to_string(fp.defect) << " != 0\n";
        return false;
    }
    Reconstruction rec = reconstruct_tree(metric);
    for (size_t i = 0; i < metric.size(); ++i)
        for (size_t j = 0; j < metric.size(); ++j)
            if (tree_distance(rec.tree, rec.placement[i], rec.placement[j]) != metric.dist(i, j)) {
                out << "  reconstructed distance differs at (" << i << "," << j << ")\n";
                return false;
            }
    HalfIntegerReport hi = half_integer_branch_check(rec.tree, rec.placement);
    if (!hi.ok) {
        out << "  half-integer check failed\n";
        return false;
    }
    // all branch-vertex distances are in fact integers
    for (int u = 0; u < rec.tree.vertex_count(); ++u) {
        for (int v = u + 1; v < rec.tree.vertex_count(); ++v) {
            if (rec.tree.degree(u) >= 3 && rec.tree.degree(v) >= 3 &&
                rec.tree.vertex_distance(u, v).get_den() != 1) {
                out << "  non-integer branch distance\n";
                return false;
            }
        }
    }
    out << "  defect 0, exact reconstruction, integer branch distances\n";
    return true;
}

// 5. Product formula: elliptic pairs with cores at distance D compose to 2D;
// hyperbolic line-action substitutions give t_a + t_b + 2D.
bool criterion_product_formula(std::ostringstream& out) {
    std::mt19937 rng(211);
    for (int iter = 0; iter < 200; ++iter) {
        Rational D = random_positive_rational(rng, 8, 3);
        // reflections of a decorated line at 0 and at D; the composite shifts by 2D
        RootedTree dec = random_rooted_tree(rng, 3);
        std::uniform_int_distribution<int> kind_dist(0, dec.parent.empty() ? 0 : 1);
        int kind = kind_dist(rng);
        Rational c = kind == 0 ? random_positive_rational(rng, 10, 3) : Rational(0);
        std::vector<Rational> marks;
        if (kind == 1) marks = {c, c - 2 * D, c - 4 * D};
        LineWindow win =
            build_line_window({Rational(0), D, c, c - 2 * D, c - 4 * D}, marks, dec);
        if (win.tree.vertex_distance(win.line_vertex[Rational(0)], win.line_vertex[D]) != D) {
            out << "  core distance mismatch in the window\n";
            return false;
        }
        int x, gx, ggx;
        if (kind == 0) {
            x = win.line_vertex[c];
            gx = win.line_vertex[c - 2 * D];
            ggx = win.line_vertex[c - 4 * D];
        } else {
            std::uniform_int_distribution<size_t> node(0, dec.parent.size() - 1);
            size_t pick = node(rng);
            x = win.decoration_vertices[0][pick];
            gx = win.decoration_vertices[1][pick];
            ggx = win.decoration_vertices[2][pick];
        }
        Rational d1 = win.tree.vertex_distance(x, gx);
        Rational d2 = win.tree.vertex_distance(x, ggx);
        OrbitClassification cls = classify_from_orbit(d1, d2);
        if (cls.kind != IsometryReport::Kind::Hyperbolic ||
            cls.translation_length != 2 * D ||
            cls.translation_length != product_translation_length(Rational(0), Rational(0), D)) {
            out << "  elliptic pair case failed at iteration " << iter << "\n";
            return false;
        }
    }
    for (int iter = 0; iter < 200; ++iter) {
        Rational ta = random_positive_rational(rng), tb = random_positive_rational(rng);
        Rational D = random_positive_rational(rng, 6, 2);
        Rational h = make_rational(static_cast<long>(rng() % 7), 2);
        Rational T = product_translation_length(ta, tb, D);
        std::vector<MetricTree::Edge> edges{{0, 1, T}, {1, 2, T}};
        std::vector<int> tips{0, 1, 2};
        int next = 3;
        if (h > 0) {
            for (int k = 0; k < 3; ++k) {
                edges.push_back({k, next, h});
                tips[static_cast<size_t>(k)] = next++;
            }
        }
        MetricTree tree(next, std::move(edges));
        OrbitClassification cls = classify_from_orbit(
            tree.vertex_distance(tips[0], tips[1]), tree.vertex_distance(tips[0], tips[2]));
        if (cls.kind != IsometryReport::Kind::Hyperbolic || cls.translation_length != T) {
            out << "  hyperbolic substitution failed at iteration " << iter << "\n";
            return false;
        }
    }
    out << "  200 elliptic-pair cases and 200 hyperbolic substitutions exact\n";
    return true;
}

// 6. Global fixed point: pairwise-intersecting elliptic cores have a common
// point; constructed disjoint configurations do not.
bool criterion_global_fixed_point(std::ostringstream& out) {
    std::mt19937 rng(223);
    int done = 0, attempts = 0;
    while (done < 100 && attempts < 8000) {
        ++attempts;
        MetricTree t = random_tree(rng, 12);
        std::uniform_int_distribution<int> seed(0, 11);
        std::vector<Subtree> cores;
        std::uniform_int_distribution<int> core_count(2, 4);
        int k = core_count(rng);
        for (int i = 0; i < k; ++i) cores.push_back(random_subtree(rng, t, seed(rng), 6));
        bool pairwise = true;
        for (size_t i = 0; i < cores.size() && pairwise; ++i)
            for (size_t j = i + 1; j < cores.size() && pairwise; ++j) {
                bool hit = false;
                for (int v : cores[i].vertices)
                    if (std::find(cores[j].vertices.begin(), cores[j].vertices.end(), v) !=
                        cores[j].vertices.end())
                        hit = true;
                pairwise = hit;
            }
        if (!pairwise) continue;
        if (!common_fixed_point(t, cores).has_value()) {
            out << "  pairwise-intersecting cores without a common point\n";
            return false;
        }
        ++done;
    }
    if (done < 100) {
        out << "  only generated " << done << " pairwise-intersecting cases\n";
        return false;
    }
    MetricTree path(6, {{0, 1, make_rational(1)}, {1, 2, make_rational(1)},
                        {2, 3, make_rational(1)}, {3, 4, make_rational(1)},
                        {4, 5, make_rational(1)}});
    if (common_fixed_point(path, {Subtree{{0, 1}}, Subtree{{4, 5}}}).has_value()) {
        out << "  disjoint cores produced a common point\n";
        return false;
    }
    out << "  100 intersecting configurations and the disjoint control behave\n";
    return true;
}

// 7. 28-delta bound for sampled displacement minima on [x, Mx].
bool criterion_28delta(std::ostringstream& out) {
    std::mt19937 rng(227);
    HyperbolicContext ctx;
    double max_excess = 0.0;
    for (int iter = 0; iter < 100; ++iter) {
        Matrix2C m = random_loxodromic(rng);
        PointH3 x = random_point_within(rng, 5.0);
        double t = translation_length_trace(m);
        double d = min_displacement_on_segment(m, x, ctx).displacement;
        if (d > t + 28.0 * ctx.delta) {
            out << "  excess " << (d - t) << " beyond 28 delta\n";
            return false;
        }
        max_excess = std::max(max_excess, d - t);
    }
    out << "  empirical max excess " << max_excess << " (bound " << 28.0 * ctx.delta
        << ", expected <= " << 2.0 * ctx.delta << ")\n";
    return true;
}

// 8. Thin polygons: sampled defect <= (n-2) delta + 0.05.
bool criterion_thin_polygons(std::ostringstream& out) {
    std::mt19937 rng(229);
    HyperbolicContext ctx;
    double worst3 = 0.0, worst4 = 0.0;
    for (int iter = 0; iter < 100; ++iter) {
        std::vector<PointH3> tri{random_point_within(rng, 10.0), random_point_within(rng, 10.0),
                                 random_point_within(rng, 10.0)};
        double defect = polygon_thinness_defect(tri, ctx);
        worst3 = std::max(worst3, defect);
        if (defect > ctx.delta + 0.05) {
            out << "  triangle defect " << defect << " exceeds delta + 0.05\n";
            return false;
        }
    }
    for (int iter = 0; iter < 50; ++iter) {
        std::vector<PointH3> quad{random_point_within(rng, 10.0), random_point_within(rng, 10.0),
                                  random_point_within(rng, 10.0), random_point_within(rng, 10.0)};
        double defect = polygon_thinness_defect(quad, ctx);
        worst4 = std::max(worst4, defect);
        if (defect > 2 * ctx.delta + 0.05) {
            out << "  quadrilateral defect " << defect << " exceeds 2 delta + 0.05\n";
            return false;
        }
    }
    out << "  worst triangle defect " << worst3 << " (delta " << ctx.delta
        << "), worst quadrilateral " << worst4 << " (2 delta " << 2 * ctx.delta << ")\n";
    return true;
}

// 9. Newton exponents on randomized split products, with numeric tracking.
bool criterion_newton_exponents(std::ostringstream& out) {
    std::mt19937 rng(233);
    const double z0 = 1e4;
    std::uniform_int_distribution<int> kdist(1, 6), cdist(0, 3), mdist(2, 3);
    GaussianRational units[4] = {GaussianRational(1), GaussianRational(-1), GaussianRational::i(),
                                 -GaussianRational::i()};
    for (int iter = 0; iter < 20; ++iter) {
        std::set<int> ks;
        int m = mdist(rng);
        while (static_cast<int>(ks.size()) < m) ks.insert(kdist(rng));
        BivariatePolynomial p(GaussianRational(1));
        for (int k : ks) {
            p = p * (BivariatePolynomial::monomial(GaussianRational(1), 1, 0) -
                     BivariatePolynomial::monomial(units[cdist(rng)], 0, k));
        }
        std::set<Rational> expected;
        for (int k : ks) expected.insert(make_rational(k));
        std::set<Rational> got;
        for (const auto& e : asymptotic_exponents(p)) got.insert(e.data.exponent);
        if (got != expected) {
            out << "  exponent set mismatch at iteration " << iter << "\n";
            return false;
        }
        long long max_m = 0;
        for (const auto& [pt, c] : p.terms()) max_m = std::max(max_m, pt.m);
        std::vector<std::complex<double>> coeffs(static_cast<size_t>(max_m) + 1, 0.0);
        for (const auto& [pt, c] : p.terms())
            coeffs[static_cast<size_t>(pt.m)] +=
                c.to_complex() * std::pow(z0, static_cast<double>(pt.n));
        std::vector<std::complex<double>> roots = find_roots(coeffs);
        for (int k : ks) {
            double best = 1e9;
            for (const auto& r : roots)
                if (std::abs(r) > 0.0)
                    best = std::min(best,
                                    std::abs(std::log(std::abs(r)) / std::log(z0) - k) / k);
            if (best > 0.02) {
                out << "  branch " << k << " tracked with relative error " << best << "\n";
                return false;
            }
        }
    }
    out << "  20 randomized products: exact exponent sets, numeric tracking within 2%\n";
    return true;
}

// 10. Irreducibility probe on the canonical, reducible, and abelian curves.
bool criterion_irreducibility(std::ostringstream& out) {
    End inf = End::infinity();
    CurveSpec spec = canonical();
    IrreducibilityProbe probe = irreducibility_probe(spec.curve, inf, 3, 4);
    if (!probe.witness) {
        out << "  canonical curve: no witness found\n";
        return false;
    }
    if (render_word(probe.witness->first, spec.curve.alphabet) != "a" ||
        render_word(probe.witness->second, spec.curve.alphabet) != "b" ||
        probe.commutator_lengths.at(1) != 4) {
        out << "  canonical witness is not (a, b) with commutator length 4\n";
        return false;
    }
    CurveSpec reducible = parse_curve_spec(kReducibleSpec);
    if (irreducibility_probe(reducible.curve, inf, 3, 4).witness.has_value()) {
        out << "  reducible curve produced a witness\n";
        return false;
    }
    CurveSpec abelian = parse_curve_spec(kAbelianSpec);
    if (irreducibility_probe(abelian.curve, inf, 3, 4).witness.has_value()) {
        out << "  abelian curve produced a witness\n";
        return false;
    }
    out << "  witness (a, b) with commutator length 4; controls yield none\n";
    return true;
}

// 11. Center contract against a 10^4-point quasi-random oracle grid.
bool criterion_center_contract(std::ostringstream& out) {
    HyperbolicContext ctx;
    auto grid_best = [&](const std::vector<Matrix2C>& mats) {
        double best = max_displacement(mats, PointH3::basepoint());
        for (int i = 1; i <= 10000; ++i) {
            PointH3 p({-4.0 + 8.0 * halton(i, 2), -4.0 + 8.0 * halton(i, 3)},
                      std::exp(-4.0 + 8.0 * halton(i, 5)));
            best = std::min(best, max_displacement(mats, p));
        }
        return best;
    };

    CurveSpec spec = canonical();
    std::vector<Matrix2C> mats;
    for (const auto& m : spec.curve.matrices) mats.push_back(m.evaluate({100.0, 0.0}));
    CenterResult c1 = approximate_center(mats, ctx, PointH3::basepoint());
    double gap1 = c1.radius - grid_best(mats);
    out << "  canonical at t=100: r_S " << c1.radius << ", gap " << gap1 << "\n";
    if (gap1 > 1.0) return false;

    double u = std::log(2.0);
    std::vector<Matrix2C> axes{Matrix2C(2.0, 0.0, 0.0, 0.5),
                               Matrix2C(std::cosh(u), std::sinh(u), std::sinh(u), std::cosh(u))};
    CenterResult c2 = approximate_center(axes, ctx, PointH3({0.7, -0.4}, 2.0));
    double gap2 = c2.radius - grid_best(axes);
    out << "  perpendicular axes: r_S " << c2.radius << ", gap " << gap2 << "\n";
    return gap2 <= 1.0;
}

}  // namespace

int main() {
    std::vector<Criterion> criteria{
        {"canonical-curve length table (exact, oracle-checked)", criterion_length_table},
        {"three-engine agreement on the radius-3 ball", criterion_three_engines},
        {"PLF convergence at t = 2^n", criterion_plf_convergence},
        {"tree realization: defect 0, exact reconstruction, half-integers",
         criterion_tree_realization},
        {"product formula on constructed actions", criterion_product_formula},
        {"global fixed point for pairwise-intersecting cores", criterion_global_fixed_point},
        {"28-delta displacement bound", criterion_28delta},
        {"thin polygons", criterion_thin_polygons},
        {"Newton asymptotic exponents with numeric tracking", criterion_newton_exponents},
        {"irreducibility probe", criterion_irreducibility},
        {"approximate-center contract", criterion_center_contract},
    };
    int failures = 0;
    for (size_t k = 0; k < criteria.size(); ++k) {
        std::ostringstream detail;
        bool ok = false;
        try {
            ok = criteria[k].run(detail);
        } catch (const std::exception& e) {
            detail << "  exception: " << e.what() << "\n";
        }
        std::printf("[%s] criterion %zu: %s\n", ok ? "PASS" : "FAIL", k + 1,
                    criteria[k].name.c_str());
        std::fputs(detail.str().c_str(), stdout);
        if (!ok) ++failures;
    }
    std::printf("%zu/%zu acceptance criteria passed\n", criteria.size() - failures,
                criteria.size());
    return failures == 0 ? 0 : 1;
}
