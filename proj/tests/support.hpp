#pragma once

// Shared test fixtures: deterministic RNG helpers, the canonical curve and
// its relatives, a Laurent-matrix length oracle, a brute-force convex hull,
// and random tree/metric generators.

#include <algorithm>
#include <complex>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <random>
#include <set>
#include <string>
#include <unistd.h>
#include <vector>

#include "treelim/bivariate.hpp"
#include "treelim/curve.hpp"
#include "treelim/laurent.hpp"
#include "treelim/tree.hpp"
#include "treelim/words.hpp"

namespace testsupport {

using namespace treelim;

inline const char* kCanonicalSpec = R"({
  "generators": {
    "a": [["t", "0"], ["0", "1/t"]],
    "b": [["1", "1"], ["1", "2"]]
  },
  "ends": ["infinity"],
  "words": ["a", "b", "ab", "ba", "abAB"],
  "ball_radius": 3
})";

inline const char* kReducibleSpec = R"({
  "generators": {
    "a": [["t", "0"], ["0", "1/t"]],
    "b": [["1", "1"], ["0", "1"]]
  },
  "ends": ["infinity"]
})";

inline const char* kAbelianSpec = R"({
  "generators": {
    "a": [["t", "0"], ["0", "1/t"]],
    "b": [["t", "0"], ["0", "1/t"]]
  },
  "ends": ["infinity"]
})";

inline const char* kConstantSpec = R"({
  "generators": {
    "a": [["0", "-1"], ["1", "0"]],
    "b": [["1", "1"], ["1", "2"]]
  },
  "ends": ["infinity"]
})";

inline std::string write_temp_file(const std::string& stem, const std::string& contents) {
    static int counter = 0;
    std::filesystem::path dir = std::filesystem::temp_directory_path() / "treelimits-tests";
    std::filesystem::create_directories(dir);
    std::filesystem::path path = dir / (stem + "-" + std::to_string(::getpid()) + "-" +
                                        std::to_string(counter++) + ".json");
    std::ofstream out(path);
    out << contents;
    return path.string();
}

inline Rational rational(long num, long den = 1) { return make_rational(num, den); }

inline Rational random_positive_rational(std::mt19937& rng, long max_num = 12, long max_den = 4) {
    std::uniform_int_distribution<long> num(1, max_num), den(1, max_den);
    return rational(num(rng), den(rng));
}

// ---- Laurent-matrix oracle ----------------------------------------------
// Independent route to limit lengths for curves whose entries are Laurent
// polynomials (diagonal-in-t generators and constant generators): multiply
// 2x2 Laurent matrices along the word and read off the top degree of
// trace^2 - 4.

struct LaurentMat {
    LaurentPolynomial a, b, c, d;

    static LaurentMat identity() {
        LaurentPolynomial one{GaussianRational(1)};
        return {one, LaurentPolynomial(), LaurentPolynomial(), one};
    }
    LaurentMat inverse_sl2() const { return {d, -b, -c, a}; }
    LaurentPolynomial trace() const { return a + d; }

    friend LaurentMat operator*(const LaurentMat& x, const LaurentMat& y) {
        return {x.a * y.a + x.b * y.c, x.a * y.b + x.b * y.d,
                x.c * y.a + x.d * y.c, x.c * y.b + x.d * y.d};
    }
};

inline LaurentMat laurent_word_matrix(const std::vector<LaurentMat>& gens, const Word& w) {
    LaurentMat acc = LaurentMat::identity();
    for (int l : w.letters) {
        size_t g = static_cast<size_t>(std::abs(l) - 1);
        acc = acc * (l > 0 ? gens[g] : gens[g].inverse_sl2());
    }
    return acc;
}

// max(V(f_w), 0) for the end t -> infinity, through Laurent degrees only.
inline long laurent_limit_length(const std::vector<LaurentMat>& gens, const Word& w) {
    LaurentPolynomial tr = laurent_word_matrix(gens, w).trace();
    LaurentPolynomial f = tr * tr - LaurentPolynomial(GaussianRational(4));
    if (f.is_zero()) return 0;
    return std::max(0, f.degree());
}

inline std::vector<LaurentMat> canonical_laurent_generators() {
    GaussianRational one(1), two(2);
    LaurentMat a{LaurentPolynomial::monomial(one, 1), LaurentPolynomial(),
                 LaurentPolynomial(), LaurentPolynomial::monomial(one, -1)};
    LaurentMat b{LaurentPolynomial(one), LaurentPolynomial(one),
                 LaurentPolynomial(one), LaurentPolynomial(two)};
    return {a, b};
}

// ---- Brute-force convex hull ---------------------------------------------
// A support point is a hull vertex iff it is not inside (or on) any triangle
// or segment spanned by the other points.

inline long long cross3(const LatticePoint& o, const LatticePoint& a, const LatticePoint& b) {
    return (a.m - o.m) * (b.n - o.n) - (a.n - o.n) * (b.m - o.m);
}

inline bool on_segment(const LatticePoint& p, const LatticePoint& a, const LatticePoint& b) {
    if (cross3(a, b, p) != 0) return false;
    return std::min(a.m, b.m) <= p.m && p.m <= std::max(a.m, b.m) &&
           std::min(a.n, b.n) <= p.n && p.n <= std::max(a.n, b.n);
}

inline bool in_triangle(const LatticePoint& p, const LatticePoint& a, const LatticePoint& b,
                        const LatticePoint& c) {
    long long d1 = cross3(a, b, p), d2 = cross3(b, c, p), d3 = cross3(c, a, p);
    bool has_neg = d1 < 0 || d2 < 0 || d3 < 0;
    bool has_pos = d1 > 0 || d2 > 0 || d3 > 0;
    return !(has_neg && has_pos);
}

inline std::set<std::pair<long long, long long>> brute_hull_vertices(
    std::vector<LatticePoint> pts) {
    std::sort(pts.begin(), pts.end());
    pts.erase(std::unique(pts.begin(), pts.end()), pts.end());
    std::set<std::pair<long long, long long>> hull;
    for (size_t i = 0; i < pts.size(); ++i) {
        bool inside = false;
        for (size_t a = 0; a < pts.size() && !inside; ++a) {
            if (a == i) continue;
            for (size_t b = a + 1; b < pts.size() && !inside; ++b) {
                if (b == i) continue;
                if (on_segment(pts[i], pts[a], pts[b])) inside = true;
                for (size_t c = b + 1; c < pts.size() && !inside; ++c) {
                    if (c == i) continue;
                    if (cross3(pts[a], pts[b], pts[c]) == 0) continue;
                    if (in_triangle(pts[i], pts[a], pts[b], pts[c])) inside = true;
                }
            }
        }
        if (!inside) hull.insert({pts[i].m, pts[i].n});
    }
    return hull;
}

// ---- Random trees and tree metrics ----------------------------------------

inline MetricTree random_tree(std::mt19937& rng, int n) {
    std::vector<MetricTree::Edge> edges;
    for (int v = 1; v < n; ++v) {
        std::uniform_int_distribution<int> pick(0, v - 1);
        edges.push_back({pick(rng), v, random_positive_rational(rng)});
    }
    return MetricTree(n, std::move(edges));
}

inline LimitMetric metric_of_tree(const MetricTree& tree, const std::vector<int>& labels) {
    LimitMetric m;
    for (int v : labels) m.labels.push_back("p" + std::to_string(v));
    size_t n = labels.size();
    m.d.assign(n, std::vector<Rational>(n, Rational(0)));
    for (size_t i = 0; i < n; ++i)
        for (size_t j = 0; j < n; ++j)
            m.d[i][j] = tree.vertex_distance(labels[i], labels[j]);
    return m;
}

// Random connected vertex set grown from a seed.
inline Subtree random_subtree(std::mt19937& rng, const MetricTree& tree, int seed, int grow) {
    std::set<int> verts{seed};
    std::vector<int> frontier{seed};
    std::uniform_real_distribution<double> coin(0.0, 1.0);
    for (int step = 0; step < grow && !frontier.empty(); ++step) {
        std::uniform_int_distribution<size_t> pick(0, frontier.size() - 1);
        int v = frontier[pick(rng)];
        for (auto [w, e] : tree.neighbors(v)) {
            (void)e;
            if (!verts.count(w) && coin(rng) < 0.6) {
                verts.insert(w);
                frontier.push_back(w);
            }
        }
    }
    Subtree s;
    s.vertices.assign(verts.begin(), verts.end());
    return s;
}

// ---- Rooted decorations for the periodic line actions ----------------------

struct RootedTree {
    // parent[k] is the index of the parent of decoration vertex k; lengths match.
    std::vector<int> parent;
    std::vector<Rational> length;
};

inline RootedTree random_rooted_tree(std::mt19937& rng, int max_extra) {
    std::uniform_int_distribution<int> count(0, max_extra);
    RootedTree r;
    int n = count(rng);
    for (int k = 0; k < n; ++k) {
        std::uniform_int_distribution<int> pick(-1, k - 1);
        r.parent.push_back(pick(rng));  // -1 attaches to the root
        r.length.push_back(random_positive_rational(rng, 6, 3));
    }
    return r;
}

// Window of a periodic line action: vertices at the given line coordinates,
// and a copy of the decoration tree hanging at each marked coordinate. The
// metric on the window is computed honestly by tree distances, never by the
// translation-length formulas under test.
struct LineWindow {
    MetricTree tree;
    std::map<Rational, int> line_vertex;                // coordinate -> vertex id
    std::vector<std::vector<int>> decoration_vertices;  // per marked coordinate
};

inline LineWindow build_line_window(std::vector<Rational> coords,
                                    const std::vector<Rational>& decorated_at,
                                    const RootedTree& decoration) {
    for (const Rational& c : decorated_at) coords.push_back(c);
    std::sort(coords.begin(), coords.end());
    coords.erase(std::unique(coords.begin(), coords.end()), coords.end());

    LineWindow win;
    std::vector<MetricTree::Edge> edges;
    int next = 0;
    for (const Rational& c : coords) win.line_vertex[c] = next++;
    for (size_t k = 1; k < coords.size(); ++k)
        edges.push_back({win.line_vertex[coords[k - 1]], win.line_vertex[coords[k]],
                         coords[k] - coords[k - 1]});
    for (const Rational& at : decorated_at) {
        std::vector<int> ids;
        int root = win.line_vertex[at];
        for (size_t k = 0; k < decoration.parent.size(); ++k) {
            int parent =
                decoration.parent[k] < 0 ? root : ids[static_cast<size_t>(decoration.parent[k])];
            ids.push_back(next);
            edges.push_back({parent, next++, decoration.length[k]});
        }
        win.decoration_vertices.push_back(ids);
    }
    win.tree = MetricTree(next, std::move(edges));
    return win;
}

}  // namespace testsupport
