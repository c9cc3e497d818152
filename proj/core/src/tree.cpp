#include "treelim/tree.hpp"

#include <algorithm>
#include <sstream>

namespace treelim {

MetricTree::MetricTree(int vertex_count, std::vector<Edge> edges)
    : vertex_count_(vertex_count), edges_(std::move(edges)) {
    rebuild();
}

void MetricTree::rebuild() {
    if (vertex_count_ <= 0) throw TreeError("tree needs at least one vertex");
    if (edges_.size() != static_cast<size_t>(vertex_count_) - 1)
        throw TreeError("a tree on n vertices has n-1 edges");
    adj_.assign(static_cast<size_t>(vertex_count_), {});
    for (size_t e = 0; e < edges_.size(); ++e) {
        const Edge& ed = edges_[e];
        if (ed.u < 0 || ed.u >= vertex_count_ || ed.v < 0 || ed.v >= vertex_count_ || ed.u == ed.v)
            throw TreeError("edge endpoints out of range");
        if (ed.length <= 0) throw TreeError("edge lengths must be positive");
        adj_[static_cast<size_t>(ed.u)].emplace_back(ed.v, static_cast<int>(e));
        adj_[static_cast<size_t>(ed.v)].emplace_back(ed.u, static_cast<int>(e));
    }
    parent_.assign(static_cast<size_t>(vertex_count_), -1);
    parent_edge_.assign(static_cast<size_t>(vertex_count_), -1);
    depth_.assign(static_cast<size_t>(vertex_count_), -1);
    root_dist_.assign(static_cast<size_t>(vertex_count_), Rational(0));
    std::vector<int> stack{0};
    depth_[0] = 0;
    int seen = 0;
    while (!stack.empty()) {
        int v = stack.back();
        stack.pop_back();
        ++seen;
        for (auto [w, e] : adj_[static_cast<size_t>(v)]) {
            if (depth_[static_cast<size_t>(w)] >= 0) continue;
            depth_[static_cast<size_t>(w)] = depth_[static_cast<size_t>(v)] + 1;
            parent_[static_cast<size_t>(w)] = v;
            parent_edge_[static_cast<size_t>(w)] = e;
            root_dist_[static_cast<size_t>(w)] =
                root_dist_[static_cast<size_t>(v)] + edges_[static_cast<size_t>(e)].length;
            stack.push_back(w);
        }
    }
    if (seen != vertex_count_) throw TreeError("tree is not connected");
}

std::optional<int> MetricTree::edge_between(int u, int v) const {
    for (auto [w, e] : adj_[static_cast<size_t>(u)]) {
        if (w == v) return e;
    }
    return std::nullopt;
}

Rational MetricTree::vertex_distance(int u, int v) const {
    int a = u, b = v;
    Rational da = root_dist_[static_cast<size_t>(u)], db = root_dist_[static_cast<size_t>(v)];
    while (depth_[static_cast<size_t>(a)] > depth_[static_cast<size_t>(b)]) a = parent_[static_cast<size_t>(a)];
    while (depth_[static_cast<size_t>(b)] > depth_[static_cast<size_t>(a)]) b = parent_[static_cast<size_t>(b)];
    while (a != b) {
        a = parent_[static_cast<size_t>(a)];
        b = parent_[static_cast<size_t>(b)];
    }
    return da + db - 2 * root_dist_[static_cast<size_t>(a)];
}

std::vector<int> MetricTree::path(int u, int v) const {
    std::vector<int> up, down;
    int a = u, b = v;
    while (depth_[static_cast<size_t>(a)] > depth_[static_cast<size_t>(b)]) {
        up.push_back(a);
        a = parent_[static_cast<size_t>(a)];
    }
    while (depth_[static_cast<size_t>(b)] > depth_[static_cast<size_t>(a)]) {
        down.push_back(b);
        b = parent_[static_cast<size_t>(b)];
    }
    while (a != b) {
        up.push_back(a);
        a = parent_[static_cast<size_t>(a)];
        down.push_back(b);
        b = parent_[static_cast<size_t>(b)];
    }
    up.push_back(a);
    up.insert(up.end(), down.rbegin(), down.rend());
    return up;
}

TreePoint TreePoint::on_edge(const MetricTree& tree, int e, Rational offset) {
    const MetricTree::Edge& ed = tree.edge(e);
    if (offset < 0 || offset > ed.length) throw TreeError("edge offset out of bounds");
    if (offset == 0) return at_vertex(ed.u);
    if (offset == ed.length) return at_vertex(ed.v);
    TreePoint p;
    p.edge = e;
    p.offset = std::move(offset);
    return p;
}

Rational tree_distance(const MetricTree& tree, const TreePoint& p, const TreePoint& q) {
    if (p.is_vertex() && q.is_vertex()) return tree.vertex_distance(p.vertex, q.vertex);
    if (!p.is_vertex() && !q.is_vertex() && p.edge == q.edge) return abs(p.offset - q.offset);

    auto ends = [&](const TreePoint& x) -> std::vector<std::pair<int, Rational>> {
        if (x.is_vertex()) return {{x.vertex, Rational(0)}};
        const MetricTree::Edge& ed = tree.edge(x.edge);
        return {{ed.u, x.offset}, {ed.v, ed.length - x.offset}};
    };
    std::optional<Rational> best;
    for (const auto& [a, wa] : ends(p)) {
        for (const auto& [b, wb] : ends(q)) {
            Rational d = wa + tree.vertex_distance(a, b) + wb;
            if (!best || d < *best) best = d;
        }
    }
    return *best;
}

void validate_subtree(const MetricTree& tree, const Subtree& s) {
    if (s.vertices.empty()) throw TreeError("subtree must be nonempty");
    std::vector<char> in(static_cast<size_t>(tree.vertex_count()), 0);
    for (int v : s.vertices) {
        if (v < 0 || v >= tree.vertex_count()) throw TreeError("subtree vertex out of range");
        in[static_cast<size_t>(v)] = 1;
    }
    // connected?
    std::vector<int> stack{s.vertices.front()};
    std::vector<char> seen(static_cast<size_t>(tree.vertex_count()), 0);
    seen[static_cast<size_t>(s.vertices.front())] = 1;
    size_t count = 1;
    while (!stack.empty()) {
        int v = stack.back();
        stack.pop_back();
        for (auto [w, e] : tree.neighbors(v)) {
            (void)e;
            if (in[static_cast<size_t>(w)] && !seen[static_cast<size_t>(w)]) {
                seen[static_cast<size_t>(w)] = 1;
                ++count;
                stack.push_back(w);
            }
        }
    }
    std::vector<int> uniq = s.vertices;
    std::sort(uniq.begin(), uniq.end());
    uniq.erase(std::unique(uniq.begin(), uniq.end()), uniq.end());
    if (count != uniq.size()) throw TreeError("subtree is not connected (hence not convex)");
}

TreeIsometry::TreeIsometry(const MetricTree& tree, std::vector<int> vertex_map)
    : map_(std::move(vertex_map)) {
    int n = tree.vertex_count();
    if (map_.size() != static_cast<size_t>(n)) throw TreeError("vertex map has wrong size");
    std::vector<char> hit(static_cast<size_t>(n), 0);
    for (int v : map_) {
        if (v < 0 || v >= n || hit[static_cast<size_t>(v)]) throw TreeError("vertex map is not a bijection");
        hit[static_cast<size_t>(v)] = 1;
    }
    for (const auto& e : tree.edges()) {
        auto img = tree.edge_between(map_[static_cast<size_t>(e.u)], map_[static_cast<size_t>(e.v)]);
        if (!img) throw TreeError("vertex map does not preserve adjacency");
        if (tree.edge(*img).length != e.length)
            throw TreeError("vertex map does not preserve edge lengths");
    }
}

TreeIsometry TreeIsometry::compose(const MetricTree& tree, const TreeIsometry& then) const {
    std::vector<int> m(map_.size());
    for (size_t v = 0; v < map_.size(); ++v) m[v] = then.apply(map_[v]);
    return TreeIsometry(tree, std::move(m));
}

TreeIsometry TreeIsometry::inverse(const MetricTree& tree) const {
    std::vector<int> m(map_.size());
    for (size_t v = 0; v < map_.size(); ++v) m[static_cast<size_t>(map_[v])] = static_cast<int>(v);
    return TreeIsometry(tree, std::move(m));
}

TreePoint apply_isometry(const MetricTree& tree, const TreeIsometry& tau, const TreePoint& p) {
    if (p.is_vertex()) return TreePoint::at_vertex(tau.apply(p.vertex));
    const MetricTree::Edge& ed = tree.edge(p.edge);
    int iu = tau.apply(ed.u), iv = tau.apply(ed.v);
    auto e2 = tree.edge_between(iu, iv);
    if (!e2) throw TreeError("isometry image of edge missing");
    const MetricTree::Edge& target = tree.edge(*e2);
    Rational offset = (target.u == iu) ? p.offset : target.length - p.offset;
    return TreePoint::on_edge(tree, *e2, offset);
}

IsometryReport classify_isometry(const MetricTree& tree, const TreeIsometry& tau) {
    IsometryReport report;
    report.kind = IsometryReport::Kind::Elliptic;
    report.translation_length = 0;
    std::vector<int> fixed;
    for (int v = 0; v < tree.vertex_count(); ++v) {
        if (tau.apply(v) == v) fixed.push_back(v);
    }
    if (!fixed.empty()) {
        report.tree = tree;
        report.core = std::move(fixed);
        return report;
    }
    // No fixed vertex: some edge is inverted and its midpoint is fixed.
    for (size_t e = 0; e < tree.edges().size(); ++e) {
        const MetricTree::Edge& ed = tree.edges()[e];
        if (tau.apply(ed.u) == ed.v && tau.apply(ed.v) == ed.u) {
            std::vector<MetricTree::Edge> edges = tree.edges();
            int mid = tree.vertex_count();
            Rational half = ed.length / 2;
            edges[e] = {ed.u, mid, half};
            edges.push_back({mid, ed.v, half});
            report.tree = MetricTree(tree.vertex_count() + 1, std::move(edges));
            report.core = {mid};
            report.subdivided = true;
            return report;
        }
    }
    throw TreeError("automorphism of a finite tree must fix a vertex or invert an edge");
}

OrbitClassification classify_from_orbit(const Rational& d1, const Rational& d2) {
    if (d1 < 0 || d2 < 0) throw TreeError("orbit distances must be nonnegative");
    if (d2 > 2 * d1) throw TreeError("not realizable in a tree: d(x,g^2x) > 2 d(x,gx)");
    OrbitClassification out;
    if (d2 > d1) {
        out.kind = IsometryReport::Kind::Hyperbolic;
        out.translation_length = d2 - d1;
        out.dist_to_core = d1 - d2 / 2;
    } else {
        out.kind = IsometryReport::Kind::Elliptic;
        out.translation_length = 0;
        out.dist_to_core = d1 / 2;
    }
    return out;
}

Rational product_translation_length(const Rational& t_a, const Rational& t_b,
                                    const Rational& core_dist) {
    if (t_a < 0 || t_b < 0) throw TreeError("translation lengths must be nonnegative");
    if (core_dist <= 0) throw TreeError("formula requires disjoint cores");
    return t_a + t_b + 2 * core_dist;
}

std::optional<TreePoint> common_fixed_point(const MetricTree& tree,
                                            const std::vector<Subtree>& cores) {
    if (cores.empty()) throw TreeError("no cores given");
    std::vector<int> counts(static_cast<size_t>(tree.vertex_count()), 0);
    for (const auto& c : cores) {
        validate_subtree(tree, c);
        std::vector<int> uniq = c.vertices;
        std::sort(uniq.begin(), uniq.end());
        uniq.erase(std::unique(uniq.begin(), uniq.end()), uniq.end());
        for (int v : uniq) ++counts[static_cast<size_t>(v)];
    }
    for (int v = 0; v < tree.vertex_count(); ++v) {
        if (counts[static_cast<size_t>(v)] == static_cast<int>(cores.size()))
            return TreePoint::at_vertex(v);
    }
    return std::nullopt;
}

void LimitMetric::validate_shape() const {
    size_t n = size();
    if (d.size() != n) throw TreeError("metric matrix size mismatch");
    for (size_t i = 0; i < n; ++i) {
        if (d[i].size() != n) throw TreeError("metric matrix is not square");
        if (d[i][i] != 0) throw TreeError("metric has nonzero diagonal");
        for (size_t j = 0; j < n; ++j) {
            if (d[i][j] < 0) throw TreeError("metric has a negative entry");
            if (d[i][j] != d[j][i]) throw TreeError("metric is not symmetric");
        }
    }
}

void LimitMetric::validate() const {
    validate_shape();
    size_t n = size();
    for (size_t i = 0; i < n; ++i)
        for (size_t j = i + 1; j < n; ++j)
            for (size_t k = 0; k < n; ++k)
                if (d[i][j] > d[i][k] + d[k][j])
                    throw TreeError("metric violates the triangle inequality");
}

FourPointResult four_point_defect(const LimitMetric& m) {
    size_t n = m.size();
    FourPointResult out;
    out.defect = 0;
    bool first = true;
    auto consider = [&](const Rational& value, std::array<size_t, 4> tuple) {
        if (first || value > out.defect) {
            out.defect = value;
            out.witness = tuple;
            first = false;
        }
    };
    // Degenerate tuples (one repeated point) reduce to triangle defects.
    for (size_t i = 0; i < n; ++i)
        for (size_t j = i + 1; j < n; ++j)
            for (size_t k = 0; k < n; ++k) {
                if (k == i || k == j) continue;
                consider(m.dist(i, j) - m.dist(i, k) - m.dist(k, j), {i, j, k, k});
            }
    for (size_t i = 0; i < n; ++i)
        for (size_t j = i + 1; j < n; ++j)
            for (size_t k = j + 1; k < n; ++k)
                for (size_t l = k + 1; l < n; ++l) {
                    Rational p1 = m.dist(i, j) + m.dist(k, l);
                    Rational p2 = m.dist(i, k) + m.dist(j, l);
                    Rational p3 = m.dist(i, l) + m.dist(j, k);
                    // largest minus second largest
                    if (p1 < p2) swap(p1, p2);
                    if (p2 < p3) swap(p2, p3);
                    if (p1 < p2) swap(p1, p2);
                    consider(p1 - p2, {i, j, k, l});
                }
    if (first) {
        out.defect = 0;  // fewer than 3 points: vacuously additive
        out.witness = {0, 0, 0, 0};
    }
    return out;
}

MinimalSubtreeResult minimal_subtree(const MetricTree& tree, const std::vector<Subtree>& axes) {
    if (axes.empty()) throw TreeError("minimal_subtree needs at least one axis");
    std::vector<char> marked(static_cast<size_t>(tree.vertex_count()), 0);
    for (const auto& a : axes) {
        validate_subtree(tree, a);
        for (int v : a.vertices) marked[static_cast<size_t>(v)] = 1;
    }
    // Prune unmarked leaves until only the spanned subtree remains.
    std::vector<char> alive(static_cast<size_t>(tree.vertex_count()), 1);
    std::vector<int> deg(static_cast<size_t>(tree.vertex_count()), 0);
    for (int v = 0; v < tree.vertex_count(); ++v) deg[static_cast<size_t>(v)] = tree.degree(v);
    bool changed = true;
    while (changed) {
        changed = false;
        for (int v = 0; v < tree.vertex_count(); ++v) {
            if (alive[static_cast<size_t>(v)] && !marked[static_cast<size_t>(v)] &&
                deg[static_cast<size_t>(v)] <= 1) {
                alive[static_cast<size_t>(v)] = 0;
                changed = true;
                for (auto [w, e] : tree.neighbors(v)) {
                    (void)e;
                    if (alive[static_cast<size_t>(w)]) --deg[static_cast<size_t>(w)];
                }
            }
        }
    }
    MinimalSubtreeResult out;
    std::vector<int> newid(static_cast<size_t>(tree.vertex_count()), -1);
    for (int v = 0; v < tree.vertex_count(); ++v) {
        if (alive[static_cast<size_t>(v)]) {
            newid[static_cast<size_t>(v)] = static_cast<int>(out.to_original.size());
            out.to_original.push_back(v);
        }
    }
    std::vector<MetricTree::Edge> edges;
    for (const auto& e : tree.edges()) {
        if (alive[static_cast<size_t>(e.u)] && alive[static_cast<size_t>(e.v)])
            edges.push_back({newid[static_cast<size_t>(e.u)], newid[static_cast<size_t>(e.v)], e.length});
    }
    out.tree = MetricTree(static_cast<int>(out.to_original.size()), std::move(edges));
    return out;
}

HalfIntegerReport half_integer_branch_check(const MetricTree& tree,
                                            const std::vector<TreePoint>& marked) {
    std::vector<TreePoint> branch;
    for (int v = 0; v < tree.vertex_count(); ++v) {
        if (tree.degree(v) >= 3) branch.push_back(TreePoint::at_vertex(v));
    }
    HalfIntegerReport report;
    report.worst_deviation = 0;
    auto check_pair = [&](const TreePoint& p, const TreePoint& q) {
        Rational d = tree_distance(tree, p, q);
        Rational twice = 2 * d;
        if (twice.get_den() == 1) return;
        // distance from 2d to the nearest integer
        mpz_class num = twice.get_num(), den = twice.get_den();
        mpz_class fl = num / den;  // floor for positive values
        Rational frac = twice - Rational(fl);
        Rational deviation = frac <= Rational(1, 2) ? frac : 1 - frac;
        deviation /= 2;
        if (report.ok || deviation > report.worst_deviation) {
            report.ok = false;
            report.witness = {p, q};
            report.witness_distance = d;
            report.worst_deviation = deviation;
        }
    };
    for (size_t i = 0; i < branch.size(); ++i)
        for (size_t j = i + 1; j < branch.size(); ++j) check_pair(branch[i], branch[j]);
    for (const auto& p : marked)
        for (const auto& b : branch) check_pair(p, b);
    return report;
}

std::string serialize_tree(const MetricTree& tree) {
    std::vector<std::tuple<int, int, Rational>> rows;
    for (const auto& e : tree.edges()) {
        rows.emplace_back(std::min(e.u, e.v), std::max(e.u, e.v), e.length);
    }
    std::sort(rows.begin(), rows.end(),
              [](const auto& a, const auto& b) {
                  if (std::get<0>(a) != std::get<0>(b)) return std::get<0>(a) < std::get<0>(b);
                  return std::get<1>(a) < std::get<1>(b);
              });
    std::ostringstream out;
    for (const auto& [u, v, len] : rows) out << u << " " << v << " " << to_string(len) << "\n";
    return out.str();
}

MetricTree parse_tree(const std::string& text) {
    std::istringstream in(text);
    std::vector<MetricTree::Edge> edges;
    int maxv = 0;
    std::string line;
    while (std::getline(in, line)) {
        if (line.empty()) continue;
        std::istringstream row(line);
        int u, v;
        std::string len;
        if (!(row >> u >> v >> len)) throw TreeError("bad tree edge line: " + line);
        Rational q(len);
        q.canonicalize();
        edges.push_back({u, v, q});
        maxv = std::max({maxv, u, v});
    }
    return MetricTree(maxv + 1, std::move(edges));
}

}  // namespace treelim
