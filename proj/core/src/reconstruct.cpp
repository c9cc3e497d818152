#include <algorithm>

#include "treelim/tree.hpp"

namespace treelim {

namespace {

struct Builder {
    std::vector<MetricTree::Edge> edges;
    int nverts = 0;

    MetricTree snapshot() const { return MetricTree(nverts, edges); }

    int subdivide(int a, int b, const Rational& offset_from_a) {
        for (auto& e : edges) {
            if ((e.u == a && e.v == b) || (e.u == b && e.v == a)) {
                Rational from_u = (e.u == a) ? offset_from_a : e.length - offset_from_a;
                if (from_u <= 0 || from_u >= e.length) throw TreeError("bad subdivision offset");
                int mid = nverts++;
                Rational rest = e.length - from_u;
                int old_v = e.v;
                e.v = mid;
                e.length = from_u;
                edges.push_back({mid, old_v, rest});
                return mid;
            }
        }
        throw TreeError("edge to subdivide not found");
    }
};

}  // namespace

Reconstruction reconstruct_tree(const LimitMetric& m) {
    m.validate_shape();
    FourPointResult fp = four_point_defect(m);  // subsumes the triangle inequality
    if (fp.defect > 0) throw NotAdditive("metric is not additive", fp.witness);

    size_t n = m.size();
    Reconstruction out;
    out.placement.resize(n);

    // Fold zero-distance points onto their first representative.
    std::vector<size_t> rep(n);
    std::vector<size_t> classes;  // representative indices, in input order
    for (size_t i = 0; i < n; ++i) {
        rep[i] = i;
        for (size_t j = 0; j < i; ++j) {
            if (m.dist(i, j) == 0) { rep[i] = rep[j]; break; }
        }
        if (rep[i] == i) classes.push_back(i);
    }

    if (classes.size() == 1) {
        out.tree = MetricTree();
        for (size_t i = 0; i < n; ++i) out.placement[i] = TreePoint::at_vertex(0);
        return out;
    }

    Builder builder;
    builder.nverts = 2;
    size_t base = classes[0];
    builder.edges.push_back({0, 1, m.dist(base, classes[1])});
    std::map<size_t, int> pos;  // class representative -> vertex
    pos[base] = 0;
    pos[classes[1]] = 1;

    for (size_t ci = 2; ci < classes.size(); ++ci) {
        size_t x = classes[ci];
        Rational dx0 = m.dist(base, x);
        // Branch point of x off the current tree sits at the max Gromov
        // product along the path to the earliest maximizer.
        Rational gmax = 0;
        size_t ystar = base;
        for (size_t cj = 1; cj < ci; ++cj) {
            size_t y = classes[cj];
            Rational g = (dx0 + m.dist(base, y) - m.dist(x, y)) / 2;
            if (g > gmax) { gmax = g; ystar = y; }
        }

        int attach;
        if (ystar == base) {
            attach = 0;
        } else {
            MetricTree t = builder.snapshot();
            std::vector<int> path = t.path(0, pos[ystar]);
            Rational walked = 0;
            attach = -1;
            for (size_t k = 0; k + 1 < path.size(); ++k) {
                if (walked == gmax) { attach = path[k]; break; }
                auto e = t.edge_between(path[k], path[k + 1]);
                Rational len = t.edge(*e).length;
                if (walked + len > gmax) {
                    attach = builder.subdivide(path[k], path[k + 1], gmax - walked);
                    break;
                }
                walked += len;
            }
            if (attach < 0) attach = pos[ystar];  // gmax equals the whole path length
        }

        Rational pendant = dx0 - gmax;
        if (pendant == 0) {
            pos[x] = attach;
        } else {
            int w = builder.nverts++;
            builder.edges.push_back({attach, w, pendant});
            pos[x] = w;
        }
    }

    // Suppress Steiner vertices of degree 2 that carry no point.
    std::vector<char> placed(static_cast<size_t>(builder.nverts), 0);
    for (const auto& [cls, v] : pos) placed[static_cast<size_t>(v)] = 1;
    bool changed = true;
    while (changed) {
        changed = false;
        std::vector<int> deg(static_cast<size_t>(builder.nverts), 0);
        for (const auto& e : builder.edges) {
            ++deg[static_cast<size_t>(e.u)];
            ++deg[static_cast<size_t>(e.v)];
        }
        for (int v = 0; v < builder.nverts && !changed; ++v) {
            if (placed[static_cast<size_t>(v)] || deg[static_cast<size_t>(v)] != 2) continue;
            int e1 = -1, e2 = -1;
            for (size_t e = 0; e < builder.edges.size(); ++e) {
                if (builder.edges[e].u == v || builder.edges[e].v == v) {
                    (e1 < 0 ? e1 : e2) = static_cast<int>(e);
                }
            }
            auto other = [&](int e) {
                return builder.edges[static_cast<size_t>(e)].u == v
                           ? builder.edges[static_cast<size_t>(e)].v
                           : builder.edges[static_cast<size_t>(e)].u;
            };
            MetricTree::Edge merged{other(e1), other(e2),
                                    builder.edges[static_cast<size_t>(e1)].length +
                                        builder.edges[static_cast<size_t>(e2)].length};
            builder.edges.erase(builder.edges.begin() + e2);
            builder.edges.erase(builder.edges.begin() + e1);
            builder.edges.push_back(merged);
            changed = true;
        }
    }

    // Compact vertex ids.
    std::vector<int> newid(static_cast<size_t>(builder.nverts), -1);
    int next = 0;
    std::vector<char> used(static_cast<size_t>(builder.nverts), 0);
    for (const auto& e : builder.edges) {
        used[static_cast<size_t>(e.u)] = 1;
        used[static_cast<size_t>(e.v)] = 1;
    }
    // Number placements first, in class order, so reports are stable.
    for (size_t cls : classes) {
        int v = pos[cls];
        if (newid[static_cast<size_t>(v)] < 0) newid[static_cast<size_t>(v)] = next++;
    }
    for (int v = 0; v < builder.nverts; ++v) {
        if (used[static_cast<size_t>(v)] && newid[static_cast<size_t>(v)] < 0)
            newid[static_cast<size_t>(v)] = next++;
    }
    std::vector<MetricTree::Edge> edges;
    for (const auto& e : builder.edges)
        edges.push_back({newid[static_cast<size_t>(e.u)], newid[static_cast<size_t>(e.v)], e.length});
    out.tree = MetricTree(next, std::move(edges));

    for (size_t i = 0; i < n; ++i)
        out.placement[i] = TreePoint::at_vertex(newid[static_cast<size_t>(pos[rep[i]])]);

    // The construction must reproduce the metric exactly.
    for (size_t i = 0; i < n; ++i) {
        for (size_t j = 0; j < n; ++j) {
            if (tree_distance(out.tree, out.placement[i], out.placement[j]) != m.dist(i, j))
                throw TreeError("reconstruction failed to reproduce the metric");
        }
    }
    return out;
}

}  // namespace treelim
