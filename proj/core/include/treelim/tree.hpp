#pragma once

#include <array>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "treelim/gaussian.hpp"

namespace treelim {

struct TreeError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Finite metric simplicial tree. Vertices are 0..vertex_count-1, every edge
// length is a positive rational, and the edge set is checked to be a tree.
class MetricTree {
public:
    struct Edge {
        int u, v;
        Rational length;
    };

    MetricTree() : vertex_count_(1) { rebuild(); }
    MetricTree(int vertex_count, std::vector<Edge> edges);

    int vertex_count() const { return vertex_count_; }
    const std::vector<Edge>& edges() const { return edges_; }
    const Edge& edge(int e) const { return edges_[static_cast<size_t>(e)]; }
    int degree(int v) const { return static_cast<int>(adj_[static_cast<size_t>(v)].size()); }
    const std::vector<std::pair<int, int>>& neighbors(int v) const {  // (vertex, edge index)
        return adj_[static_cast<size_t>(v)];
    }
    std::optional<int> edge_between(int u, int v) const;

    Rational vertex_distance(int u, int v) const;
    // Ordered vertex path from u to v, inclusive.
    std::vector<int> path(int u, int v) const;

private:
    void rebuild();  // validates and prepares distance structures
    int vertex_count_;
    std::vector<Edge> edges_;
    std::vector<std::vector<std::pair<int, int>>> adj_;
    std::vector<int> parent_;
    std::vector<int> parent_edge_;
    std::vector<int> depth_;
    std::vector<Rational> root_dist_;
};

// A point of the tree: a vertex, or an interior point of an edge at a given
// offset from edge.u. Endpoint offsets canonicalize to the vertex form.
struct TreePoint {
    int vertex = -1;          // >= 0 for vertex form
    int edge = -1;            // >= 0 for interior form
    Rational offset;          // 0 < offset < length for interior form

    static TreePoint at_vertex(int v) {
        TreePoint p; p.vertex = v; return p;
    }
    static TreePoint on_edge(const MetricTree& tree, int e, Rational offset);

    bool is_vertex() const { return vertex >= 0; }
    friend bool operator==(const TreePoint&, const TreePoint&) = default;
};

Rational tree_distance(const MetricTree& tree, const TreePoint& p, const TreePoint& q);

// Convex subtrees of a tree are exactly the connected vertex sets.
struct Subtree {
    std::vector<int> vertices;
};

void validate_subtree(const MetricTree& tree, const Subtree& s);

// Length-preserving automorphism, given by its vertex bijection.
class TreeIsometry {
public:
    TreeIsometry(const MetricTree& tree, std::vector<int> vertex_map);

    int apply(int v) const { return map_[static_cast<size_t>(v)]; }
    const std::vector<int>& vertex_map() const { return map_; }
    TreeIsometry compose(const MetricTree& tree, const TreeIsometry& then) const;
    TreeIsometry inverse(const MetricTree& tree) const;

private:
    std::vector<int> map_;
};

TreePoint apply_isometry(const MetricTree& tree, const TreeIsometry& tau, const TreePoint& p);

struct IsometryReport {
    enum class Kind { Elliptic, Hyperbolic };
    Kind kind = Kind::Elliptic;
    Rational translation_length;
    MetricTree tree;          // input tree, subdivided when the core is an edge midpoint
    std::vector<int> core;    // fixed vertex set in `tree`
    bool subdivided = false;
};

// On a finite tree every automorphism is elliptic; the core is the fixed
// subtree, or the midpoint of an inverted edge (made a vertex by subdividing).
IsometryReport classify_isometry(const MetricTree& tree, const TreeIsometry& tau);

struct OrbitClassification {
    IsometryReport::Kind kind;
    Rational translation_length;
    Rational dist_to_core;  // d(x, Fix) for elliptic, d(x, axis) for hyperbolic
};

// From d1 = d(x, gx) and d2 = d(x, g^2 x) in any R-tree:
// hyperbolic iff d2 > d1, with t = d2 - d1; requires d2 <= 2 d1.
OrbitClassification classify_from_orbit(const Rational& d1, const Rational& d2);

// t(ab) = t(a) + t(b) + 2 d(core(a), core(b)), valid for disjoint cores.
Rational product_translation_length(const Rational& t_a, const Rational& t_b,
                                    const Rational& core_dist);

// A point in the intersection of all cores, if the intersection is nonempty
// (by the Helly property this is equivalent to pairwise intersection).
std::optional<TreePoint> common_fixed_point(const MetricTree& tree,
                                            const std::vector<Subtree>& cores);

// Finitely many labeled points with a pseudo-metric; labels[0] is the basepoint.
struct LimitMetric {
    std::vector<std::string> labels;
    std::vector<std::vector<Rational>> d;

    size_t size() const { return labels.size(); }
    const Rational& dist(size_t i, size_t j) const { return d[i][j]; }
    void validate_shape() const;  // square, symmetric, zero diagonal, nonnegative
    void validate() const;        // shape plus the triangle inequality
};

struct FourPointResult {
    Rational defect;
    std::array<size_t, 4> witness{0, 0, 0, 0};
};

// Max over 4-tuples of d(w,x) + d(y,z) - max(d(w,y) + d(x,z), d(w,z) + d(x,y)).
// Nonpositive exactly for additive (tree) pseudo-metrics; degenerate tuples
// cover the triangle inequality.
FourPointResult four_point_defect(const LimitMetric& m);

struct NotAdditive : TreeError {
    NotAdditive(std::string what, std::array<size_t, 4> witness)
        : TreeError(std::move(what)), witness(witness) {}
    std::array<size_t, 4> witness;
};

struct Reconstruction {
    MetricTree tree;
    std::vector<TreePoint> placement;  // by point index of the metric; always vertex form
};

// Exact realization of an additive pseudo-metric as a metric tree. Points are
// inserted in input order and attached at their Gromov-product location;
// distances are reproduced exactly. Throws NotAdditive with a witness tuple
// when the four-point condition fails.
Reconstruction reconstruct_tree(const LimitMetric& m);

struct MinimalSubtreeResult {
    MetricTree tree;
    std::vector<int> to_original;  // new vertex id -> original id
};

// Spanned subtree (convex hull) of the union of the given subtrees.
MinimalSubtreeResult minimal_subtree(const MetricTree& tree, const std::vector<Subtree>& axes);

struct HalfIntegerReport {
    bool ok = true;
    // worst offender: the pair of points and their distance
    std::optional<std::pair<TreePoint, TreePoint>> witness;
    Rational witness_distance;
    Rational worst_deviation;  // distance to the nearest half-integer
};

// Checks that distances between branch vertices (degree >= 3), and from the
// given marked points to branch vertices, are integer multiples of 1/2.
HalfIntegerReport half_integer_branch_check(const MetricTree& tree,
                                            const std::vector<TreePoint>& marked = {});

std::string serialize_tree(const MetricTree& tree);   // lines "u v p/q"
MetricTree parse_tree(const std::string& text);

}  // namespace treelim
