#pragma once

#include <vector>

#include "treelim/bivariate.hpp"
#include "treelim/polynomial.hpp"

namespace treelim {

// Data of one polygon edge e: the terms of p on e assemble to
// y^r z^s q(y^a z^b) with gcd(a, b) = 1 and q(0) != 0. For edges whose
// outward normal (u, v) has v != 0, `exponent` is u/v, the limit of
// log|y|/log|z| along the branches picked out by e.
struct EdgeData {
    long long r = 0, s = 0;
    long long a = 0, b = 0;
    Polynomial q;
    Rational exponent;
};

struct PolygonEdge {
    LatticePoint from, to;
    long long normal_u = 0, normal_v = 0;  // primitive outward normal
    EdgeData data;
};

// Convex hull of the support of a bivariate polynomial, with edge data.
// For a segment hull the two traversal directions are listed as two edges
// with opposite normals; a single support point yields no edges.
struct NewtonPolygon {
    std::vector<LatticePoint> support;  // sorted
    std::vector<LatticePoint> hull;     // counterclockwise vertex list
    std::vector<PolygonEdge> edges;
};

NewtonPolygon newton_polygon(const BivariatePolynomial& p);

// One entry per hull edge whose outward normal has v > 0; these are exactly
// the |z| -> infinity branches, and data.exponent is the limit of
// log|y|/log|z| on each.
std::vector<PolygonEdge> asymptotic_exponents(const BivariatePolynomial& p);

std::complex<double> evaluate_bivariate(const BivariatePolynomial& p,
                                        std::complex<double> y, std::complex<double> z);

// Rebuilds the monomials y^r z^s q(y^a z^b) encoded by an edge.
BivariatePolynomial edge_terms(const PolygonEdge& e);

}  // namespace treelim
