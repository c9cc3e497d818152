#include "treelim/newton.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace treelim {

namespace {

long long cross(const LatticePoint& o, const LatticePoint& a, const LatticePoint& b) {
    return (a.m - o.m) * (b.n - o.n) - (a.n - o.n) * (b.m - o.m);
}

// Andrew monotone chain; counterclockwise, strict vertices only.
std::vector<LatticePoint> convex_hull(std::vector<LatticePoint> pts) {
    std::sort(pts.begin(), pts.end());
    pts.erase(std::unique(pts.begin(), pts.end()), pts.end());
    size_t n = pts.size();
    if (n <= 2) return pts;
    std::vector<LatticePoint> hull(2 * n);
    size_t k = 0;
    for (size_t i = 0; i < n; ++i) {
        while (k >= 2 && cross(hull[k - 2], hull[k - 1], pts[i]) <= 0) --k;
        hull[k++] = pts[i];
    }
    size_t lower = k + 1;
    for (size_t i = n - 1; i-- > 0;) {
        while (k >= lower && cross(hull[k - 2], hull[k - 1], pts[i]) <= 0) --k;
        hull[k++] = pts[i];
    }
    hull.resize(k - 1);
    return hull;
}

long long gcd_ll(long long a, long long b) { return std::gcd(a, b); }

PolygonEdge make_edge(const BivariatePolynomial& p, const LatticePoint& from, const LatticePoint& to) {
    PolygonEdge e;
    e.from = from;
    e.to = to;
    long long dm = to.m - from.m, dn = to.n - from.n;
    long long g = gcd_ll(std::abs(dm), std::abs(dn));
    // Outward normal of a counterclockwise edge: rotate the direction by -90.
    e.normal_u = dn / g;
    e.normal_v = -dm / g;

    // Primitive step (a, b), normalized lexicographically positive.
    long long a = dm / g, b = dn / g;
    if (a < 0 || (a == 0 && b < 0)) { a = -a; b = -b; }
    LatticePoint base = (a == dm / g && b == dn / g) ? from : to;
    e.data.a = a;
    e.data.b = b;
    e.data.r = base.m;
    e.data.s = base.n;
    std::vector<GaussianRational> qc(static_cast<size_t>(g) + 1);
    for (long long j = 0; j <= g; ++j) {
        qc[static_cast<size_t>(j)] = p.coeff({base.m + j * a, base.n + j * b});
    }
    e.data.q = Polynomial(std::move(qc));
    if (e.normal_v != 0) {
        Rational ex(mpz_class(static_cast<long>(e.normal_u)),
                    mpz_class(static_cast<long>(e.normal_v)));
        ex.canonicalize();
        e.data.exponent = ex;
    }
    return e;
}

}  // namespace

NewtonPolygon newton_polygon(const BivariatePolynomial& p) {
    if (p.is_zero()) throw std::domain_error("newton polygon of zero polynomial");
    NewtonPolygon np;
    for (const auto& [pt, c] : p.terms()) np.support.push_back(pt);
    np.hull = convex_hull(np.support);
    if (np.hull.size() == 2) {
        np.edges.push_back(make_edge(p, np.hull[0], np.hull[1]));
        np.edges.push_back(make_edge(p, np.hull[1], np.hull[0]));
    } else if (np.hull.size() >= 3) {
        for (size_t i = 0; i < np.hull.size(); ++i) {
            np.edges.push_back(make_edge(p, np.hull[i], np.hull[(i + 1) % np.hull.size()]));
        }
    }
    return np;
}

std::vector<PolygonEdge> asymptotic_exponents(const BivariatePolynomial& p) {
    if (p.is_zero()) throw std::domain_error("newton polygon of zero polynomial");
    if (p.term_count() < 2) throw std::domain_error("no branches");
    NewtonPolygon np = newton_polygon(p);
    std::vector<PolygonEdge> out;
    for (const auto& e : np.edges) {
        if (e.normal_v > 0) out.push_back(e);
    }
    return out;
}

std::complex<double> evaluate_bivariate(const BivariatePolynomial& p,
                                        std::complex<double> y, std::complex<double> z) {
    return p.evaluate(y, z);
}

BivariatePolynomial edge_terms(const PolygonEdge& e) {
    BivariatePolynomial out;
    for (int j = 0; j <= e.data.q.degree(); ++j) {
        const GaussianRational& c = e.data.q.coeff(j);
        if (c.is_zero()) continue;
        out = out + BivariatePolynomial::monomial(c, e.data.r + j * e.data.a, e.data.s + j * e.data.b);
    }
    return out;
}

}  // namespace treelim
