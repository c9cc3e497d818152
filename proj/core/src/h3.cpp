#include "treelim/h3.hpp"

#include <algorithm>

namespace treelim {

Matrix2C::Matrix2C(std::complex<double> a_, std::complex<double> b_,
                   std::complex<double> c_, std::complex<double> d_)
    : a(a_), b(b_), c(c_), d(d_) {
    std::complex<double> det = a * d - b * c;
    if (!(std::isfinite(det.real()) && std::isfinite(det.imag())))
        throw H3Error("matrix entries are not finite");
    if (std::abs(det - 1.0) > 1e-6)
        throw H3Error("matrix determinant too far from 1: |det-1| = " +
                      std::to_string(std::abs(det - 1.0)));
    if (det != std::complex<double>(1.0, 0.0)) {
        std::complex<double> s = std::sqrt(det);
        a /= s; b /= s; c /= s; d /= s;
    }
}

PointH3::PointH3(std::complex<double> z_, double h_) : z(z_), h(h_) {
    if (!(h > 0.0) || !std::isfinite(h) || !std::isfinite(z.real()) || !std::isfinite(z.imag()))
        throw H3Error("point must have finite coordinates and positive height");
}

PointH3 mobius_act(const Matrix2C& m, const PointH3& p) {
    std::complex<double> cz_d = m.c * p.z + m.d;
    double denom = std::norm(cz_d) + std::norm(m.c) * p.h * p.h;
    if (!(denom > 1e-300)) throw H3Error("point escapes to boundary");
    std::complex<double> znew =
        ((m.a * p.z + m.b) * std::conj(cz_d) + m.a * std::conj(m.c) * p.h * p.h) / denom;
    return PointH3(znew, p.h / denom);
}

double cosh_dist_h3(const PointH3& p, const PointH3& q) {
    double rho2 = std::norm(p.z - q.z) + (p.h - q.h) * (p.h - q.h);
    return 1.0 + rho2 / (2.0 * p.h * q.h);
}

double dist_h3(const PointH3& p, const PointH3& q) {
    double rho2 = std::norm(p.z - q.z) + (p.h - q.h) * (p.h - q.h);
    return 2.0 * std::asinh(std::sqrt(rho2 / (4.0 * p.h * q.h)));
}

double translation_length_trace(const Matrix2C& m) {
    double t = std::abs(m.trace());
    if (t <= 2.0) return 0.0;
    return 2.0 * std::acosh(t / 2.0);
}

PointH3 geodesic_point(const PointH3& p, const PointH3& q, double s) {
    if (s <= 0.0) return p;
    if (s >= 1.0) return q;
    double len = std::abs(q.z - p.z);
    if (len <= 1e-14 * std::max(p.h, q.h)) {
        // Vertical geodesic: heights interpolate geometrically.
        return PointH3(p.z, std::exp((1.0 - s) * std::log(p.h) + s * std::log(q.h)));
    }
    // Work in the vertical plane through p.z and q.z: p -> (0, p.h), q -> (len, q.h).
    // The geodesic is the circle orthogonal to the boundary, center (x0, 0).
    double x0 = (len * len + q.h * q.h - p.h * p.h) / (2.0 * len);
    double radius = std::hypot(x0, p.h);
    double th1 = std::atan2(p.h, -x0);
    double th2 = std::atan2(q.h, len - x0);
    // log tan(theta/2) is the arclength parameter along the circle.
    double l1 = std::log(std::tan(th1 / 2.0));
    double l2 = std::log(std::tan(th2 / 2.0));
    double l = (1.0 - s) * l1 + s * l2;
    double theta = 2.0 * std::atan(std::exp(l));
    double x = x0 + radius * std::cos(theta);
    double h = radius * std::sin(theta);
    std::complex<double> dir = (q.z - p.z) / len;
    return PointH3(p.z + dir * x, h);
}

SegmentMinimum min_displacement_on_segment(const Matrix2C& m, const PointH3& x,
                                           const HyperbolicContext& ctx) {
    PointH3 mx = mobius_act(m, x);
    if (dist_h3(x, mx) <= ctx.tolerance) return {x, dist_h3(x, mx)};
    int n = std::max(2, ctx.samples_per_segment);
    SegmentMinimum best{x, std::numeric_limits<double>::infinity()};
    for (int i = 0; i < n; ++i) {
        double s = static_cast<double>(i) / (n - 1);
        PointH3 y = geodesic_point(x, mx, s);
        double d = dist_h3(y, mobius_act(m, y));
        if (d < best.displacement) best = {y, d};
    }
    return best;
}

double max_displacement(const std::vector<Matrix2C>& mats, const PointH3& x) {
    double r = 0.0;
    for (const auto& m : mats) r = std::max(r, dist_h3(x, mobius_act(m, x)));
    return r;
}

namespace {

CenterResult descend(const std::vector<Matrix2C>& mats, const HyperbolicContext& ctx,
                     PointH3 x, int max_iterations, int stall_window, double stall_improvement) {
    double r = max_displacement(mats, x);
    std::vector<double> history{r};
    double step = 1.0;
    for (int iter = 0; iter < max_iterations; ++iter) {
        if (r <= ctx.tolerance) break;
        size_t worst = 0;
        double worst_d = -1.0;
        for (size_t i = 0; i < mats.size(); ++i) {
            double d = dist_h3(x, mobius_act(mats[i], x));
            if (d > worst_d) { worst_d = d; worst = i; }
        }
        PointH3 image = mobius_act(mats[worst], x);
        PointH3 target = geodesic_point(x, image, 0.5);
        PointH3 candidate = geodesic_point(x, target, step);
        if (!std::isfinite(candidate.h) || !std::isfinite(candidate.z.real()))
            throw H3Error("center search failed: iterate diverged at iteration " +
                          std::to_string(iter));
        double rc = max_displacement(mats, candidate);
        if (rc < r) {
            x = candidate;
            r = rc;
            step = std::min(1.0, step * 2.0);
        } else {
            step *= 0.5;
            if (step < 1e-12) break;
        }
        history.push_back(r);
        if (static_cast<int>(history.size()) > stall_window &&
            history[history.size() - 1 - static_cast<size_t>(stall_window)] - r < stall_improvement)
            break;
    }
    return {x, r};
}

}  // namespace

CenterResult approximate_center(const std::vector<Matrix2C>& mats,
                                const HyperbolicContext& ctx, const PointH3& x0) {
    if (mats.empty()) throw H3Error("approximate_center requires at least one matrix");
    const int max_iterations = 2000;
    const int stall_window = 50;
    const double stall_improvement = 0.01;

    std::vector<PointH3> starts{x0};
    const std::complex<double> i(0.0, 1.0);
    starts.push_back(PointH3(x0.z + 0.5, x0.h));
    starts.push_back(PointH3(x0.z - 0.5, x0.h));
    starts.push_back(PointH3(x0.z + 0.5 * i, x0.h));
    starts.push_back(PointH3(x0.z - 0.5 * i, x0.h));
    starts.push_back(PointH3(x0.z, x0.h * 2.0));
    starts.push_back(PointH3(x0.z, x0.h * 0.5));
    starts.push_back(PointH3(x0.z + 0.5 + 0.5 * i, x0.h * 2.0));
    starts.push_back(PointH3(x0.z - 0.5 - 0.5 * i, x0.h * 0.5));

    CenterResult best{x0, std::numeric_limits<double>::infinity()};
    for (const auto& s : starts) {
        CenterResult r = descend(mats, ctx, s, max_iterations, stall_window, stall_improvement);
        if (r.radius < best.radius) best = r;
    }
    return best;
}

double polygon_thinness_defect(const std::vector<PointH3>& points, const HyperbolicContext& ctx) {
    size_t n = points.size();
    if (n < 3) throw H3Error("polygon needs at least 3 vertices");
    for (size_t i = 0; i < n; ++i) {
        const PointH3& p = points[i];
        const PointH3& q = points[(i + 1) % n];
        if (p.z == q.z && p.h == q.h) throw H3Error("consecutive polygon vertices must be distinct");
    }
    int samples = std::max(2, ctx.samples_per_segment);
    std::vector<std::vector<PointH3>> sides(n);
    for (size_t i = 0; i < n; ++i) {
        sides[i].reserve(static_cast<size_t>(samples));
        for (int j = 0; j < samples; ++j) {
            double s = static_cast<double>(j) / (samples - 1);
            sides[i].push_back(geodesic_point(points[i], points[(i + 1) % n], s));
        }
    }
    double defect = 0.0;
    for (size_t i = 0; i < n; ++i) {
        for (const PointH3& y : sides[i]) {
            double best = std::numeric_limits<double>::infinity();
            for (size_t k = 0; k < n; ++k) {
                if (k == i) continue;
                for (const PointH3& w : sides[k]) best = std::min(best, cosh_dist_h3(y, w));
            }
            double d = std::acosh(std::max(1.0, best));
            defect = std::max(defect, d);
        }
    }
    return defect;
}

}  // namespace treelim
