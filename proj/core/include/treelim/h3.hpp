#pragma once

#include <cmath>
#include <complex>
#include <stdexcept>
#include <vector>

namespace treelim {

struct H3Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Element of SL2(C) in double precision. Construction normalizes the
// determinant to 1 when it is within 1e-6 and rejects it otherwise.
struct Matrix2C {
    std::complex<double> a{1.0}, b{0.0}, c{0.0}, d{1.0};

    Matrix2C() = default;
    Matrix2C(std::complex<double> a, std::complex<double> b,
             std::complex<double> c, std::complex<double> d);

    static Matrix2C identity() { return {}; }

    // No det check or renormalization: products of unit-determinant matrices
    // stay at det 1, while the computed ad - bc is meaningless for large
    // entries (catastrophic cancellation).
    static Matrix2C raw(std::complex<double> a, std::complex<double> b,
                        std::complex<double> c, std::complex<double> d) {
        Matrix2C m;
        m.a = a; m.b = b; m.c = c; m.d = d;
        return m;
    }

    std::complex<double> trace() const { return a + d; }
    std::complex<double> det() const { return a * d - b * c; }
    Matrix2C inverse() const { return raw(d, -b, -c, a); }  // adjugate; valid since det = 1

    friend Matrix2C operator*(const Matrix2C& x, const Matrix2C& y) {
        return raw(x.a * y.a + x.b * y.c, x.a * y.b + x.b * y.d,
                   x.c * y.a + x.d * y.c, x.c * y.b + x.d * y.d);
    }
};

// Upper half-space model: z horizontal, h > 0 the height above the boundary.
struct PointH3 {
    std::complex<double> z{0.0};
    double h = 1.0;

    PointH3() = default;
    PointH3(std::complex<double> z, double h);

    static PointH3 basepoint() { return {{0.0, 0.0}, 1.0}; }
};

struct HyperbolicContext {
    double delta = std::log(1.0 + std::sqrt(2.0));  // thinness constant of H^n
    int samples_per_segment = 256;
    double tolerance = 1e-9;
};

// Poincare extension of the Moebius action to upper half-space.
PointH3 mobius_act(const Matrix2C& m, const PointH3& p);

double dist_h3(const PointH3& p, const PointH3& q);

// 1 + (|z1-z2|^2 + (h1-h2)^2) / (2 h1 h2); monotone in dist_h3, cheap to compare.
double cosh_dist_h3(const PointH3& p, const PointH3& q);

// 0 for |trace| <= 2, else 2 arccosh(|trace|/2).
double translation_length_trace(const Matrix2C& m);

// Point at parameter s in [0, 1] of the geodesic [p, q], proportional to arclength.
PointH3 geodesic_point(const PointH3& p, const PointH3& q, double s);

struct SegmentMinimum {
    PointH3 point;
    double displacement;
};

// Minimum of y -> dist(y, My) over uniformly spaced samples of [x, Mx].
SegmentMinimum min_displacement_on_segment(const Matrix2C& m, const PointH3& x,
                                           const HyperbolicContext& ctx);

// max displacement of x under the given matrices
double max_displacement(const std::vector<Matrix2C>& mats, const PointH3& x);

struct CenterResult {
    PointH3 center;
    double radius;  // r_S at the center
};

// Approximate center: multistart geodesic descent on r_S from x0. The +1
// slack in the center definition absorbs the optimization error.
CenterResult approximate_center(const std::vector<Matrix2C>& mats,
                                const HyperbolicContext& ctx, const PointH3& x0);

// Max over sampled points of each side of the distance to the sampled union
// of the other sides of the geodesic polygon with the given vertices.
double polygon_thinness_defect(const std::vector<PointH3>& points, const HyperbolicContext& ctx);

}  // namespace treelim
