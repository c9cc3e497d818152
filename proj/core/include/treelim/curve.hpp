#pragma once

#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "treelim/h3.hpp"
#include "treelim/rational_function.hpp"
#include "treelim/words.hpp"

namespace treelim {

struct CurveSpecError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// 2x2 matrix of rational functions, [[a, b], [c, d]].
struct Mat2Q {
    RationalFunction a, b, c, d;

    static Mat2Q identity() {
        return {RationalFunction::one(), RationalFunction(), RationalFunction(),
                RationalFunction::one()};
    }
    RationalFunction trace() const { return a + d; }
    RationalFunction det() const { return a * d - b * c; }
    // Adjugate; inverse exactly when det = 1.
    Mat2Q inverse_sl2() const { return {d, -b, -c, a}; }

    friend Mat2Q operator*(const Mat2Q& x, const Mat2Q& y) {
        return {x.a * y.a + x.b * y.c, x.a * y.b + x.b * y.d,
                x.c * y.a + x.d * y.c, x.c * y.b + x.d * y.d};
    }

    // raw: the determinant is identically 1 symbolically, and the numeric
    // ad - bc is dominated by cancellation for large entries
    Matrix2C evaluate(std::complex<double> t) const {
        return Matrix2C::raw(a.evaluate(t), b.evaluate(t), c.evaluate(t), d.evaluate(t));
    }
};

// One topological end of the rational parameter line: t -> infinity, or
// t -> t0 through the chart t = t0 + 1/s.
struct End {
    enum class Kind { AtInfinity, Finite };
    Kind kind = Kind::AtInfinity;
    GaussianRational t0;

    static End infinity() { return {}; }
    static End finite(GaussianRational at) { return {Kind::Finite, std::move(at)}; }

    friend bool operator==(const End& a, const End& b) {
        return a.kind == b.kind && (a.kind == Kind::AtInfinity || a.t0 == b.t0);
    }
    std::string str() const {
        return kind == Kind::AtInfinity ? "infinity" : "t0=" + t0.str();
    }
};

// A rational one-parameter curve of SL2(C) representations of a free group:
// one matrix of rational functions per generator, determinant identically 1.
struct RepCurve {
    Alphabet alphabet;
    std::vector<Mat2Q> matrices;  // by generator index

    const Mat2Q& matrix(size_t g) const { return matrices[g]; }
};

// Parsed curve-spec document.
struct CurveSpec {
    RepCurve curve;
    std::vector<End> ends;
    std::vector<std::string> words;      // optional word list, verbatim
    std::optional<int> ball_radius;
    std::string raw;                     // exact document text, echoed in reports
};

// JSON: {"generators": {letter: [[rf, rf], [rf, rf]], ...},
//        "ends": ["infinity" | {"t0": literal}, ...],
//        "words": [...], "ball_radius": N}
CurveSpec parse_curve_spec(const std::string& text);

// "t0=VALUE" or "infinity"
End parse_end(const std::string& text);

}  // namespace treelim
