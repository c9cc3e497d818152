#pragma once

#include <map>
#include <optional>
#include <utility>
#include <vector>

#include "treelim/curve.hpp"
#include "treelim/tree.hpp"
#include "treelim/words.hpp"

namespace treelim {

struct ValuationError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct CenterDrift : ValuationError {
    using ValuationError::ValuationError;
};

struct NoBlowUp : ValuationError {
    using ValuationError::ValuationError;
};

// Exact product of generator matrices and inverses along the word.
Mat2Q evaluate_word_matrix(const RepCurve& curve, const Word& w);

RationalFunction trace_function(const RepCurve& curve, const Word& w);

// f_w = trace^2 - 4; vanishes identically exactly for trace constant +-2.
RationalFunction f_of(const RepCurve& curve, const Word& w);

// Growth valuation at an end; positive iff |f| blows up there.
int valuation(const RationalFunction& f, const End& e);

// max(V_e(f_w), 0); zero when f_w vanishes identically.
long limit_length(const RepCurve& curve, const End& e, const Word& w);

struct BlowUpResult {
    bool holds = false;
    std::optional<Word> witness;  // shortlex-first word with positive limit length
};

BlowUpResult blows_up(const RepCurve& curve, const End& e, int radius,
                      int cap = kDefaultBallCap);

// Word-matrix products with prefix reuse, for ball-scale scans.
class WordMatrixCache {
public:
    explicit WordMatrixCache(const RepCurve& curve) : curve_(curve) {}
    const Mat2Q& matrix(const Word& w);
    long displacement_valuation(const End& e, const Word& w);  // 2 max(0, max entry valuation)

private:
    const RepCurve& curve_;
    std::map<std::vector<int>, Mat2Q> cache_;
    std::map<std::pair<std::vector<int>, std::string>, long> dval_;
};

struct LimitMetricOptions {
    double drift_fraction = 0.25;       // allowed center drift per unit of log t
    double guard_t1 = 1e3, guard_t2 = 1e4;
    bool skip_drift_guard = false;
    HyperbolicContext h3;
};

// Symbolic orbit pseudo-metric on a word ball at the standard basepoint:
// d(g, h) = 2 max(0, max entry valuation of rho(g^-1 h)) in the 1/log|t|
// rescaling. A numeric guard checks that the approximate center does not
// drift away from the basepoint as the end is approached.
LimitMetric limit_metric(const RepCurve& curve, const End& e, const WordBall& ball,
                         const Alphabet& alphabet,
                         const LimitMetricOptions& options = {});

// max(0, d(1, w^2) - d(1, w)) from the orbit pseudo-metric; agrees with
// limit_length on curves where the basepoint guard passes.
long orbit_limit_length(const RepCurve& curve, const End& e, const Word& w);

struct IrreducibilityProbe {
    std::optional<std::pair<Word, Word>> witness;  // (u, w)
    std::map<int, long> commutator_lengths;        // p -> limit length of [u^p, w]
};

// Searches the ball for u (with positive limit length), w, and p <= pmax with
// limit_length([u^p, w]) > 0; shortlex-first witness. Absence of a witness
// does not certify reducibility.
IrreducibilityProbe irreducibility_probe(const RepCurve& curve, const End& e, int radius,
                                         int pmax, int cap = kDefaultBallCap);

// The symbolic engine rescales by 1/log|t|, which makes limits integers; the
// generator-displacement mode matches it up to the projective conversion
// factor (the max generator limit length).
enum class RescalingMode { LogParameter, GeneratorDisplacement };

// Generator-displacement factor at one parameter value:
// 1 / max(1, max_g d(x0, rho(g) x0)) at the standard basepoint.
double generator_rescaling_factor(const RepCurve& curve, double t,
                                  const End& e = End::infinity());

struct NumericLengthSample {
    double t;
    double value;  // translation_length_trace(rho_t(w)) / log t
};

// Double-precision lengths along the curve, rescaled by 1/log t. For a finite
// end the matrices are evaluated at t0 + 1/t, with t the chart parameter.
std::vector<NumericLengthSample> numeric_length_samples(const RepCurve& curve, const Word& w,
                                                        const std::vector<double>& ts,
                                                        const End& e = End::infinity());

// Symbolic limit lengths over a ball.
struct LengthFunction {
    std::vector<long> values;  // by ball index
};

LengthFunction build_length_function(const RepCurve& curve, const End& e, const WordBall& ball);

}  // namespace treelim
