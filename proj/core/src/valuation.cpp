#include "treelim/valuation.hpp"

#include <algorithm>
#include <cmath>

namespace treelim {

Mat2Q evaluate_word_matrix(const RepCurve& curve, const Word& w) {
    Mat2Q acc = Mat2Q::identity();
    for (int l : w.letters) {
        size_t g = static_cast<size_t>(std::abs(l) - 1);
        acc = acc * (l > 0 ? curve.matrix(g) : curve.matrix(g).inverse_sl2());
    }
    return acc;
}

RationalFunction trace_function(const RepCurve& curve, const Word& w) {
    return evaluate_word_matrix(curve, w).trace();
}

RationalFunction f_of(const RepCurve& curve, const Word& w) {
    RationalFunction tr = trace_function(curve, w);
    return tr * tr - RationalFunction(GaussianRational(4));
}

int valuation(const RationalFunction& f, const End& e) {
    if (f.is_zero()) throw ValuationError("valuation of zero undefined");
    if (e.kind == End::Kind::AtInfinity) return f.degree_at_infinity();
    return f.substitute_end_chart(e.t0).degree_at_infinity();
}

long limit_length(const RepCurve& curve, const End& e, const Word& w) {
    RationalFunction f = f_of(curve, w);
    if (f.is_zero()) return 0;  // trace identically +-2
    return std::max(0, valuation(f, e));
}

BlowUpResult blows_up(const RepCurve& curve, const End& e, int radius, int cap) {
    if (radius < 1) throw ValuationError("blow-up scan needs radius >= 1");
    WordBall ball = enumerate_ball(curve.alphabet, radius, cap);
    for (const Word& w : ball.words) {
        if (w.is_identity()) continue;
        if (limit_length(curve, e, w) > 0) return {true, w};
    }
    return {false, std::nullopt};
}

const Mat2Q& WordMatrixCache::matrix(const Word& w) {
    auto it = cache_.find(w.letters);
    if (it != cache_.end()) return it->second;
    Mat2Q m;
    if (w.is_identity()) {
        m = Mat2Q::identity();
    } else {
        Word prefix = w;
        int last = prefix.letters.back();
        prefix.letters.pop_back();
        size_t g = static_cast<size_t>(std::abs(last) - 1);
        m = matrix(prefix) * (last > 0 ? curve_.matrix(g) : curve_.matrix(g).inverse_sl2());
    }
    return cache_.emplace(w.letters, std::move(m)).first->second;
}

long WordMatrixCache::displacement_valuation(const End& e, const Word& w) {
    auto key = std::make_pair(w.letters, e.str());
    auto it = dval_.find(key);
    if (it != dval_.end()) return it->second;
    const Mat2Q& m = matrix(w);
    long vmax = 0;  // det = 1 forces some entry valuation >= 0, and we clamp anyway
    bool any = false;
    for (const RationalFunction* f : {&m.a, &m.b, &m.c, &m.d}) {
        if (f->is_zero()) continue;
        long v = valuation(*f, e);
        vmax = any ? std::max(vmax, v) : v;
        any = true;
    }
    long out = 2 * std::max(0L, vmax);
    dval_[key] = out;
    return out;
}

namespace {

std::complex<double> end_parameter(const End& e, double t) {
    if (e.kind == End::Kind::AtInfinity) return {t, 0.0};
    return e.t0.to_complex() + std::complex<double>(1.0, 0.0) / t;
}

void drift_guard(const RepCurve& curve, const End& e, const LimitMetricOptions& options) {
    PointH3 base = PointH3::basepoint();
    auto center_dist = [&](double t) {
        std::vector<Matrix2C> mats;
        for (const auto& m : curve.matrices) mats.push_back(m.evaluate(end_parameter(e, t)));
        CenterResult c = approximate_center(mats, options.h3, base);
        return dist_h3(base, c.center);
    };
    double d1 = center_dist(options.guard_t1);
    double d2 = center_dist(options.guard_t2);
    double allowance = options.drift_fraction * (std::log(options.guard_t2) - std::log(options.guard_t1));
    if (d2 - d1 > allowance)
        throw CenterDrift("approximate center drifts; supply conjugating normalization "
                          "(drift " + std::to_string(d2 - d1) + " over allowance " +
                          std::to_string(allowance) + ")");
}

}  // namespace

LimitMetric limit_metric(const RepCurve& curve, const End& e, const WordBall& ball,
                         const Alphabet& alphabet, const LimitMetricOptions& options) {
    bool sees_blow_up = false;
    for (const Word& w : ball.words) {
        if (!w.is_identity() && limit_length(curve, e, w) > 0) { sees_blow_up = true; break; }
    }
    if (!sees_blow_up)
        throw NoBlowUp("no blow-up at this end; limits are bounded");
    if (!options.skip_drift_guard) drift_guard(curve, e, options);

    WordMatrixCache cache(curve);
    size_t n = ball.size();
    LimitMetric metric;
    metric.labels.reserve(n);
    for (const Word& w : ball.words) metric.labels.push_back(render_word(w, alphabet));
    metric.d.assign(n, std::vector<Rational>(n, Rational(0)));
    for (size_t i = 0; i < n; ++i) {
        for (size_t j = i + 1; j < n; ++j) {
            Word rel = multiply(invert(ball.words[i]), ball.words[j]);
            Rational dij(cache.displacement_valuation(e, rel));
            metric.d[i][j] = dij;
            metric.d[j][i] = dij;
        }
    }
    metric.validate();
    return metric;
}

long orbit_limit_length(const RepCurve& curve, const End& e, const Word& w) {
    WordMatrixCache cache(curve);
    long d1 = cache.displacement_valuation(e, w);
    long d2 = cache.displacement_valuation(e, multiply(w, w));
    if (d2 > 2 * d1)
        throw ValuationError("orbit distances not realizable in a tree; basepoint problem");
    return std::max(0L, d2 - d1);
}

IrreducibilityProbe irreducibility_probe(const RepCurve& curve, const End& e, int radius,
                                         int pmax, int cap) {
    WordBall ball = enumerate_ball(curve.alphabet, radius, cap);
    IrreducibilityProbe probe;
    for (const Word& u : ball.words) {
        if (u.is_identity() || limit_length(curve, e, u) <= 0) continue;
        for (const Word& w : ball.words) {
            if (w.is_identity()) continue;
            for (int p = 1; p <= pmax; ++p) {
                Word c = commutator(word_pow(u, p), w);
                if (c.is_identity()) continue;
                if (limit_length(curve, e, c) > 0) {
                    probe.witness = {u, w};
                    for (int q = 1; q <= pmax; ++q) {
                        Word cq = commutator(word_pow(u, q), w);
                        probe.commutator_lengths[q] =
                            cq.is_identity() ? 0 : limit_length(curve, e, cq);
                    }
                    return probe;
                }
            }
        }
    }
    return probe;
}

double generator_rescaling_factor(const RepCurve& curve, double t, const End& e) {
    if (!(t > 0)) throw ValuationError("rescaling factor needs t > 0");
    std::complex<double> param = end_parameter(e, t);
    PointH3 x0 = PointH3::basepoint();
    double worst = 1.0;
    for (const auto& m : curve.matrices)
        worst = std::max(worst, dist_h3(x0, mobius_act(m.evaluate(param), x0)));
    return 1.0 / worst;
}

std::vector<NumericLengthSample> numeric_length_samples(const RepCurve& curve, const Word& w,
                                                        const std::vector<double>& ts,
                                                        const End& e) {
    for (size_t k = 0; k < ts.size(); ++k) {
        if (!(ts[k] > 0)) throw ValuationError("sample parameters must be positive");
        if (k > 0 && !(ts[k] > ts[k - 1])) throw ValuationError("sample parameters must increase");
    }
    std::vector<NumericLengthSample> out;
    out.reserve(ts.size());
    for (double t : ts) {
        std::complex<double> param = end_parameter(e, t);
        Matrix2C acc = Matrix2C::identity();
        for (int l : w.letters) {
            size_t g = static_cast<size_t>(std::abs(l) - 1);
            Matrix2C gen = curve.matrix(g).evaluate(param);
            acc = acc * (l > 0 ? gen : gen.inverse());
        }
        std::complex<double> tr = acc.trace();
        if (!std::isfinite(tr.real()) || !std::isfinite(tr.imag()))
            throw ValuationError("overflow evaluating word at t = " + std::to_string(t));
        out.push_back({t, translation_length_trace(acc) / std::log(t)});
    }
    return out;
}

LengthFunction build_length_function(const RepCurve& curve, const End& e, const WordBall& ball) {
    LengthFunction lf;
    lf.values.reserve(ball.size());
    for (const Word& w : ball.words) lf.values.push_back(limit_length(curve, e, w));
    return lf;
}

}  // namespace treelim
