#include <benchmark/benchmark.h>

#include <random>

#include "treelim/curve.hpp"
#include "treelim/h3.hpp"
#include "treelim/newton.hpp"
#include "treelim/tree.hpp"
#include "treelim/valuation.hpp"

using namespace treelim;

namespace {

const char* kCanonicalSpec = R"({
  "generators": {
    "a": [["t", "0"], ["0", "1/t"]],
    "b": [["1", "1"], ["1", "2"]]
  }
})";

void BM_WordBall(benchmark::State& state) {
    Alphabet ab("ab");
    for (auto _ : state) {
        benchmark::DoNotOptimize(enumerate_ball(ab, static_cast<int>(state.range(0))));
    }
}
BENCHMARK(BM_WordBall)->Arg(3)->Arg(5);

void BM_WordMatrix(benchmark::State& state) {
    CurveSpec spec = parse_curve_spec(kCanonicalSpec);
    WordBall ball = enumerate_ball(spec.curve.alphabet, static_cast<int>(state.range(0)));
    for (auto _ : state) {
        for (const Word& w : ball.words)
            benchmark::DoNotOptimize(evaluate_word_matrix(spec.curve, w));
    }
}
BENCHMARK(BM_WordMatrix)->Arg(2)->Arg(3);

void BM_LimitLengthBall(benchmark::State& state) {
    CurveSpec spec = parse_curve_spec(kCanonicalSpec);
    WordBall ball = enumerate_ball(spec.curve.alphabet, 3);
    End inf = End::infinity();
    for (auto _ : state) {
        long acc = 0;
        for (const Word& w : ball.words) acc += limit_length(spec.curve, inf, w);
        benchmark::DoNotOptimize(acc);
    }
}
BENCHMARK(BM_LimitLengthBall);

void BM_FourPointDefect(benchmark::State& state) {
    std::mt19937 rng(5);
    std::uniform_int_distribution<long> len(1, 9);
    int n = static_cast<int>(state.range(0));
    std::vector<MetricTree::Edge> edges;
    for (int v = 1; v < n; ++v)
        edges.push_back({static_cast<int>(rng() % static_cast<unsigned>(v)), v,
                         make_rational(len(rng))});
    MetricTree tree(n, std::move(edges));
    LimitMetric m;
    m.d.assign(static_cast<size_t>(n), std::vector<Rational>(static_cast<size_t>(n)));
    for (int i = 0; i < n; ++i) {
        m.labels.push_back(std::to_string(i));
        for (int j = 0; j < n; ++j) m.d[static_cast<size_t>(i)][static_cast<size_t>(j)] =
            tree.vertex_distance(i, j);
    }
    for (auto _ : state) benchmark::DoNotOptimize(four_point_defect(m));
}
BENCHMARK(BM_FourPointDefect)->Arg(17)->Arg(53);

void BM_Reconstruct(benchmark::State& state) {
    CurveSpec spec = parse_curve_spec(kCanonicalSpec);
    WordBall ball = enumerate_ball(spec.curve.alphabet, 3);
    LimitMetricOptions options;
    options.skip_drift_guard = true;
    LimitMetric m = limit_metric(spec.curve, End::infinity(), ball, spec.curve.alphabet, options);
    for (auto _ : state) benchmark::DoNotOptimize(reconstruct_tree(m));
}
BENCHMARK(BM_Reconstruct);

void BM_NewtonPolygon(benchmark::State& state) {
    std::mt19937 rng(7);
    std::uniform_int_distribution<int> coord(0, 40);
    BivariatePolynomial p;
    for (int k = 0; k < 60; ++k)
        p = p + BivariatePolynomial::monomial(GaussianRational(1), coord(rng), coord(rng));
    for (auto _ : state) benchmark::DoNotOptimize(newton_polygon(p));
}
BENCHMARK(BM_NewtonPolygon);

void BM_MobiusDistance(benchmark::State& state) {
    Matrix2C m(2.0, 1.0, 0.5, 0.75);
    PointH3 p({0.3, -0.7}, 1.4);
    for (auto _ : state) {
        PointH3 q = mobius_act(m, p);
        benchmark::DoNotOptimize(dist_h3(p, q));
    }
}
BENCHMARK(BM_MobiusDistance);

void BM_ApproximateCenter(benchmark::State& state) {
    CurveSpec spec = parse_curve_spec(kCanonicalSpec);
    std::vector<Matrix2C> mats;
    for (const auto& m : spec.curve.matrices) mats.push_back(m.evaluate({100.0, 0.0}));
    HyperbolicContext ctx;
    for (auto _ : state)
        benchmark::DoNotOptimize(approximate_center(mats, ctx, PointH3::basepoint()));
}
BENCHMARK(BM_ApproximateCenter);

}  // namespace

BENCHMARK_MAIN();
