#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <set>

#include "support.hpp"
#include "treelim/curve.hpp"
#include "treelim/expr.hpp"

using namespace treelim;

namespace {

const Alphabet kAB{"ab"};

Word w(const std::string& text) { return parse_word(text, kAB); }

// Exhaustive oracle: all strings over the 2k letters, freely reduced, deduplicated.
size_t brute_ball_size(int k, int radius) {
    std::vector<int> letters;
    for (int g = 1; g <= k; ++g) {
        letters.push_back(g);
        letters.push_back(-g);
    }
    std::set<std::vector<int>> seen{{}};
    std::vector<std::vector<int>> frontier{{}};
    for (int len = 1; len <= radius; ++len) {
        std::vector<std::vector<int>> next;
        for (const auto& word : frontier) {
            for (int l : letters) {
                std::vector<int> extended = word;
                extended.push_back(l);
                Word reduced = reduce_letters(extended);
                if (seen.insert(reduced.letters).second) next.push_back(reduced.letters);
            }
        }
        frontier = std::move(next);
    }
    return seen.size();
}

}  // namespace

TEST_CASE("word parsing and free reduction") {
    CHECK(w("abA").letters == std::vector<int>{1, 2, -1});
    CHECK(w("aA").is_identity());
    CHECK(w("abBA").is_identity());
    CHECK(w("a b A").letters == w("abA").letters);  // whitespace ignored

    CHECK_THROWS_AS(parse_word("ab?", kAB), WordParseError);
    try {
        parse_word("abx", kAB);
    } catch (const WordParseError& e) {
        CHECK(e.position == 2);
    }
}

TEST_CASE("multiply, invert, commutator") {
    CHECK(multiply(w("ab"), w("BA")).is_identity());
    CHECK(invert(w("ab")) == w("BA"));
    CHECK(commutator(w("a"), w("b")) == w("abAB"));
    CHECK(word_pow(w("ab"), 3) == w("ababab"));
    CHECK(word_pow(w("a"), -2) == w("AA"));
}

TEST_CASE("ball enumeration sizes") {
    CHECK(enumerate_ball(kAB, 0).size() == 1);
    CHECK(enumerate_ball(kAB, 1).size() == 5);
    CHECK(enumerate_ball(kAB, 2).size() == 17);
    CHECK(enumerate_ball(kAB, 2).size() == brute_ball_size(2, 2));
}

TEST_CASE("ball counts match the closed form, shortlex order, inversion closure") {
    for (int k = 1; k <= 3; ++k) {
        std::string letters = std::string("abc").substr(0, static_cast<size_t>(k));
        Alphabet alphabet(letters);
        for (int radius = 0; radius <= 4; ++radius) {
            WordBall ball = enumerate_ball(alphabet, radius);
            size_t expected = 1;
            size_t sphere = static_cast<size_t>(2 * k);
            for (int r = 1; r <= radius; ++r) {
                expected += sphere;
                sphere *= static_cast<size_t>(2 * k - 1);
            }
            CHECK(ball.size() == expected);
            CHECK(ball.size() == brute_ball_size(k, radius));
            for (size_t i = 0; i + 1 < ball.size(); ++i)
                CHECK(shortlex_less(ball.words[i], ball.words[i + 1]));
            CHECK(ball.words.front().is_identity());
            for (const Word& word : ball.words) CHECK(ball.index_of(invert(word)).has_value());
        }
    }
}

TEST_CASE("round trips on the radius-4 ball") {
    WordBall ball = enumerate_ball(kAB, 4);
    for (const Word& word : ball.words) {
        CHECK(parse_word(render_word(word, kAB), kAB) == word);
        CHECK(invert(invert(word)) == word);
        CHECK(multiply(word, invert(word)).is_identity());
    }
}

TEST_CASE("ball cap") {
    CHECK_THROWS_AS(enumerate_ball(kAB, 9), BallTooLarge);
    CHECK_NOTHROW(enumerate_ball(Alphabet("a"), 9, 9));
    CHECK_THROWS(enumerate_ball(kAB, -1));
}

TEST_CASE("alphabet validation") {
    CHECK_THROWS_AS(Alphabet("aa"), WordError);
    CHECK_THROWS_AS(Alphabet("aB"), WordError);
    CHECK_THROWS_AS(Alphabet(""), WordError);
}

TEST_CASE("curve spec parsing accepts the canonical document") {
    CurveSpec spec = parse_curve_spec(testsupport::kCanonicalSpec);
    CHECK(spec.curve.alphabet.letters() == "ab");
    CHECK(spec.curve.matrix(0).a == parse_rational_function("t"));
    CHECK(spec.curve.matrix(0).d == parse_rational_function("1/t"));
    CHECK(spec.ends.size() == 1);
    CHECK(spec.ends[0] == End::infinity());
    CHECK(spec.words.size() == 5);
    CHECK(spec.ball_radius == 3);
    CHECK(spec.raw == testsupport::kCanonicalSpec);
}

TEST_CASE("curve spec rejects determinant != 1 and names the generator") {
    const char* bad = R"({"generators": {"b": [["1","1"],["1","1"]]}})";
    CHECK_THROWS_WITH(parse_curve_spec(bad), doctest::Contains("\"b\""));
    try {
        parse_curve_spec(bad);
    } catch (const CurveSpecError& e) {
        CHECK(std::string(e.what()).find("det = 0") != std::string::npos);
    }
}

TEST_CASE("curve spec grammar corners") {
    const char* rational_entry = R"json({
      "generators": {"a": [["t^2/ (t-1)", "0"], ["0", "(t-1)/t^2"]]},
      "ends": ["infinity", {"t0": "1"}, {"t0": "1/2 - i"}]
    })json";
    CurveSpec spec = parse_curve_spec(rational_entry);
    CHECK(spec.ends.size() == 3);
    CHECK(spec.ends[1] == End::finite(GaussianRational(1)));
    CHECK(spec.ends[2].t0 ==
          GaussianRational{testsupport::rational(1, 2), testsupport::rational(-1)});

    CHECK_THROWS_AS(parse_curve_spec("{not json"), CurveSpecError);
    CHECK_THROWS_AS(parse_curve_spec(R"({"generators": {}})"), CurveSpecError);
    CHECK_THROWS_AS(parse_curve_spec(
                        R"({"generators": {"a": [["t","0"],["0","1/t"]]}, "words": ["ax"]})"),
                    CurveSpecError);
    CHECK_THROWS_AS(parse_curve_spec(
                        R"({"generators": {"a": [["t","0"],["0","1/t"]]}, "ends": ["t0=1"]})"),
                    CurveSpecError);
}

TEST_CASE("parse_end forms") {
    CHECK(parse_end("infinity") == End::infinity());
    CHECK(parse_end("t0=1/2") == End::finite(GaussianRational(testsupport::rational(1, 2))));
    CHECK_THROWS_AS(parse_end("somewhere"), CurveSpecError);
}
