#include "treelim/words.hpp"

#include <algorithm>
#include <cctype>

namespace treelim {

Alphabet::Alphabet(const std::string& letters) : letters_(letters) {
    if (letters_.empty()) throw WordError("alphabet must have at least one generator");
    if (letters_.size() > 26) throw WordError("alphabet limited to 26 generators");
    for (char c : letters_) {
        if (!std::islower(static_cast<unsigned char>(c)))
            throw WordError(std::string("generator name must be a lowercase letter, got '") + c + "'");
    }
    std::string sorted = letters_;
    std::sort(sorted.begin(), sorted.end());
    if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end())
        throw WordError("generator names must be distinct");
}

int Alphabet::index_of(char lower) const {
    auto p = letters_.find(lower);
    return p == std::string::npos ? -1 : static_cast<int>(p);
}

namespace {

// Rank used for lexicographic comparison: a < A < b < B < ...
int letter_rank(int letter) {
    int g = std::abs(letter) - 1;
    return 2 * g + (letter < 0 ? 1 : 0);
}

}  // namespace

bool shortlex_less(const Word& a, const Word& b) {
    if (a.length() != b.length()) return a.length() < b.length();
    for (size_t k = 0; k < a.length(); ++k) {
        int ra = letter_rank(a.letters[k]), rb = letter_rank(b.letters[k]);
        if (ra != rb) return ra < rb;
    }
    return false;
}

Word reduce_letters(std::vector<int> letters) {
    std::vector<int> out;
    out.reserve(letters.size());
    for (int l : letters) {
        if (l == 0) throw WordError("zero letter");
        if (!out.empty() && out.back() == -l) out.pop_back();
        else out.push_back(l);
    }
    return Word{std::move(out)};
}

Word parse_word(const std::string& text, const Alphabet& alphabet) {
    std::vector<int> letters;
    letters.reserve(text.size());
    for (size_t k = 0; k < text.size(); ++k) {
        char c = text[k];
        if (std::isspace(static_cast<unsigned char>(c))) continue;
        char lower = static_cast<char>(std::tolower(static_cast<unsigned char>(c)));
        int g = alphabet.index_of(lower);
        if (g < 0) throw WordParseError(std::string("unknown letter '") + c + "'", k);
        letters.push_back(std::isupper(static_cast<unsigned char>(c)) ? -(g + 1) : (g + 1));
    }
    return reduce_letters(std::move(letters));
}

std::string render_word(const Word& w, const Alphabet& alphabet) {
    std::string out;
    out.reserve(w.length());
    for (int l : w.letters) {
        char c = alphabet.letter(static_cast<size_t>(std::abs(l) - 1));
        out += (l < 0) ? static_cast<char>(std::toupper(static_cast<unsigned char>(c))) : c;
    }
    return out;
}

Word multiply(const Word& u, const Word& v) {
    std::vector<int> letters = u.letters;
    letters.insert(letters.end(), v.letters.begin(), v.letters.end());
    return reduce_letters(std::move(letters));
}

Word invert(const Word& u) {
    std::vector<int> letters(u.letters.rbegin(), u.letters.rend());
    for (int& l : letters) l = -l;
    return Word{std::move(letters)};
}

Word commutator(const Word& u, const Word& v) {
    return multiply(multiply(u, v), multiply(invert(u), invert(v)));
}

Word word_pow(const Word& u, int p) {
    Word base = p < 0 ? invert(u) : u;
    Word acc;
    for (int k = 0; k < std::abs(p); ++k) acc = multiply(acc, base);
    return acc;
}

std::optional<size_t> WordBall::index_of(const Word& w) const {
    auto it = index.find(w.letters);
    if (it == index.end()) return std::nullopt;
    return it->second;
}

WordBall enumerate_ball(const Alphabet& alphabet, int radius, int cap) {
    if (radius < 0) throw WordError("ball radius must be nonnegative");
    if (radius > cap) throw BallTooLarge("ball too large: radius " + std::to_string(radius) +
                                         " exceeds cap " + std::to_string(cap));
    WordBall ball;
    ball.radius = radius;
    ball.words.push_back(Word{});
    size_t sphere_begin = 0;

    // Letters in rank order so each length class comes out lexicographically.
    std::vector<int> ordered;
    for (size_t g = 0; g < alphabet.size(); ++g) {
        ordered.push_back(static_cast<int>(g) + 1);
        ordered.push_back(-(static_cast<int>(g) + 1));
    }

    for (int len = 1; len <= radius; ++len) {
        size_t sphere_end = ball.words.size();
        for (size_t k = sphere_begin; k < sphere_end; ++k) {
            for (int l : ordered) {
                const Word& w = ball.words[k];
                if (!w.letters.empty() && w.letters.back() == -l) continue;
                Word next = w;
                next.letters.push_back(l);
                ball.words.push_back(std::move(next));
            }
        }
        sphere_begin = sphere_end;
    }
    for (size_t k = 0; k < ball.words.size(); ++k) ball.index[ball.words[k].letters] = k;
    return ball;
}

}  // namespace treelim
