#pragma once

#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace treelim {

struct WordError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct WordParseError : WordError {
    WordParseError(const std::string& what, size_t position)
        : WordError(what + " at position " + std::to_string(position)), position(position) {}
    size_t position;
};

struct BallTooLarge : WordError {
    using WordError::WordError;
};

// Generator names are single lowercase letters; the matching uppercase letter
// denotes the inverse. Order of generators is the order given.
class Alphabet {
public:
    explicit Alphabet(const std::string& letters);

    size_t size() const { return letters_.size(); }
    char letter(size_t i) const { return letters_[i]; }
    int index_of(char lower) const;  // -1 if unknown
    const std::string& letters() const { return letters_; }

    friend bool operator==(const Alphabet& a, const Alphabet& b) {
        return a.letters_ == b.letters_;
    }

private:
    std::string letters_;
};

// Freely reduced word. letters[k] = +(g+1) for generator g, -(g+1) for its
// inverse. The empty word is the identity.
struct Word {
    std::vector<int> letters;

    bool is_identity() const { return letters.empty(); }
    size_t length() const { return letters.size(); }

    friend bool operator==(const Word&, const Word&) = default;
    friend bool operator<(const Word& a, const Word& b) { return a.letters < b.letters; }
};

// Shortlex: length first, then by letter rank a < A < b < B < ...
bool shortlex_less(const Word& a, const Word& b);

Word reduce_letters(std::vector<int> letters);
Word parse_word(const std::string& text, const Alphabet& alphabet);
std::string render_word(const Word& w, const Alphabet& alphabet);

Word multiply(const Word& u, const Word& v);
Word invert(const Word& u);
Word commutator(const Word& u, const Word& v);
Word word_pow(const Word& u, int p);

inline constexpr int kDefaultBallCap = 8;

// All freely reduced words of length <= radius, in shortlex order.
struct WordBall {
    int radius = 0;
    std::vector<Word> words;

    size_t size() const { return words.size(); }
    std::optional<size_t> index_of(const Word& w) const;

    // built by enumerate_ball
    std::map<std::vector<int>, size_t> index;
};

WordBall enumerate_ball(const Alphabet& alphabet, int radius, int cap = kDefaultBallCap);

}  // namespace treelim
