#pragma once

#include <map>
#include <stdexcept>

#include "treelim/polynomial.hpp"

namespace treelim {

// Laurent polynomial over Q(i): finitely many terms c_k * t^k with k in Z.
// Invariant: no stored zero coefficient.
class LaurentPolynomial {
public:
    LaurentPolynomial() = default;
    explicit LaurentPolynomial(const GaussianRational& c) {
        if (!c.is_zero()) terms_[0] = c;
    }

    static LaurentPolynomial monomial(const GaussianRational& c, int k) {
        LaurentPolynomial p;
        if (!c.is_zero()) p.terms_[k] = c;
        return p;
    }

    bool is_zero() const { return terms_.empty(); }
    int degree() const {
        if (is_zero()) throw std::domain_error("degree of zero Laurent polynomial");
        return terms_.rbegin()->first;
    }
    int order() const {
        if (is_zero()) throw std::domain_error("order of zero Laurent polynomial");
        return terms_.begin()->first;
    }
    const std::map<int, GaussianRational>& terms() const { return terms_; }

    friend LaurentPolynomial operator+(const LaurentPolynomial& a, const LaurentPolynomial& b) {
        LaurentPolynomial r = a;
        for (const auto& [k, c] : b.terms_) r.add_term(k, c);
        return r;
    }
    friend LaurentPolynomial operator-(const LaurentPolynomial& a, const LaurentPolynomial& b) {
        LaurentPolynomial r = a;
        for (const auto& [k, c] : b.terms_) r.add_term(k, -c);
        return r;
    }
    LaurentPolynomial operator-() const {
        LaurentPolynomial r;
        for (const auto& [k, c] : terms_) r.terms_[k] = -c;
        return r;
    }
    friend LaurentPolynomial operator*(const LaurentPolynomial& a, const LaurentPolynomial& b) {
        LaurentPolynomial r;
        for (const auto& [i, ci] : a.terms_)
            for (const auto& [j, cj] : b.terms_) r.add_term(i + j, ci * cj);
        return r;
    }
    friend bool operator==(const LaurentPolynomial& a, const LaurentPolynomial& b) {
        return a.terms_ == b.terms_;
    }

    LaurentPolynomial pow(unsigned k) const {
        LaurentPolynomial acc(GaussianRational(1));
        LaurentPolynomial base = *this;
        while (k) {
            if (k & 1u) acc = acc * base;
            base = base * base;
            k >>= 1u;
        }
        return acc;
    }

    // Numerator/denominator pair (n, t^m) with n an ordinary polynomial.
    std::pair<Polynomial, int> as_fraction() const {
        if (is_zero()) return {Polynomial(), 0};
        int shift = std::min(0, order());
        std::vector<GaussianRational> coeffs(static_cast<size_t>(degree() - shift) + 1);
        for (const auto& [k, c] : terms_) coeffs[static_cast<size_t>(k - shift)] = c;
        return {Polynomial(std::move(coeffs)), -shift};
    }

private:
    void add_term(int k, const GaussianRational& c) {
        auto it = terms_.find(k);
        if (it == terms_.end()) {
            if (!c.is_zero()) terms_[k] = c;
        } else {
            it->second += c;
            if (it->second.is_zero()) terms_.erase(it);
        }
    }
    std::map<int, GaussianRational> terms_;
};

}  // namespace treelim
