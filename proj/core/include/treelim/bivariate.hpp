#pragma once

#include <complex>
#include <map>
#include <string>

#include "treelim/gaussian.hpp"

namespace treelim {

// Exponent vector of a monomial y^m z^n.
struct LatticePoint {
    long long m = 0, n = 0;
    friend bool operator==(const LatticePoint&, const LatticePoint&) = default;
    friend bool operator<(const LatticePoint& a, const LatticePoint& b) {
        return a.m != b.m ? a.m < b.m : a.n < b.n;
    }
};

// Bivariate polynomial over Q(i) with sparse support.
// Invariant: no stored zero coefficient.
class BivariatePolynomial {
public:
    BivariatePolynomial() = default;
    explicit BivariatePolynomial(const GaussianRational& c) {
        if (!c.is_zero()) terms_[{0, 0}] = c;
    }

    static BivariatePolynomial monomial(const GaussianRational& c, long long m, long long n);

    bool is_zero() const { return terms_.empty(); }
    size_t term_count() const { return terms_.size(); }
    const std::map<LatticePoint, GaussianRational>& terms() const { return terms_; }
    GaussianRational coeff(const LatticePoint& p) const;

    friend BivariatePolynomial operator+(const BivariatePolynomial& a, const BivariatePolynomial& b);
    friend BivariatePolynomial operator-(const BivariatePolynomial& a, const BivariatePolynomial& b);
    friend BivariatePolynomial operator*(const BivariatePolynomial& a, const BivariatePolynomial& b);
    BivariatePolynomial operator-() const;
    friend bool operator==(const BivariatePolynomial& a, const BivariatePolynomial& b) {
        return a.terms_ == b.terms_;
    }

    BivariatePolynomial pow(unsigned k) const;

    std::complex<double> evaluate(std::complex<double> y, std::complex<double> z) const;

    std::string str() const;

private:
    void add_term(const LatticePoint& p, const GaussianRational& c);
    std::map<LatticePoint, GaussianRational> terms_;
};

}  // namespace treelim
