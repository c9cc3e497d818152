#pragma once

#include <complex>
#include <optional>
#include <string>

#include "treelim/laurent.hpp"
#include "treelim/polynomial.hpp"

namespace treelim {

// Ratio of univariate polynomials over Q(i), always in canonical form:
// gcd(num, den) = 1 and den monic. Zero is 0/1, so equality of canonical
// forms is field equality.
class RationalFunction {
public:
    RationalFunction() : num_(), den_(GaussianRational(1)) {}
    RationalFunction(Polynomial num, Polynomial den);
    explicit RationalFunction(const GaussianRational& c)
        : num_(c), den_(GaussianRational(1)) {}
    explicit RationalFunction(const LaurentPolynomial& l);

    static RationalFunction variable() { return RationalFunction(Polynomial::variable(), Polynomial(GaussianRational(1))); }
    static RationalFunction one() { return RationalFunction(GaussianRational(1)); }

    const Polynomial& num() const { return num_; }
    const Polynomial& den() const { return den_; }
    bool is_zero() const { return num_.is_zero(); }
    bool is_constant() const { return num_.is_constant() && den_.is_constant(); }

    friend RationalFunction operator+(const RationalFunction& a, const RationalFunction& b);
    friend RationalFunction operator-(const RationalFunction& a, const RationalFunction& b);
    friend RationalFunction operator*(const RationalFunction& a, const RationalFunction& b);
    friend RationalFunction operator/(const RationalFunction& a, const RationalFunction& b);
    RationalFunction operator-() const;
    friend bool operator==(const RationalFunction& a, const RationalFunction& b) {
        return a.num_ == b.num_ && a.den_ == b.den_;
    }

    RationalFunction pow(int k) const;  // negative exponents allowed on nonzero functions

    // deg(num) - deg(den): positive exactly when |f| blows up at t -> infinity.
    int degree_at_infinity() const;

    // g with g(s) = f(t0 + 1/s) identically, in canonical form.
    RationalFunction substitute_end_chart(const GaussianRational& t0) const;

    std::complex<double> evaluate(std::complex<double> t) const;
    std::optional<GaussianRational> evaluate_exact(const GaussianRational& t) const;  // nullopt at poles

    std::string str(const std::string& var = "t") const;

private:
    void canonicalize();
    Polynomial num_, den_;
};

}  // namespace treelim
