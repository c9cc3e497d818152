#pragma once

#include <complex>
#include <string>
#include <vector>

#include "treelim/gaussian.hpp"

namespace treelim {

// Dense univariate polynomial over Q(i). Invariant: no trailing zero
// coefficient, so degree() == coeffs.size() - 1 and the zero polynomial
// is the empty vector (degree -1).
class Polynomial {
public:
    Polynomial() = default;
    explicit Polynomial(GaussianRational c);
    explicit Polynomial(std::vector<GaussianRational> coeffs);

    static Polynomial variable();          // t
    static Polynomial monomial(const GaussianRational& c, int k);

    bool is_zero() const { return coeffs_.empty(); }
    int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
    const GaussianRational& leading() const;
    const GaussianRational& coeff(int k) const;  // 0 outside the support
    const std::vector<GaussianRational>& coeffs() const { return coeffs_; }

    bool is_constant() const { return coeffs_.size() <= 1; }
    bool is_monic() const { return !is_zero() && leading() == GaussianRational(1); }

    Polynomial monic() const;

    friend Polynomial operator+(const Polynomial& a, const Polynomial& b);
    friend Polynomial operator-(const Polynomial& a, const Polynomial& b);
    friend Polynomial operator*(const Polynomial& a, const Polynomial& b);
    Polynomial operator-() const;
    friend Polynomial operator*(const GaussianRational& c, const Polynomial& p);
    friend bool operator==(const Polynomial& a, const Polynomial& b) {
        return a.coeffs_ == b.coeffs_;
    }

    // Euclidean division: *this = q * divisor + r with deg r < deg divisor.
    std::pair<Polynomial, Polynomial> divmod(const Polynomial& divisor) const;

    static Polynomial gcd(const Polynomial& a, const Polynomial& b);  // monic

    Polynomial shifted(int k) const;  // * t^k, k >= 0
    Polynomial pow(unsigned k) const;

    GaussianRational evaluate(const GaussianRational& x) const;
    std::complex<double> evaluate(std::complex<double> x) const;

    std::string str(const std::string& var = "t") const;

private:
    void trim();
    std::vector<GaussianRational> coeffs_;  // coeffs_[k] multiplies var^k
};

}  // namespace treelim
