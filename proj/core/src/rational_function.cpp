#include "treelim/rational_function.hpp"

#include <stdexcept>

namespace treelim {

RationalFunction::RationalFunction(Polynomial num, Polynomial den)
    : num_(std::move(num)), den_(std::move(den)) {
    if (den_.is_zero()) throw std::domain_error("rational function with zero denominator");
    canonicalize();
}

RationalFunction::RationalFunction(const LaurentPolynomial& l) {
    auto [n, m] = l.as_fraction();
    num_ = std::move(n);
    den_ = Polynomial::monomial(GaussianRational(1), m);
    canonicalize();
}

void RationalFunction::canonicalize() {
    if (num_.is_zero()) {
        den_ = Polynomial(GaussianRational(1));
        return;
    }
    Polynomial g = Polynomial::gcd(num_, den_);
    if (g.degree() > 0) {
        num_ = num_.divmod(g).first;
        den_ = den_.divmod(g).first;
    }
    GaussianRational lead = den_.leading();
    if (!(lead == GaussianRational(1))) {
        den_ = den_.monic();
        num_ = (GaussianRational(1) / lead) * num_;
    }
}

RationalFunction operator+(const RationalFunction& a, const RationalFunction& b) {
    return RationalFunction(a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_);
}

RationalFunction operator-(const RationalFunction& a, const RationalFunction& b) {
    return a + (-b);
}

RationalFunction RationalFunction::operator-() const {
    RationalFunction r = *this;
    r.num_ = -r.num_;
    return r;
}

RationalFunction operator*(const RationalFunction& a, const RationalFunction& b) {
    return RationalFunction(a.num_ * b.num_, a.den_ * b.den_);
}

RationalFunction operator/(const RationalFunction& a, const RationalFunction& b) {
    if (b.is_zero()) throw std::domain_error("division by zero rational function");
    return RationalFunction(a.num_ * b.den_, a.den_ * b.num_);
}

RationalFunction RationalFunction::pow(int k) const {
    if (k == 0) return one();
    if (k < 0) {
        if (is_zero()) throw std::domain_error("negative power of zero");
        return one() / pow(-k);
    }
    return RationalFunction(num_.pow(static_cast<unsigned>(k)), den_.pow(static_cast<unsigned>(k)));
}

int RationalFunction::degree_at_infinity() const {
    if (is_zero()) throw std::domain_error("valuation of zero undefined");
    return num_.degree() - den_.degree();
}

namespace {

// s^deg(p) * p(t0 + 1/s), a polynomial in s of degree <= deg(p).
Polynomial reversed_shift(const Polynomial& p, const GaussianRational& t0) {
    int n = p.degree();
    Polynomial shift = Polynomial(std::vector<GaussianRational>{GaussianRational(1), t0});  // 1 + t0*s
    Polynomial out;
    for (int k = 0; k <= n; ++k) {
        const GaussianRational& c = p.coeff(k);
        if (c.is_zero()) continue;
        out = out + (c * shift.pow(static_cast<unsigned>(k))).shifted(n - k);
    }
    return out;
}

}  // namespace

RationalFunction RationalFunction::substitute_end_chart(const GaussianRational& t0) const {
    if (is_zero()) throw std::domain_error("valuation of zero undefined");
    int dn = num_.degree(), dd = den_.degree();
    Polynomial n2 = reversed_shift(num_, t0).shifted(std::max(0, dd - dn));
    Polynomial d2 = reversed_shift(den_, t0).shifted(std::max(0, dn - dd));
    return RationalFunction(std::move(n2), std::move(d2));
}

std::complex<double> RationalFunction::evaluate(std::complex<double> t) const {
    return num_.evaluate(t) / den_.evaluate(t);
}

std::optional<GaussianRational> RationalFunction::evaluate_exact(const GaussianRational& t) const {
    GaussianRational d = den_.evaluate(t);
    if (d.is_zero()) return std::nullopt;
    return num_.evaluate(t) / d;
}

std::string RationalFunction::str(const std::string& var) const {
    if (den_ == Polynomial(GaussianRational(1))) return num_.str(var);
    return "(" + num_.str(var) + ")/(" + den_.str(var) + ")";
}

}  // namespace treelim
