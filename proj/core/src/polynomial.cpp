#include "treelim/polynomial.hpp"

#include <stdexcept>

namespace treelim {

Polynomial::Polynomial(GaussianRational c) {
    if (!c.is_zero()) coeffs_.push_back(std::move(c));
}

Polynomial::Polynomial(std::vector<GaussianRational> coeffs) : coeffs_(std::move(coeffs)) {
    trim();
}

Polynomial Polynomial::variable() { return monomial(GaussianRational(1), 1); }

Polynomial Polynomial::monomial(const GaussianRational& c, int k) {
    if (k < 0) throw std::domain_error("monomial exponent must be nonnegative");
    if (c.is_zero()) return {};
    Polynomial p;
    p.coeffs_.assign(static_cast<size_t>(k) + 1, GaussianRational());
    p.coeffs_.back() = c;
    return p;
}

void Polynomial::trim() {
    while (!coeffs_.empty() && coeffs_.back().is_zero()) coeffs_.pop_back();
}

const GaussianRational& Polynomial::leading() const {
    if (is_zero()) throw std::domain_error("leading coefficient of zero polynomial");
    return coeffs_.back();
}

const GaussianRational& Polynomial::coeff(int k) const {
    static const GaussianRational zero;
    if (k < 0 || k >= static_cast<int>(coeffs_.size())) return zero;
    return coeffs_[static_cast<size_t>(k)];
}

Polynomial Polynomial::monic() const {
    if (is_zero()) return {};
    Polynomial r = *this;
    const GaussianRational lead = leading();
    for (auto& c : r.coeffs_) c /= lead;
    return r;
}

Polynomial operator+(const Polynomial& a, const Polynomial& b) {
    std::vector<GaussianRational> out(std::max(a.coeffs_.size(), b.coeffs_.size()));
    for (size_t i = 0; i < out.size(); ++i) {
        out[i] = a.coeff(static_cast<int>(i)) + b.coeff(static_cast<int>(i));
    }
    return Polynomial(std::move(out));
}

Polynomial operator-(const Polynomial& a, const Polynomial& b) { return a + (-b); }

Polynomial Polynomial::operator-() const {
    Polynomial r = *this;
    for (auto& c : r.coeffs_) c = -c;
    return r;
}

Polynomial operator*(const Polynomial& a, const Polynomial& b) {
    if (a.is_zero() || b.is_zero()) return {};
    std::vector<GaussianRational> out(a.coeffs_.size() + b.coeffs_.size() - 1);
    for (size_t i = 0; i < a.coeffs_.size(); ++i) {
        if (a.coeffs_[i].is_zero()) continue;
        for (size_t j = 0; j < b.coeffs_.size(); ++j) {
            out[i + j] += a.coeffs_[i] * b.coeffs_[j];
        }
    }
    return Polynomial(std::move(out));
}

Polynomial operator*(const GaussianRational& c, const Polynomial& p) {
    return Polynomial(c) * p;
}

std::pair<Polynomial, Polynomial> Polynomial::divmod(const Polynomial& divisor) const {
    if (divisor.is_zero()) throw std::domain_error("polynomial division by zero");
    Polynomial rem = *this;
    std::vector<GaussianRational> quot;
    int dd = divisor.degree();
    if (rem.degree() >= dd) quot.assign(static_cast<size_t>(rem.degree() - dd) + 1, GaussianRational());
    const GaussianRational& lead = divisor.leading();
    while (!rem.is_zero() && rem.degree() >= dd) {
        int k = rem.degree() - dd;
        GaussianRational f = rem.leading() / lead;
        quot[static_cast<size_t>(k)] = f;
        rem = rem - Polynomial::monomial(f, k) * divisor;
    }
    return {Polynomial(std::move(quot)), rem};
}

Polynomial Polynomial::gcd(const Polynomial& a, const Polynomial& b) {
    Polynomial x = a, y = b;
    while (!y.is_zero()) {
        Polynomial r = x.divmod(y).second;
        x = y;
        y = r.is_zero() ? r : r.monic();  // monic remainders keep coefficients tame
    }
    return x.is_zero() ? x : x.monic();
}

Polynomial Polynomial::shifted(int k) const {
    if (k < 0) throw std::domain_error("negative shift");
    if (is_zero() || k == 0) return *this;
    Polynomial r;
    r.coeffs_.assign(coeffs_.size() + static_cast<size_t>(k), GaussianRational());
    for (size_t i = 0; i < coeffs_.size(); ++i) r.coeffs_[i + static_cast<size_t>(k)] = coeffs_[i];
    return r;
}

Polynomial Polynomial::pow(unsigned k) const {
    Polynomial acc(GaussianRational(1));
    Polynomial base = *this;
    while (k) {
        if (k & 1u) acc = acc * base;
        base = base * base;
        k >>= 1u;
    }
    return acc;
}

GaussianRational Polynomial::evaluate(const GaussianRational& x) const {
    GaussianRational acc;
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * x + *it;
    return acc;
}

std::complex<double> Polynomial::evaluate(std::complex<double> x) const {
    std::complex<double> acc;
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * x + it->to_complex();
    return acc;
}

std::string Polynomial::str(const std::string& var) const {
    if (is_zero()) return "0";
    std::string out;
    for (int k = degree(); k >= 0; --k) {
        const GaussianRational& c = coeff(k);
        if (c.is_zero()) continue;
        std::string term;
        std::string cs = c.str();
        bool needs_parens = !c.is_real() || (c.re.get_den() != 1);
        if (k == 0) {
            term = needs_parens && !c.is_real() ? "(" + cs + ")" : cs;
        } else {
            std::string power = (k == 1) ? var : var + "^" + std::to_string(k);
            if (c == GaussianRational(1)) term = power;
            else if (c == GaussianRational(-1)) term = "-" + power;
            else term = (needs_parens ? "(" + cs + ")" : cs) + "*" + power;
        }
        if (out.empty()) {
            out = term;
        } else if (!term.empty() && term[0] == '-') {
            out += " - " + term.substr(1);
        } else {
            out += " + " + term;
        }
    }
    return out;
}

}  // namespace treelim
