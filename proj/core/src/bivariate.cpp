#include "treelim/bivariate.hpp"

#include <algorithm>
#include <stdexcept>
#include <vector>

namespace treelim {

BivariatePolynomial BivariatePolynomial::monomial(const GaussianRational& c, long long m, long long n) {
    if (m < 0 || n < 0) throw std::domain_error("bivariate monomial with negative exponent");
    BivariatePolynomial p;
    if (!c.is_zero()) p.terms_[{m, n}] = c;
    return p;
}

GaussianRational BivariatePolynomial::coeff(const LatticePoint& p) const {
    auto it = terms_.find(p);
    return it == terms_.end() ? GaussianRational() : it->second;
}

void BivariatePolynomial::add_term(const LatticePoint& p, const GaussianRational& c) {
    auto it = terms_.find(p);
    if (it == terms_.end()) {
        if (!c.is_zero()) terms_[p] = c;
    } else {
        it->second += c;
        if (it->second.is_zero()) terms_.erase(it);
    }
}

BivariatePolynomial operator+(const BivariatePolynomial& a, const BivariatePolynomial& b) {
    BivariatePolynomial r = a;
    for (const auto& [p, c] : b.terms_) r.add_term(p, c);
    return r;
}

BivariatePolynomial operator-(const BivariatePolynomial& a, const BivariatePolynomial& b) {
    BivariatePolynomial r = a;
    for (const auto& [p, c] : b.terms_) r.add_term(p, -c);
    return r;
}

BivariatePolynomial BivariatePolynomial::operator-() const {
    BivariatePolynomial r;
    for (const auto& [p, c] : terms_) r.terms_[p] = -c;
    return r;
}

BivariatePolynomial operator*(const BivariatePolynomial& a, const BivariatePolynomial& b) {
    BivariatePolynomial r;
    for (const auto& [p, cp] : a.terms_)
        for (const auto& [q, cq] : b.terms_) r.add_term({p.m + q.m, p.n + q.n}, cp * cq);
    return r;
}

BivariatePolynomial BivariatePolynomial::pow(unsigned k) const {
    BivariatePolynomial acc(GaussianRational(1));
    BivariatePolynomial base = *this;
    while (k) {
        if (k & 1u) acc = acc * base;
        base = base * base;
        k >>= 1u;
    }
    return acc;
}

std::complex<double> BivariatePolynomial::evaluate(std::complex<double> y, std::complex<double> z) const {
    // Horner in y over sparse z-polynomials.
    if (is_zero()) return {0.0, 0.0};
    // terms_ is ordered by (m, n); walk m-groups from the top.
    std::vector<std::pair<long long, std::complex<double>>> by_m;  // (m, value of z-part)
    for (auto it = terms_.begin(); it != terms_.end();) {
        long long m = it->first.m;
        std::complex<double> acc = 0.0;
        long long prev_n = -1;
        std::vector<std::pair<long long, std::complex<double>>> zterms;
        for (; it != terms_.end() && it->first.m == m; ++it)
            zterms.emplace_back(it->first.n, it->second.to_complex());
        for (auto jt = zterms.rbegin(); jt != zterms.rend(); ++jt) {
            if (prev_n < 0) acc = jt->second;
            else acc = acc * std::pow(z, static_cast<double>(prev_n - jt->first)) + jt->second;
            prev_n = jt->first;
        }
        acc *= std::pow(z, static_cast<double>(prev_n));
        by_m.emplace_back(m, acc);
    }
    std::complex<double> result = 0.0;
    long long prev_m = -1;
    for (auto jt = by_m.rbegin(); jt != by_m.rend(); ++jt) {
        if (prev_m < 0) result = jt->second;
        else result = result * std::pow(y, static_cast<double>(prev_m - jt->first)) + jt->second;
        prev_m = jt->first;
    }
    result *= std::pow(y, static_cast<double>(prev_m));
    return result;
}

std::string BivariatePolynomial::str() const {
    if (is_zero()) return "0";
    std::string out;
    // Descending (m, n) for a stable, readable order.
    for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
        const auto& [p, c] = *it;
        std::string term;
        auto power = [](const char* v, long long e) -> std::string {
            if (e == 0) return "";
            if (e == 1) return v;
            return std::string(v) + "^" + std::to_string(e);
        };
        std::string vars = power("y", p.m);
        std::string zs = power("z", p.n);
        if (!vars.empty() && !zs.empty()) vars += "*" + zs;
        else vars += zs;
        bool needs_parens = !c.is_real() || c.re.get_den() != 1;
        std::string cs = c.str();
        if (vars.empty()) term = needs_parens && !c.is_real() ? "(" + cs + ")" : cs;
        else if (c == GaussianRational(1)) term = vars;
        else if (c == GaussianRational(-1)) term = "-" + vars;
        else term = (needs_parens ? "(" + cs + ")" : cs) + "*" + vars;
        if (out.empty()) out = term;
        else if (term[0] == '-') out += " - " + term.substr(1);
        else out += " + " + term;
    }
    return out;
}

}  // namespace treelim
