#pragma once

#include <complex>
#include <gmpxx.h>
#include <stdexcept>
#include <string>

namespace treelim {

using Rational = mpq_class;

inline Rational make_rational(long num, long den = 1) {
    if (den == 0) throw std::domain_error("rational with zero denominator");
    Rational q{mpz_class(num), mpz_class(den)};
    q.canonicalize();
    return q;
}

// "p/q" with the "/q" omitted for integers.
inline std::string to_string(const Rational& q) {
    return q.get_str();
}

// Element of Q(i). Components are kept canonical by mpq_class itself
// (positive denominator, lowest terms), so equality is plain field equality.
struct GaussianRational {
    Rational re, im;

    GaussianRational() : re(0), im(0) {}
    GaussianRational(Rational r) : re(std::move(r)), im(0) {}
    GaussianRational(Rational r, Rational i) : re(std::move(r)), im(std::move(i)) {}
    GaussianRational(long r) : re(r), im(0) {}

    static GaussianRational i() { return {Rational(0), Rational(1)}; }

    bool is_zero() const { return re == 0 && im == 0; }
    bool is_real() const { return im == 0; }

    GaussianRational conj() const { return {re, -im}; }
    Rational norm2() const { return re * re + im * im; }

    friend GaussianRational operator+(const GaussianRational& a, const GaussianRational& b) {
        return {a.re + b.re, a.im + b.im};
    }
    friend GaussianRational operator-(const GaussianRational& a, const GaussianRational& b) {
        return {a.re - b.re, a.im - b.im};
    }
    GaussianRational operator-() const { return {-re, -im}; }
    friend GaussianRational operator*(const GaussianRational& a, const GaussianRational& b) {
        return {a.re * b.re - a.im * b.im, a.re * b.im + a.im * b.re};
    }
    friend GaussianRational operator/(const GaussianRational& a, const GaussianRational& b) {
        Rational n = b.norm2();
        if (n == 0) throw std::domain_error("division by zero in Q(i)");
        GaussianRational p = a * b.conj();
        return {p.re / n, p.im / n};
    }
    GaussianRational& operator+=(const GaussianRational& o) { return *this = *this + o; }
    GaussianRational& operator-=(const GaussianRational& o) { return *this = *this - o; }
    GaussianRational& operator*=(const GaussianRational& o) { return *this = *this * o; }
    GaussianRational& operator/=(const GaussianRational& o) { return *this = *this / o; }

    friend bool operator==(const GaussianRational& a, const GaussianRational& b) {
        return a.re == b.re && a.im == b.im;
    }
    friend bool operator!=(const GaussianRational& a, const GaussianRational& b) { return !(a == b); }

    // Total order for use as a map key; not algebraically meaningful.
    friend bool operator<(const GaussianRational& a, const GaussianRational& b) {
        int c = cmp(a.re, b.re);
        if (c != 0) return c < 0;
        return cmp(a.im, b.im) < 0;
    }

    std::complex<double> to_complex() const { return {re.get_d(), im.get_d()}; }

    std::string str() const {
        if (im == 0) return to_string(re);
        std::string imag = (im == 1) ? "i" : (im == -1) ? "-i" : to_string(im) + "*i";
        if (re == 0) return imag;
        if (im > 0 && im != 1) return to_string(re) + "+" + imag;
        if (im == 1) return to_string(re) + "+i";
        return to_string(re) + imag;  // negative imaginary part carries its sign
    }
};

}  // namespace treelim
