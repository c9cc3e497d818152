#include "treelim/expr.hpp"

#include <cctype>

namespace treelim {

namespace {

constexpr long kMaxExponent = 1024;

class Parser {
public:
    explicit Parser(const std::string& text) : text_(text) {}

    ExprPtr parse() {
        ExprPtr e = expression();
        skip_ws();
        if (pos_ != text_.size()) fail("unexpected trailing input");
        return e;
    }

private:
    ExprPtr expression() {
        ExprPtr e = term();
        for (;;) {
            skip_ws();
            if (accept('+')) e = binary(Expr::Kind::Add, e, term());
            else if (accept('-')) e = binary(Expr::Kind::Sub, e, term());
            else return e;
        }
    }

    ExprPtr term() {
        ExprPtr e = unary();
        for (;;) {
            skip_ws();
            if (accept('*')) e = binary(Expr::Kind::Mul, e, unary());
            else if (accept('/')) e = binary(Expr::Kind::Div, e, unary());
            else return e;
        }
    }

    ExprPtr unary() {
        skip_ws();
        if (accept('-')) {
            auto node = std::make_shared<Expr>();
            node->kind = Expr::Kind::Neg;
            node->pos = pos_ - 1;
            node->lhs = unary();
            return node;
        }
        return power();
    }

    ExprPtr power() {
        ExprPtr base = primary();
        skip_ws();
        if (!accept('^')) return base;
        skip_ws();
        size_t at = pos_;
        if (pos_ < text_.size() && text_[pos_] == '-')
            fail("exponent must be a nonnegative integer");
        if (pos_ >= text_.size() || !std::isdigit(static_cast<unsigned char>(text_[pos_])))
            fail("expected integer exponent");
        long e = 0;
        while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
            e = e * 10 + (text_[pos_] - '0');
            if (e > kMaxExponent) throw ExprParseError("exponent too large", at);
            ++pos_;
        }
        auto node = std::make_shared<Expr>();
        node->kind = Expr::Kind::Pow;
        node->pos = at;
        node->lhs = base;
        node->exponent = e;
        return node;
    }

    ExprPtr primary() {
        skip_ws();
        if (pos_ >= text_.size()) fail("unexpected end of input");
        char c = text_[pos_];
        if (c == '(') {
            ++pos_;
            ExprPtr e = expression();
            skip_ws();
            if (!accept(')')) fail("expected ')'");
            return e;
        }
        if (std::isdigit(static_cast<unsigned char>(c))) {
            size_t at = pos_;
            std::string digits;
            while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_])))
                digits += text_[pos_++];
            auto node = std::make_shared<Expr>();
            node->kind = Expr::Kind::Integer;
            node->integer = mpz_class(digits);
            node->pos = at;
            return node;
        }
        if (std::isalpha(static_cast<unsigned char>(c))) {
            auto node = std::make_shared<Expr>();
            node->pos = pos_;
            node->kind = (c == 'i') ? Expr::Kind::ImaginaryUnit : Expr::Kind::Variable;
            node->var = c;
            ++pos_;
            return node;
        }
        fail(std::string("unexpected character '") + c + "'");
        return nullptr;
    }

    static ExprPtr binary(Expr::Kind k, ExprPtr l, ExprPtr r) {
        auto node = std::make_shared<Expr>();
        node->kind = k;
        node->pos = l->pos;
        node->lhs = std::move(l);
        node->rhs = std::move(r);
        return node;
    }

    void skip_ws() {
        while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    }
    bool accept(char c) {
        if (pos_ < text_.size() && text_[pos_] == c) { ++pos_; return true; }
        return false;
    }
    [[noreturn]] void fail(const std::string& msg) const { throw ExprParseError(msg, pos_); }

    const std::string& text_;
    size_t pos_ = 0;
};

}  // namespace

ExprPtr parse_expression(const std::string& text) { return Parser(text).parse(); }

RationalFunction eval_rational_function(const ExprPtr& e, char var) {
    switch (e->kind) {
        case Expr::Kind::Integer:
            return RationalFunction(GaussianRational(Rational(e->integer)));
        case Expr::Kind::ImaginaryUnit:
            return RationalFunction(GaussianRational::i());
        case Expr::Kind::Variable:
            if (e->var != var)
                throw ExprParseError(std::string("unknown variable '") + e->var + "'", e->pos);
            return RationalFunction::variable();
        case Expr::Kind::Add: return eval_rational_function(e->lhs, var) + eval_rational_function(e->rhs, var);
        case Expr::Kind::Sub: return eval_rational_function(e->lhs, var) - eval_rational_function(e->rhs, var);
        case Expr::Kind::Mul: return eval_rational_function(e->lhs, var) * eval_rational_function(e->rhs, var);
        case Expr::Kind::Div: {
            RationalFunction d = eval_rational_function(e->rhs, var);
            if (d.is_zero()) throw ExprParseError("division by zero", e->pos);
            return eval_rational_function(e->lhs, var) / d;
        }
        case Expr::Kind::Neg: return -eval_rational_function(e->lhs, var);
        case Expr::Kind::Pow:
            return eval_rational_function(e->lhs, var).pow(static_cast<int>(e->exponent));
    }
    throw std::logic_error("unreachable");
}

BivariatePolynomial eval_bivariate_polynomial(const ExprPtr& e) {
    switch (e->kind) {
        case Expr::Kind::Integer:
            return BivariatePolynomial(GaussianRational(Rational(e->integer)));
        case Expr::Kind::ImaginaryUnit:
            return BivariatePolynomial(GaussianRational::i());
        case Expr::Kind::Variable:
            if (e->var == 'y') return BivariatePolynomial::monomial(GaussianRational(1), 1, 0);
            if (e->var == 'z') return BivariatePolynomial::monomial(GaussianRational(1), 0, 1);
            throw ExprParseError(std::string("unknown variable '") + e->var + "' (expected y or z)", e->pos);
        case Expr::Kind::Add: return eval_bivariate_polynomial(e->lhs) + eval_bivariate_polynomial(e->rhs);
        case Expr::Kind::Sub: return eval_bivariate_polynomial(e->lhs) - eval_bivariate_polynomial(e->rhs);
        case Expr::Kind::Mul: return eval_bivariate_polynomial(e->lhs) * eval_bivariate_polynomial(e->rhs);
        case Expr::Kind::Div: {
            BivariatePolynomial d = eval_bivariate_polynomial(e->rhs);
            if (d.is_zero()) throw ExprParseError("division by zero", e->pos);
            if (d.term_count() != 1 || !(d.terms().begin()->first == LatticePoint{0, 0}))
                throw ExprParseError("division by a non-constant is not a polynomial", e->pos);
            GaussianRational inv = GaussianRational(1) / d.terms().begin()->second;
            BivariatePolynomial num = eval_bivariate_polynomial(e->lhs);
            return BivariatePolynomial(inv) * num;
        }
        case Expr::Kind::Neg: return -eval_bivariate_polynomial(e->lhs);
        case Expr::Kind::Pow:
            return eval_bivariate_polynomial(e->lhs).pow(static_cast<unsigned>(e->exponent));
    }
    throw std::logic_error("unreachable");
}

GaussianRational eval_gaussian(const ExprPtr& e) {
    switch (e->kind) {
        case Expr::Kind::Integer: return GaussianRational(Rational(e->integer));
        case Expr::Kind::ImaginaryUnit: return GaussianRational::i();
        case Expr::Kind::Variable:
            throw ExprParseError(std::string("variable '") + e->var + "' in a constant", e->pos);
        case Expr::Kind::Add: return eval_gaussian(e->lhs) + eval_gaussian(e->rhs);
        case Expr::Kind::Sub: return eval_gaussian(e->lhs) - eval_gaussian(e->rhs);
        case Expr::Kind::Mul: return eval_gaussian(e->lhs) * eval_gaussian(e->rhs);
        case Expr::Kind::Div: {
            GaussianRational d = eval_gaussian(e->rhs);
            if (d.is_zero()) throw ExprParseError("division by zero", e->pos);
            return eval_gaussian(e->lhs) / d;
        }
        case Expr::Kind::Neg: return -eval_gaussian(e->lhs);
        case Expr::Kind::Pow: {
            GaussianRational base = eval_gaussian(e->lhs);
            GaussianRational acc(1);
            for (long k = 0; k < e->exponent; ++k) acc *= base;
            return acc;
        }
    }
    throw std::logic_error("unreachable");
}

RationalFunction parse_rational_function(const std::string& text, char var) {
    return eval_rational_function(parse_expression(text), var);
}

BivariatePolynomial parse_bivariate(const std::string& text) {
    return eval_bivariate_polynomial(parse_expression(text));
}

GaussianRational parse_gaussian(const std::string& text) {
    return eval_gaussian(parse_expression(text));
}

}  // namespace treelim
