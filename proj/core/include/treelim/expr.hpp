#pragma once

#include <memory>
#include <stdexcept>
#include <string>

#include "treelim/bivariate.hpp"
#include "treelim/rational_function.hpp"

namespace treelim {

struct ExprParseError : std::runtime_error {
    ExprParseError(const std::string& what, size_t position)
        : std::runtime_error(what + " at position " + std::to_string(position)),
          position(position) {}
    size_t position;
};

// AST for the shared expression grammar: integers, `i`, single-letter
// variables, + - * /, `^` with a nonnegative integer exponent, parentheses.
struct Expr {
    enum class Kind { Integer, ImaginaryUnit, Variable, Add, Sub, Mul, Div, Neg, Pow };
    Kind kind;
    mpz_class integer;
    char var = 0;
    std::shared_ptr<const Expr> lhs, rhs;
    long exponent = 0;
    size_t pos = 0;
};

using ExprPtr = std::shared_ptr<const Expr>;

ExprPtr parse_expression(const std::string& text);

// Evaluation in Q(i)(var). Any single-letter variable other than `var` is an error.
RationalFunction eval_rational_function(const ExprPtr& e, char var = 't');

// Evaluation as a polynomial in y and z; division is only allowed by
// nonzero constants.
BivariatePolynomial eval_bivariate_polynomial(const ExprPtr& e);

// Constant evaluation; variables are an error.
GaussianRational eval_gaussian(const ExprPtr& e);

// Convenience wrappers.
RationalFunction parse_rational_function(const std::string& text, char var = 't');
BivariatePolynomial parse_bivariate(const std::string& text);
GaussianRational parse_gaussian(const std::string& text);

}  // namespace treelim
