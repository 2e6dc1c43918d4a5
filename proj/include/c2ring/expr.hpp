#pragma once

#include <cstdint>
#include <memory>
#include <stdexcept>
#include <string>
#include <vector>

#include "c2ring/rational.hpp"
#include "c2ring/ring.hpp"

namespace c2ring {

// Syntax error with the byte offset of the offending token and the set of
// token descriptions that would have been accepted there.
class ParseError : public std::runtime_error {
public:
    ParseError(const std::string& message, std::size_t offset,
               std::vector<std::string> expected = {})
        : std::runtime_error(message + " at offset " + std::to_string(offset)),
          offset_(offset),
          expected_(std::move(expected)) {}

    std::size_t offset() const { return offset_; }
    const std::vector<std::string>& expected() const { return expected_; }

private:
    std::size_t offset_;
    std::vector<std::string> expected_;
};

// Division whose quotient does not exist in the integral lattice.
class InexactDivision : public std::domain_error {
public:
    using std::domain_error::domain_error;
};

// Expression AST. Grammar (whitespace insignificant):
//   expr    := term (('+' | '-') term)*
//   term    := unary (('*' unary) | ('/' unary) | implicit)*
//   unary   := '-'* power
//   power   := atom ('^' INT)?
//   atom    := INT | generator | '(' expr ')'
//   generator := 'rho' | 'eta' | 'w' '[' ('-')? INT ']' | 'x' '[' INT ']'
// A '*' may be left implicit between an integer literal and a generator
// ("2rho"). Exponents are nonnegative. x[i] requires i >= 1 (parse error).
struct Expression {
    enum class Node { Integer, Generator, Add, Sub, Mul, Div, Pow, Neg };

    Node node;
    Int value;                             // Integer
    BasisElement gen = BasisElement::unit();  // Generator
    std::unique_ptr<Expression> lhs, rhs;  // binary; unary uses lhs
    std::int64_t exponent = 0;             // Pow
};

using ExprPtr = std::unique_ptr<Expression>;

ExprPtr parse(const std::string& text);

// Integral evaluation. Division is by (scalar) powers of 2 only and must be
// exact; otherwise InexactDivision. Other divisor shapes are domain errors.
RingElement eval(const Expression& e);

// Rational evaluation: division by any nonzero scalar.
RationalElement eval_rational(const Expression& e);

// Canonical printing (round-trips through parse + eval). These simply
// re-export the ring printers under the DSL's name for them.
inline std::string print_canonical(const RingElement& a) { return to_string(a); }
inline std::string print_canonical(const RationalElement& a) { return to_string(a); }

}  // namespace c2ring
