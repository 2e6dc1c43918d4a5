#include "c2ring/expr.hpp"

#include <cctype>
#include <utility>

namespace c2ring {

namespace {

constexpr std::int64_t kMaxExponent = 1'000'000;

struct Token {
    enum class Kind {
        Integer,
        Ident,
        LBracket,
        RBracket,
        LParen,
        RParen,
        Plus,
        Minus,
        Star,
        Slash,
        Caret,
        End
    };
    Kind kind;
    std::size_t offset;
    std::string text;
};

std::vector<Token> lex(const std::string& s) {
    std::vector<Token> out;
    std::size_t i = 0;
    while (i < s.size()) {
        const char c = s[i];
        if (std::isspace(static_cast<unsigned char>(c))) {
            ++i;
            continue;
        }
        if (std::isdigit(static_cast<unsigned char>(c))) {
            std::size_t j = i;
            while (j < s.size() && std::isdigit(static_cast<unsigned char>(s[j]))) ++j;
            out.push_back({Token::Kind::Integer, i, s.substr(i, j - i)});
            i = j;
            continue;
        }
        if (std::isalpha(static_cast<unsigned char>(c))) {
            std::size_t j = i;
            while (j < s.size() && std::isalpha(static_cast<unsigned char>(s[j]))) ++j;
            out.push_back({Token::Kind::Ident, i, s.substr(i, j - i)});
            i = j;
            continue;
        }
        Token::Kind kind;
        switch (c) {
            case '[': kind = Token::Kind::LBracket; break;
            case ']': kind = Token::Kind::RBracket; break;
            case '(': kind = Token::Kind::LParen; break;
            case ')': kind = Token::Kind::RParen; break;
            case '+': kind = Token::Kind::Plus; break;
            case '-': kind = Token::Kind::Minus; break;
            case '*': kind = Token::Kind::Star; break;
            case '/': kind = Token::Kind::Slash; break;
            case '^': kind = Token::Kind::Caret; break;
            default:
                throw ParseError(std::string("unexpected character '") + c + "'", i);
        }
        out.push_back({kind, i, std::string(1, c)});
        ++i;
    }
    out.push_back({Token::Kind::End, s.size(), ""});
    return out;
}

ExprPtr make_node(Expression::Node node) {
    auto e = std::make_unique<Expression>();
    e->node = node;
    return e;
}

ExprPtr make_binary(Expression::Node node, ExprPtr l, ExprPtr r) {
    auto e = make_node(node);
    e->lhs = std::move(l);
    e->rhs = std::move(r);
    return e;
}

class Parser {
public:
    explicit Parser(const std::string& text) : tokens_(lex(text)) {}

    ExprPtr parse() {
        ExprPtr e = parse_expr();
        if (peek().kind != Token::Kind::End)
            fail({"'+'", "'-'", "'*'", "'/'", "'^'", "end of input"});
        return e;
    }

private:
    const Token& peek() const { return tokens_[pos_]; }
    const Token& advance() { return tokens_[pos_++]; }
    bool accept(Token::Kind k) {
        if (peek().kind != k) return false;
        ++pos_;
        return true;
    }

    [[noreturn]] void fail(std::vector<std::string> expected) const {
        const Token& t = peek();
        std::string got = t.kind == Token::Kind::End ? "end of input" : "'" + t.text + "'";
        std::string msg = "expected ";
        for (std::size_t i = 0; i < expected.size(); ++i) {
            if (i > 0) msg += i + 1 == expected.size() ? " or " : ", ";
            msg += expected[i];
        }
        throw ParseError(msg + ", found " + got, t.offset, std::move(expected));
    }

    std::int64_t parse_small_int(const Token& t, const char* what) const {
        try {
            return std::stoll(t.text);
        } catch (const std::out_of_range&) {
            throw ParseError(std::string(what) + " out of range", t.offset);
        }
    }

    ExprPtr parse_expr() {
        ExprPtr e = parse_term();
        for (;;) {
            if (accept(Token::Kind::Plus))
                e = make_binary(Expression::Node::Add, std::move(e), parse_term());
            else if (accept(Token::Kind::Minus))
                e = make_binary(Expression::Node::Sub, std::move(e), parse_term());
            else
                return e;
        }
    }

    // True when the factor is an integer literal possibly under '-' / '^':
    // only such factors admit an implicit '*' before a generator.
    static bool literal_headed(const Expression* e) {
        while (e != nullptr) {
            if (e->node == Expression::Node::Integer) return true;
            if (e->node == Expression::Node::Neg || e->node == Expression::Node::Pow)
                e = e->lhs.get();
            else
                return false;
        }
        return false;
    }

    ExprPtr parse_term() {
        ExprPtr e = parse_unary();
        for (;;) {
            if (accept(Token::Kind::Star)) {
                e = make_binary(Expression::Node::Mul, std::move(e), parse_unary());
            } else if (accept(Token::Kind::Slash)) {
                e = make_binary(Expression::Node::Div, std::move(e), parse_unary());
            } else if (peek().kind == Token::Kind::Ident && literal_headed(e.get())) {
                // juxtaposition of a literal and a generator: "2rho"
                e = make_binary(Expression::Node::Mul, std::move(e), parse_unary());
            } else {
                return e;
            }
        }
    }

    ExprPtr parse_unary() {
        if (accept(Token::Kind::Minus)) {
            auto e = make_node(Expression::Node::Neg);
            e->lhs = parse_unary();
            return e;
        }
        return parse_power();
    }

    ExprPtr parse_power() {
        ExprPtr base = parse_atom();
        if (!accept(Token::Kind::Caret)) return base;
        if (peek().kind != Token::Kind::Integer) fail({"nonnegative integer exponent"});
        const Token& t = advance();
        const std::int64_t exp = parse_small_int(t, "exponent");
        if (exp > kMaxExponent) throw ParseError("exponent too large", t.offset);
        auto e = make_node(Expression::Node::Pow);
        e->lhs = std::move(base);
        e->exponent = exp;
        return e;
    }

    // '[' (-)? INT ']' ; returns the signed index
    std::int64_t parse_index(bool allow_negative, const char* generator) {
        if (!accept(Token::Kind::LBracket)) fail({"'['"});
        const std::size_t index_offset = peek().offset;
        const bool negative = accept(Token::Kind::Minus);
        if (peek().kind != Token::Kind::Integer) fail({"integer index"});
        const Token& t = advance();
        std::int64_t idx = parse_small_int(t, "index");
        if (negative) idx = -idx;
        if (!allow_negative && idx < 1)
            throw ParseError(std::string(generator) + " index must be >= 1", index_offset);
        if (!accept(Token::Kind::RBracket)) fail({"']'"});
        return idx;
    }

    ExprPtr parse_atom() {
        if (peek().kind == Token::Kind::Integer) {
            const Token& t = advance();
            auto e = make_node(Expression::Node::Integer);
            // strip leading zeros: cpp_int would read them as an octal prefix
            const auto nz = t.text.find_first_not_of('0');
            e->value = Int(nz == std::string::npos ? "0" : t.text.substr(nz));
            return e;
        }
        if (peek().kind == Token::Kind::Ident) {
            const Token& t = advance();
            auto e = make_node(Expression::Node::Generator);
            if (t.text == "rho") {
                e->gen = BasisElement::rho_pow(1);
            } else if (t.text == "eta") {
                e->gen = BasisElement::x_class(1);
            } else if (t.text == "w") {
                e->gen = BasisElement::omega(parse_index(true, "w"));
            } else if (t.text == "x") {
                e->gen = BasisElement::x_class(parse_index(false, "x"));
            } else {
                throw ParseError("unknown generator '" + t.text + "'", t.offset,
                                 {"rho", "eta", "w[n]", "x[i]"});
            }
            return e;
        }
        if (accept(Token::Kind::LParen)) {
            ExprPtr e = parse_expr();
            if (!accept(Token::Kind::RParen)) fail({"')'"});
            return e;
        }
        fail({"integer", "generator", "'('"});
    }

    std::vector<Token> tokens_;
    std::size_t pos_ = 0;
};

// Divisor of a '/' node, which must be a scalar multiple of the unit.
template <typename Element, typename Coeff>
Coeff scalar_divisor(const Element& e) {
    if (e.is_zero()) throw std::domain_error("division by zero");
    if (e.terms().size() != 1 || e.terms().begin()->first.tag() != BasisTag::Unit)
        throw std::domain_error("divisor must be an integer scalar");
    return e.terms().begin()->second;
}

bool is_power_of_two(const Int& c) { return c > 0 && (c & (c - 1)) == 0; }

}  // namespace

ExprPtr parse(const std::string& text) { return Parser(text).parse(); }

RingElement eval(const Expression& e) {
    switch (e.node) {
        case Expression::Node::Integer: return RingElement(e.value, BasisElement::unit());
        case Expression::Node::Generator: return RingElement(e.gen);
        case Expression::Node::Add: return eval(*e.lhs) + eval(*e.rhs);
        case Expression::Node::Sub: return eval(*e.lhs) - eval(*e.rhs);
        case Expression::Node::Mul: return mul(eval(*e.lhs), eval(*e.rhs));
        case Expression::Node::Neg: return -eval(*e.lhs);
        case Expression::Node::Pow:
            return pow(eval(*e.lhs), static_cast<std::uint64_t>(e.exponent));
        default: {
            const RingElement num = eval(*e.lhs);
            const Int d = scalar_divisor<RingElement, Int>(eval(*e.rhs));
            if (!is_power_of_two(d))
                throw std::domain_error("integral division is by powers of 2 only (divisor " +
                                        d.str() + ")");
            auto q = divide_exact(num, d);
            if (!q)
                throw InexactDivision("inexact division: " + to_string(num) + " by " + d.str());
            return *q;
        }
    }
}

RationalElement eval_rational(const Expression& e) {
    switch (e.node) {
        case Expression::Node::Integer:
            return RationalElement(Rational(e.value), BasisElement::unit());
        case Expression::Node::Generator: return RationalElement(e.gen);
        case Expression::Node::Add: return eval_rational(*e.lhs) + eval_rational(*e.rhs);
        case Expression::Node::Sub: return eval_rational(*e.lhs) - eval_rational(*e.rhs);
        case Expression::Node::Mul: return mul(eval_rational(*e.lhs), eval_rational(*e.rhs));
        case Expression::Node::Neg: return -eval_rational(*e.lhs);
        case Expression::Node::Pow:
            return pow(eval_rational(*e.lhs), static_cast<std::uint64_t>(e.exponent));
        default: {
            RationalElement num = eval_rational(*e.lhs);
            const Rational d = scalar_divisor<RationalElement, Rational>(eval_rational(*e.rhs));
            num *= Rational(1) / d;
            return num;
        }
    }
}

}  // namespace c2ring
