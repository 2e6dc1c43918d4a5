#pragma once

#include <compare>
#include <cstdint>
#include <map>
#include <string>

#include "c2ring/report.hpp"
#include "c2ring/ring.hpp"

namespace c2ring {

// Q-linear combination of basis elements: an element of the rationalized
// reduced ring. Same canonical-form conventions as RingElement.
class RationalElement {
public:
    RationalElement() = default;
    RationalElement(const BasisElement& b) { terms_.emplace(b, 1); }
    RationalElement(Rational c, const BasisElement& b) {
        if (c != 0) terms_.emplace(b, std::move(c));
    }

    static RationalElement zero() { return {}; }

    bool is_zero() const { return terms_.empty(); }
    const std::map<BasisElement, Rational>& terms() const { return terms_; }

    Rational coefficient(const BasisElement& b) const {
        auto it = terms_.find(b);
        return it == terms_.end() ? Rational(0) : it->second;
    }

    std::optional<Bidegree> degree() const {
        if (terms_.empty()) return std::nullopt;
        const Bidegree d = terms_.begin()->first.degree();
        for (const auto& [b, c] : terms_)
            if (b.degree() != d) return std::nullopt;
        return d;
    }

    RationalElement& operator+=(const RationalElement& o) {
        for (const auto& [b, c] : o.terms_) add_term(b, c);
        return *this;
    }
    RationalElement& operator-=(const RationalElement& o) {
        for (const auto& [b, c] : o.terms_) add_term(b, -c);
        return *this;
    }
    RationalElement& operator*=(const Rational& k) {
        if (k == 0) {
            terms_.clear();
        } else {
            for (auto& [b, c] : terms_) c *= k;
        }
        return *this;
    }

    void add_term(const BasisElement& b, const Rational& c) {
        if (c == 0) return;
        auto [it, inserted] = terms_.try_emplace(b, c);
        if (!inserted) {
            it->second += c;
            if (it->second == 0) terms_.erase(it);
        }
    }

    friend bool operator==(const RationalElement&, const RationalElement&) = default;

private:
    std::map<BasisElement, Rational> terms_;
};

inline RationalElement operator+(RationalElement a, const RationalElement& b) { return a += b; }
inline RationalElement operator-(RationalElement a, const RationalElement& b) { return a -= b; }
inline RationalElement operator-(const RationalElement& a) {
    RationalElement r;
    return r -= a;
}
inline RationalElement operator*(const Rational& k, RationalElement a) { return a *= k; }
inline RationalElement operator*(RationalElement a, const Rational& k) { return a *= k; }

// Base change along Z -> Q.
RationalElement rationalize(const RingElement& a);

// Q-bilinear extension of mul_basis.
RationalElement mul(const RationalElement& a, const RationalElement& b);
inline RationalElement operator*(const RationalElement& a, const RationalElement& b) {
    return mul(a, b);
}

RationalElement pow(const RationalElement& a, std::uint64_t e);

Rational char_underlying(const RationalElement& a);
Rational char_fixed(const RationalElement& a);

// Same canonical syntax as the integral printer, with coefficients "p/q".
std::string to_string(const RationalElement& a);

// Formal Q-linear combination of monomials rho^r eta^e w1^p wm1^q in the
// four generators of the rational presentation.
class PresentationWord {
public:
    struct Monomial {
        std::int64_t rho = 0;
        std::int64_t eta = 0;
        std::int64_t omega_pos = 0;  // exponent of w[1]
        std::int64_t omega_neg = 0;  // exponent of w[-1]
        friend bool operator==(const Monomial&, const Monomial&) = default;
        auto operator<=>(const Monomial&) const = default;
    };

    PresentationWord() = default;

    static PresentationWord scalar(Rational c) {
        PresentationWord w;
        w.add_term({}, c);
        return w;
    }
    static PresentationWord monomial(Monomial m, Rational c = 1) {
        PresentationWord w;
        w.add_term(m, c);
        return w;
    }

    bool is_zero() const { return terms_.empty(); }
    const std::map<Monomial, Rational>& terms() const { return terms_; }

    void add_term(const Monomial& m, const Rational& c) {
        if (m.rho < 0 || m.eta < 0 || m.omega_pos < 0 || m.omega_neg < 0)
            throw std::invalid_argument("PresentationWord: exponents must be nonnegative");
        if (c == 0) return;
        auto [it, inserted] = terms_.try_emplace(m, c);
        if (!inserted) {
            it->second += c;
            if (it->second == 0) terms_.erase(it);
        }
    }

    PresentationWord& operator+=(const PresentationWord& o) {
        for (const auto& [m, c] : o.terms_) add_term(m, c);
        return *this;
    }
    PresentationWord& operator-=(const PresentationWord& o) {
        for (const auto& [m, c] : o.terms_) add_term(m, -c);
        return *this;
    }
    PresentationWord& operator*=(const Rational& k) {
        if (k == 0) {
            terms_.clear();
        } else {
            for (auto& [m, c] : terms_) c *= k;
        }
        return *this;
    }

    friend bool operator==(const PresentationWord&, const PresentationWord&) = default;

private:
    std::map<Monomial, Rational> terms_;
};

inline PresentationWord operator+(PresentationWord a, const PresentationWord& b) { return a += b; }
inline PresentationWord operator-(PresentationWord a, const PresentationWord& b) { return a -= b; }
inline PresentationWord operator*(const Rational& k, PresentationWord a) { return a *= k; }

// Product in the free graded-commutative word algebra (exponent addition).
PresentationWord word_mul(const PresentationWord& a, const PresentationWord& b);

// Evaluate a word in the basis model: rho -> rho, eta -> x[1],
// w1 -> w[1], wm1 -> w[-1], extended multiplicatively and Q-linearly.
RationalElement reduce_word(const PresentationWord& w);

// Verifies, on the window |stem| <= window and |weight| <= window:
//  (a) surjectivity: every basis element is reduce_word of an explicit word,
//  (b) relation soundness: the four relation families reduce to 0,
//  (c) rank agreement: each degree of the box carries exactly rank(d) basis
//      elements.
CheckReport check_rational_iso(std::int64_t window);

}  // namespace c2ring
