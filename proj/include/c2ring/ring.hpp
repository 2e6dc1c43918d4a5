#pragma once

#include <map>
#include <optional>
#include <string>

#include "c2ring/basis.hpp"
#include "c2ring/integers.hpp"

namespace c2ring {

// Element of the reduced ring: a finite Z-linear combination of basis
// elements in canonical sparse form (no zero coefficients stored).
// Immutable value semantics; every operation returns canonical form.
class RingElement {
public:
    RingElement() = default;
    RingElement(const BasisElement& b) { terms_.emplace(b, 1); }
    RingElement(Int c, const BasisElement& b) {
        if (c != 0) terms_.emplace(b, std::move(c));
    }

    static RingElement zero() { return {}; }

    bool is_zero() const { return terms_.empty(); }
    const std::map<BasisElement, Int>& terms() const { return terms_; }

    // Coefficient of b (0 when absent).
    Int coefficient(const BasisElement& b) const {
        auto it = terms_.find(b);
        return it == terms_.end() ? Int(0) : it->second;
    }

    // Common degree of all terms; nullopt for 0 and for mixed-degree sums.
    std::optional<Bidegree> degree() const {
        if (terms_.empty()) return std::nullopt;
        const Bidegree d = terms_.begin()->first.degree();
        for (const auto& [b, c] : terms_)
            if (b.degree() != d) return std::nullopt;
        return d;
    }

    RingElement& operator+=(const RingElement& o) {
        for (const auto& [b, c] : o.terms_) add_term(b, c);
        return *this;
    }
    RingElement& operator-=(const RingElement& o) {
        for (const auto& [b, c] : o.terms_) add_term(b, -c);
        return *this;
    }
    RingElement& operator*=(const Int& k) {
        if (k == 0) {
            terms_.clear();
        } else {
            for (auto& [b, c] : terms_) c *= k;
        }
        return *this;
    }

    void add_term(const BasisElement& b, const Int& c) {
        if (c == 0) return;
        auto [it, inserted] = terms_.try_emplace(b, c);
        if (!inserted) {
            it->second += c;
            if (it->second == 0) terms_.erase(it);
        }
    }

    friend bool operator==(const RingElement&, const RingElement&) = default;

private:
    std::map<BasisElement, Int> terms_;
};

inline RingElement operator+(RingElement a, const RingElement& b) { return a += b; }
inline RingElement operator-(RingElement a, const RingElement& b) { return a -= b; }
inline RingElement operator-(const RingElement& a) {
    RingElement r;
    return r -= a;
}
inline RingElement operator*(const Int& k, RingElement a) { return a *= k; }
inline RingElement operator*(RingElement a, const Int& k) { return a *= k; }

// Product of two basis elements from the derived structure-constant table.
// Exponent arithmetic is checked: a negative derived exponent means the
// divisibility table is corrupt and raises std::logic_error.
RingElement mul_basis(const BasisElement& a, const BasisElement& b);

// Bilinear extension of mul_basis.
RingElement mul(const RingElement& a, const RingElement& b);
inline RingElement operator*(const RingElement& a, const RingElement& b) { return mul(a, b); }

RingElement pow(const RingElement& a, std::uint64_t e);

// Exact division of every coefficient by d; nullopt if any fails.
std::optional<RingElement> divide_exact(const RingElement& a, const Int& d);

enum class BurnsideGenerator { One, FreeOrbit };

// Action of the Burnside ring: 1 acts as identity, [C2/e] = w[0] multiplies
// every w[n] by 2 and kills rho^i and x[i] for i >= 1.
RingElement burnside_act(BurnsideGenerator g, const RingElement& a);

// Underlying-map character: the composite of Phi^e with projection onto
// pi_0 / torsion.  1 -> 1, w[n] -> 2, rho^i -> 0, x[i] -> 0.
Int char_underlying(const RingElement& a);

// Geometric-fixed-points character: the composite of Phi^{C2} with the same
// projection.  1 -> 1, rho^i -> 1, x[i] -> 2^{b(i)}, w[n] -> 0 for all n.
Int char_fixed(const RingElement& a);

// Canonical printing: terms in basis order, coefficient * name, unit terms
// as the bare coefficient.  Parsing of this syntax lives in expr.hpp.
std::string to_string(const RingElement& a);

}  // namespace c2ring
