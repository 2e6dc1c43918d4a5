#include "c2ring/rational.hpp"

#include <cstdlib>

#include "c2ring/divisibility.hpp"
#include "c2ring/grading.hpp"

namespace c2ring {

RationalElement rationalize(const RingElement& a) {
    RationalElement out;
    for (const auto& [b, c] : a.terms()) out.add_term(b, Rational(c));
    return out;
}

RationalElement mul(const RationalElement& a, const RationalElement& b) {
    RationalElement out;
    for (const auto& [ba, ca] : a.terms())
        for (const auto& [bb, cb] : b.terms()) {
            RationalElement prod = rationalize(mul_basis(ba, bb));
            prod *= ca * cb;
            out += prod;
        }
    return out;
}

RationalElement pow(const RationalElement& a, std::uint64_t e) {
    RationalElement result(BasisElement::unit());
    RationalElement base = a;
    while (e > 0) {
        if (e & 1) result = mul(result, base);
        e >>= 1;
        if (e > 0) base = mul(base, base);
    }
    return result;
}

Rational char_underlying(const RationalElement& a) {
    Rational v = 0;
    for (const auto& [b, c] : a.terms()) {
        switch (b.tag()) {
            case BasisTag::Unit: v += c; break;
            case BasisTag::Omega: v += 2 * c; break;
            default: break;
        }
    }
    return v;
}

Rational char_fixed(const RationalElement& a) {
    Rational v = 0;
    for (const auto& [b, c] : a.terms()) {
        switch (b.tag()) {
            case BasisTag::Unit:
            case BasisTag::RhoPow: v += c; break;
            case BasisTag::XClass: v += c * Rational(pow2(b_of(b.index()))); break;
            case BasisTag::Omega: break;
        }
    }
    return v;
}

std::string to_string(const RationalElement& a) {
    if (a.is_zero()) return "0";
    std::string out;
    bool first = true;
    for (const auto& [b, c] : a.terms()) {
        const bool negative = c < 0;
        const Rational mag = abs(c);
        if (first) {
            if (negative) out += '-';
            first = false;
        } else {
            out += negative ? " - " : " + ";
        }
        if (b.tag() == BasisTag::Unit)
            out += mag.str();
        else if (mag == 1)
            out += b.name();
        else
            out += mag.str() + "*" + b.name();
    }
    return out;
}

PresentationWord word_mul(const PresentationWord& a, const PresentationWord& b) {
    PresentationWord out;
    for (const auto& [ma, ca] : a.terms())
        for (const auto& [mb, cb] : b.terms()) {
            PresentationWord::Monomial m{ma.rho + mb.rho, ma.eta + mb.eta,
                                         ma.omega_pos + mb.omega_pos,
                                         ma.omega_neg + mb.omega_neg};
            out.add_term(m, ca * cb);
        }
    return out;
}

RationalElement reduce_word(const PresentationWord& w) {
    RationalElement out;
    for (const auto& [m, c] : w.terms()) {
        // The generator powers are integral elements; scale at the end.
        RingElement v = pow(RingElement(BasisElement::rho_pow(1)),
                            static_cast<std::uint64_t>(m.rho));
        v = mul(v, pow(RingElement(BasisElement::x_class(1)),
                       static_cast<std::uint64_t>(m.eta)));
        v = mul(v, pow(RingElement(BasisElement::omega(1)),
                       static_cast<std::uint64_t>(m.omega_pos)));
        v = mul(v, pow(RingElement(BasisElement::omega(-1)),
                       static_cast<std::uint64_t>(m.omega_neg)));
        RationalElement scaled = rationalize(v);
        scaled *= c;
        out += scaled;
    }
    return out;
}

namespace {

using Monomial = PresentationWord::Monomial;

PresentationWord mono(std::int64_t rho, std::int64_t eta, std::int64_t w1, std::int64_t wm1,
                      Rational c = 1) {
    return PresentationWord::monomial({rho, eta, w1, wm1}, c);
}

// A word reducing onto the given basis element (the surjectivity witness).
PresentationWord witness_word(const BasisElement& b) {
    switch (b.tag()) {
        case BasisTag::Unit: return PresentationWord::scalar(1);
        case BasisTag::Omega: {
            const std::int64_t n = b.index();
            if (n == 0)  // w[0] = 2 - rho*eta
                return PresentationWord::scalar(2) - mono(1, 1, 0, 0);
            if (n > 0)  // w[n] = w[1]^n / 2^{n-1}
                return mono(0, 0, n, 0, Rational(1, pow2(n - 1)));
            return mono(0, 0, 0, -n, Rational(1, pow2(-n - 1)));
        }
        case BasisTag::RhoPow: return mono(b.index(), 0, 0, 0);
        default:  // x[i] = eta^i / 2^{n(i)}
            return mono(0, b.index(), 0, 0, Rational(1, pow2(n_of(b.index()))));
    }
}

}  // namespace

CheckReport check_rational_iso(std::int64_t window) {
    CheckReport report;
    const auto box = basis_in_window(window);

    // (a) surjectivity: each basis element is hit by its witness word
    {
        bool ok = true;
        std::string detail;
        for (const auto& b : box) {
            const RationalElement got = reduce_word(witness_word(b));
            if (got != RationalElement(b)) {
                ok = false;
                detail = b.name() + " not reached; got " + to_string(got);
                break;
            }
        }
        report.add("rational/surjectivity", ok, detail);
    }

    // (b) the four relation families reduce to zero
    const PresentationWord two_minus_rho_eta = PresentationWord::scalar(2) - mono(1, 1, 0, 0);
    const struct {
        const char* name;
        PresentationWord word;
    } relations[] = {
        {"rational/relation w1*wm1 = 4 - 2*rho*eta",
         mono(0, 0, 1, 1) - (PresentationWord::scalar(4) - mono(1, 1, 0, 0, 2))},
        {"rational/relation rho*w1 = 0", mono(1, 0, 1, 0)},
        {"rational/relation rho*wm1 = 0", mono(1, 0, 0, 1)},
        {"rational/relation eta*w1 = 0", mono(0, 1, 1, 0)},
        {"rational/relation eta*wm1 = 0", mono(0, 1, 0, 1)},
        {"rational/relation rho*(2 - rho*eta) = 0",
         word_mul(mono(1, 0, 0, 0), two_minus_rho_eta)},
        {"rational/relation eta*(2 - rho*eta) = 0",
         word_mul(mono(0, 1, 0, 0), two_minus_rho_eta)},
    };
    for (const auto& r : relations) {
        const RationalElement v = reduce_word(r.word);
        report.add(r.name, v.is_zero(), v.is_zero() ? "" : "reduces to " + to_string(v));
    }

    // (c) rank agreement in every degree of the box
    {
        bool ok = true;
        std::string detail;
        for (std::int64_t s = -window; s <= window && ok; ++s)
            for (std::int64_t w = -window; w <= window; ++w) {
                int count = 0;
                for (const auto& b : box)
                    if (b.degree() == Bidegree{s, w}) ++count;
                if (count != rank({s, w})) {
                    ok = false;
                    detail = "degree (" + std::to_string(s) + "," + std::to_string(w) +
                             "): " + std::to_string(count) + " basis elements, rank " +
                             std::to_string(rank({s, w}));
                    break;
                }
            }
        report.add("rational/rank agreement", ok, detail);
    }

    return report;
}

}  // namespace c2ring
