#include "c2ring/ring.hpp"

#include <algorithm>
#include <stdexcept>

#include "c2ring/divisibility.hpp"

namespace c2ring {

std::vector<BasisElement> basis_in_box(std::int64_t smin, std::int64_t smax,
                                       std::int64_t wmin, std::int64_t wmax) {
    std::vector<BasisElement> out;
    if (smin > smax || wmin > wmax) return out;
    const auto in_box = [&](Bidegree d) {
        return smin <= d.stem && d.stem <= smax && wmin <= d.weight && d.weight <= wmax;
    };
    if (in_box({0, 0})) out.push_back(BasisElement::unit());
    // w[n] has degree (0,-2n)
    if (smin <= 0 && 0 <= smax) {
        for (std::int64_t w = wmin; w <= wmax; ++w)
            if (w % 2 == 0) out.push_back(BasisElement::omega(-w / 2));
    }
    // rho^i at (-i,-i), x[i] at (i,i)
    for (std::int64_t i = 1; -i >= smin && -i >= wmin; ++i)
        if (in_box({-i, -i})) out.push_back(BasisElement::rho_pow(i));
    for (std::int64_t i = 1; i <= smax && i <= wmax; ++i)
        if (in_box({i, i})) out.push_back(BasisElement::x_class(i));
    std::sort(out.begin(), out.end());
    return out;
}

namespace {

Int checked_pow2(std::int64_t e, const char* rule) {
    if (e < 0)
        throw std::logic_error(std::string("negative structure-constant exponent in ") + rule +
                               " (divisibility table violates step bound / superadditivity)");
    return pow2(e);
}

}  // namespace

RingElement mul_basis(const BasisElement& a, const BasisElement& b) {
    if (a.tag() == BasisTag::Unit) return RingElement(b);
    if (b.tag() == BasisTag::Unit) return RingElement(a);
    // Commutative; normalize to tag order Omega <= RhoPow <= XClass.
    const BasisElement& p = a.tag() <= b.tag() ? a : b;
    const BasisElement& q = a.tag() <= b.tag() ? b : a;

    if (p.tag() == BasisTag::Omega) {
        if (q.tag() == BasisTag::Omega)
            return RingElement(2, BasisElement::omega(p.index() + q.index()));
        return RingElement::zero();  // w[n] kills rho^i and x[i]
    }
    if (p.tag() == BasisTag::RhoPow) {
        if (q.tag() == BasisTag::RhoPow)
            return RingElement(BasisElement::rho_pow(p.index() + q.index()));
        // rho^a * x[j]
        const std::int64_t e = p.index(), j = q.index();
        if (e < j) {
            const std::int64_t k = e + n_of(j - e) - n_of(j);
            return RingElement(checked_pow2(k, "rho^a*x[j], a<j"), BasisElement::x_class(j - e));
        }
        if (e == j) {
            // rho^j x[j] = 2^{b(j)-1} (2 - w[0])
            const Int c = checked_pow2(b_of(j) - 1, "rho^j*x[j]");
            RingElement r(2 * c, BasisElement::unit());
            r.add_term(BasisElement::omega(0), -c);
            return r;
        }
        return RingElement(checked_pow2(b_of(j), "rho^a*x[j], a>j"),
                           BasisElement::rho_pow(e - j));
    }
    // x[i] * x[j]
    const std::int64_t i = p.index(), j = q.index();
    const std::int64_t k = n_of(i + j) - n_of(i) - n_of(j);
    return RingElement(checked_pow2(k, "x[i]*x[j]"), BasisElement::x_class(i + j));
}

RingElement mul(const RingElement& a, const RingElement& b) {
    RingElement out;
    for (const auto& [ba, ca] : a.terms())
        for (const auto& [bb, cb] : b.terms()) {
            RingElement prod = mul_basis(ba, bb);
            prod *= ca * cb;
            out += prod;
        }
    return out;
}

RingElement pow(const RingElement& a, std::uint64_t e) {
    RingElement result(BasisElement::unit());
    RingElement base = a;
    while (e > 0) {
        if (e & 1) result = mul(result, base);
        e >>= 1;
        if (e > 0) base = mul(base, base);
    }
    return result;
}

std::optional<RingElement> divide_exact(const RingElement& a, const Int& d) {
    if (d == 0) return std::nullopt;
    RingElement out;
    for (const auto& [b, c] : a.terms()) {
        if (c % d != 0) return std::nullopt;
        out.add_term(b, c / d);
    }
    return out;
}

RingElement burnside_act(BurnsideGenerator g, const RingElement& a) {
    if (g == BurnsideGenerator::One) return a;
    return mul(RingElement(BasisElement::omega(0)), a);
}

Int char_underlying(const RingElement& a) {
    Int v = 0;
    for (const auto& [b, c] : a.terms()) {
        switch (b.tag()) {
            case BasisTag::Unit: v += c; break;
            case BasisTag::Omega: v += 2 * c; break;
            default: break;  // rho^i and x[i] have torsion underlying classes
        }
    }
    return v;
}

Int char_fixed(const RingElement& a) {
    Int v = 0;
    for (const auto& [b, c] : a.terms()) {
        switch (b.tag()) {
            case BasisTag::Unit:
            case BasisTag::RhoPow: v += c; break;
            case BasisTag::XClass: v += c * pow2(b_of(b.index())); break;
            case BasisTag::Omega: break;  // geometric fixed points kill every w[n]
        }
    }
    return v;
}

std::string to_string(const RingElement& a) {
    if (a.is_zero()) return "0";
    std::string out;
    bool first = true;
    for (const auto& [b, c] : a.terms()) {
        const bool negative = c < 0;
        const Int mag = abs(c);
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

}  // namespace c2ring
