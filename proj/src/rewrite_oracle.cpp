#include "c2ring/rewrite_oracle.hpp"

#include <vector>

#include "c2ring/divisibility.hpp"

namespace c2ring::oracle {

namespace {

// A single formal term c * 2^pow2 * rho^r * eta^e * prod w[n_k]. pow2 may go
// negative while an eta-power divisibility is pending; it must have cleared
// by the time the term is read back into the basis.
struct Term {
    Int coeff = 1;
    std::int64_t pow2 = 0;
    std::int64_t rho = 0;
    std::int64_t eta = 0;
    std::vector<std::int64_t> omegas;
};

void embed(const BasisElement& b, Term& t) {
    switch (b.tag()) {
        case BasisTag::Unit: break;
        case BasisTag::Omega: t.omegas.push_back(b.index()); break;
        case BasisTag::RhoPow: t.rho += b.index(); break;
        case BasisTag::XClass:
            // x[i] enters as eta^i carried over 2^{n(i)}
            t.eta += b.index();
            t.pow2 -= n_of(b.index());
            break;
    }
}

// Apply single rewrite steps until the term is in terminal form, appending
// the results (the rho*eta = 2 - w[0] step splits a term in two).
void reduce(Term t, std::vector<Term>& out) {
    for (;;) {
        if (!t.omegas.empty() && (t.rho > 0 || t.eta > 0)) return;  // rho*w = eta*w = 0
        if (t.omegas.size() >= 2) {  // w[n]*w[m] = 2*w[n+m]
            const std::int64_t n = t.omegas.back();
            t.omegas.pop_back();
            t.omegas.back() += n;
            t.pow2 += 1;
            continue;
        }
        if (t.rho >= 1 && t.eta >= 1 && t.rho + t.eta >= 3) {
            // rho*eta^2 = 2*eta  /  rho^2*eta = 2*rho
            t.rho -= 1;
            t.eta -= 1;
            t.pow2 += 1;
            continue;
        }
        if (t.rho == 1 && t.eta == 1) {  // rho*eta = 2 - w[0]
            Term two = t;
            two.rho = two.eta = 0;
            two.pow2 += 1;
            Term burnside = t;
            burnside.rho = burnside.eta = 0;
            burnside.coeff = -burnside.coeff;
            burnside.omegas.push_back(0);
            out.push_back(std::move(two));
            out.push_back(std::move(burnside));
            return;
        }
        out.push_back(std::move(t));
        return;
    }
}

// Terminal term -> canonical basis form. Fails if the accumulated power of 2
// is negative beyond the 2-adic content of the coefficient.
bool read_back(const Term& t, RingElement& acc) {
    BasisElement b = BasisElement::unit();
    std::int64_t p = t.pow2;
    if (t.eta > 0) {
        b = BasisElement::x_class(t.eta);
        p += n_of(t.eta);
    } else if (t.rho > 0) {
        b = BasisElement::rho_pow(t.rho);
    } else if (!t.omegas.empty()) {
        b = BasisElement::omega(t.omegas.front());
    }
    Int c = t.coeff;
    for (; p < 0; ++p) {
        if (c % 2 != 0) return false;
        c /= 2;
    }
    acc.add_term(b, c * pow2(p));
    return true;
}

}  // namespace

std::optional<RingElement> mul_basis_rewriting(const BasisElement& a, const BasisElement& b) {
    Term t;
    embed(a, t);
    embed(b, t);
    std::vector<Term> reduced;
    reduce(std::move(t), reduced);
    RingElement result;
    for (const Term& r : reduced)
        if (!read_back(r, result)) return std::nullopt;
    return result;
}

}  // namespace c2ring::oracle
