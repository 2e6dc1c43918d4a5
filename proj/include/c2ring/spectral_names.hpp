#pragma once

#include <compare>
#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "c2ring/basis.hpp"
#include "c2ring/report.hpp"

namespace c2ring {

// (stem, filtration, weight) of an Ext / Bockstein-page class.
struct TriDegree {
    std::int64_t stem = 0;
    std::int64_t filtration = 0;
    std::int64_t weight = 0;

    friend bool operator==(const TriDegree&, const TriDegree&) = default;
    auto operator<=>(const TriDegree&) const = default;
};

inline std::string to_string(TriDegree d) {
    return "(" + std::to_string(d.stem) + "," + std::to_string(d.filtration) + "," +
           std::to_string(d.weight) + ")";
}

// rho-Bockstein differentials take (s,f,w) to (s-1,f+1,w).
inline TriDegree bockstein_degree(TriDegree d) {
    return {d.stem - 1, d.filtration + 1, d.weight};
}

// tau-divisibility status of an Ext_C class: tau-free, or tau-torsion and
// divisible by tau^k but not tau^{k+1}.
struct TauStatus {
    enum class Kind { Free, Torsion };
    Kind kind = Kind::Free;
    std::int64_t k = 0;  // torsion order; meaningful for Kind::Torsion only

    static TauStatus free() { return {Kind::Free, 0}; }
    static TauStatus torsion(std::int64_t k);

    friend bool operator==(const TauStatus&, const TauStatus&) = default;
};

// Catalog entry: a user-supplied Ext_C generator. Ext_C is concentrated in
// nonnegative stems and filtrations; both are validated.
struct ExtCGenerator {
    std::string label;
    TriDegree degree;
    TauStatus tau;
};

// A generator of the E1^- page derived from an Ext_C class:
//   gamma/(rho^a tau^b) x  with a >= 0, b >= 1, x tau-free,
//       in degree (s+a, f, w+a+b+1);
//   Q/(rho^a tau^b) x      with a >= 0, 0 <= b <= k, x tau-torsion of order k,
//       in degree (s+a+1, f-1, w+a+b+1).
struct E1MinusClass {
    enum class Kind { Gamma, Q };
    Kind kind = Kind::Gamma;
    std::int64_t a = 0;
    std::int64_t b = 0;
    std::string base;
    TriDegree degree;

    std::string name() const;

    friend bool operator==(const E1MinusClass&, const E1MinusClass&) = default;
};

struct TriWindow {
    std::int64_t smin = 0, smax = 0;
    std::int64_t fmin = 0, fmax = 0;
    std::int64_t wmin = 0, wmax = 0;
};

// All E1^- generators over the catalog whose tri-degree lies in the window.
// Finite: a and b are bounded by the window's stem and weight extents.
// Rejects catalogs violating Ext_C connectivity (stem < 0) or filtration < 0.
std::vector<E1MinusClass> enumerate_e1_minus(const std::vector<ExtCGenerator>& catalog,
                                             const TriWindow& window);

// E1^- support checks: all stems nonnegative, and nothing in the (-1)-stem.
CheckReport validate_e1_support(const std::vector<E1MinusClass>& classes);

// Adams spectral sequence name of a basis element, where the table defines
// one: every w[n], eta, and x[i] for i = +-1 (mod 8). The table is partial;
// nullopt elsewhere.
struct AdamsName {
    enum class Kind { H0, TauPowH0, GammaOverTau, H1, QOverRho };
    Kind kind = Kind::H0;
    std::int64_t tau = 0;  // tau exponent (TauPowH0, GammaOverTau)
    std::int64_t rho = 0;  // rho exponent (QOverRho)
    std::int64_t h1 = 0;   // h1 exponent (QOverRho)

    std::string str() const;

    friend bool operator==(const AdamsName&, const AdamsName&) = default;
};

std::optional<AdamsName> adams_name(const BasisElement& b);

// Line-oriented catalog file: one generator per line,
//   label s f w tau_status
// with tau_status either "free" or "torsion:k". Blank lines and '#' comments
// are ignored. Malformed input raises std::runtime_error with the line number.
std::vector<ExtCGenerator> parse_catalog(std::istream& in);
std::vector<ExtCGenerator> load_catalog(const std::string& path);

// Tiny built-in catalog (the unit class, h0, h1), enough for the stem-0
// gamma family and the coweight-0 names.
const std::vector<ExtCGenerator>& bundled_catalog();

}  // namespace c2ring
