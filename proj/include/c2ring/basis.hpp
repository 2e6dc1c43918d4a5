#pragma once

#include <compare>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

#include "c2ring/grading.hpp"

namespace c2ring {

enum class BasisTag : std::uint8_t { Unit, Omega, RhoPow, XClass };

// One canonical additive generator of the reduced ring:
//   1           in degree (0,0)
//   w[n]        (omega_n) in degree (0,-2n); w[0] is the free-orbit Burnside class
//   rho^i       in degree (-i,-i), i >= 1
//   x[i]        (= eta^i / 2^{n(i)}) in degree (i,i), i >= 1; x[1] = eta
class BasisElement {
public:
    static BasisElement unit() { return {BasisTag::Unit, 0}; }
    static BasisElement omega(std::int64_t n) { return {BasisTag::Omega, n}; }
    // Exponent 0 collapses to the unit; negative exponents are rejected.
    static BasisElement rho_pow(std::int64_t i) {
        if (i < 0) throw std::invalid_argument("rho_pow: exponent must be >= 0");
        return i == 0 ? unit() : BasisElement{BasisTag::RhoPow, i};
    }
    static BasisElement x_class(std::int64_t i) {
        if (i < 0) throw std::invalid_argument("x_class: index must be >= 0");
        return i == 0 ? unit() : BasisElement{BasisTag::XClass, i};
    }

    BasisTag tag() const { return tag_; }
    std::int64_t index() const { return index_; }

    Bidegree degree() const {
        switch (tag_) {
            case BasisTag::Unit: return {0, 0};
            case BasisTag::Omega: return {0, -2 * index_};
            case BasisTag::RhoPow: return {-index_, -index_};
            default: return {index_, index_};
        }
    }

    // Canonical names: "1", "w[n]", "rho"/"rho^i", "eta"/"x[i]".
    std::string name() const {
        switch (tag_) {
            case BasisTag::Unit: return "1";
            case BasisTag::Omega: return "w[" + std::to_string(index_) + "]";
            case BasisTag::RhoPow:
                return index_ == 1 ? "rho" : "rho^" + std::to_string(index_);
            default:
                return index_ == 1 ? "eta" : "x[" + std::to_string(index_) + "]";
        }
    }

    friend bool operator==(const BasisElement&, const BasisElement&) = default;

    // Term order: by (stem, weight), then tag, then index.
    friend std::strong_ordering operator<=>(const BasisElement& a, const BasisElement& b) {
        const Bidegree da = a.degree(), db = b.degree();
        if (auto c = da.stem <=> db.stem; c != 0) return c;
        if (auto c = da.weight <=> db.weight; c != 0) return c;
        if (auto c = static_cast<int>(a.tag_) <=> static_cast<int>(b.tag_); c != 0) return c;
        return a.index_ <=> b.index_;
    }

private:
    BasisElement(BasisTag t, std::int64_t i) : tag_(t), index_(i) {}

    BasisTag tag_;
    std::int64_t index_;
};

// All basis elements with degree inside the closed box
// [smin,smax] x [wmin,wmax], in canonical order.
std::vector<BasisElement> basis_in_box(std::int64_t smin, std::int64_t smax,
                                       std::int64_t wmin, std::int64_t wmax);

// Shorthand for the symmetric box |stem| <= w, |weight| <= w.
inline std::vector<BasisElement> basis_in_window(std::int64_t w) {
    return basis_in_box(-w, w, -w, w);
}

}  // namespace c2ring
