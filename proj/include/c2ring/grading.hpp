#pragma once

#include <compare>
#include <cstdint>
#include <string>

namespace c2ring {

// Bidegree (s,w): s is the stem, w the weight, s-w the coweight. The
// RO(C2)-degree (s-w) + w*sigma is carried implicitly by this pair.
struct Bidegree {
    std::int64_t stem = 0;
    std::int64_t weight = 0;

    std::int64_t coweight() const { return stem - weight; }

    friend Bidegree operator+(Bidegree a, Bidegree b) {
        return {a.stem + b.stem, a.weight + b.weight};
    }
    friend bool operator==(const Bidegree&, const Bidegree&) = default;
    auto operator<=>(const Bidegree&) const = default;
};

inline std::string to_string(Bidegree d) {
    return "(" + std::to_string(d.stem) + "," + std::to_string(d.weight) + ")";
}

// True exactly where the reduced ring is nonzero: stem 0 with even weight,
// or coweight 0.
inline bool is_nonzero_degree(Bidegree d) {
    return (d.stem == 0 && d.weight % 2 == 0) || d.stem == d.weight;
}

// Free-abelian rank of the reduced ring in degree d: 2 at (0,0), 1 on the
// rest of the support, 0 off it.
inline int rank(Bidegree d) {
    if (!is_nonzero_degree(d)) return 0;
    return (d.stem == 0 && d.weight == 0) ? 2 : 1;
}

}  // namespace c2ring
