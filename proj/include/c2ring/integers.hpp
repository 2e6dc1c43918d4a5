#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <cstdint>
#include <stdexcept>

namespace c2ring {

// Coefficients are exact and unbounded: powers of 2 grow linearly in the
// exponents handled here and would silently corrupt fixed-width arithmetic.
using Int = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

inline Int pow2(std::int64_t k) {
    if (k < 0) throw std::invalid_argument("pow2: negative exponent");
    Int r = 1;
    return r <<= static_cast<unsigned>(k);
}

}  // namespace c2ring
