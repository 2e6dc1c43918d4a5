#pragma once

#include <cstdint>
#include <functional>

#include "c2ring/report.hpp"

namespace c2ring {

// n(i): exact 2-divisibility exponent of eta^i, by the 8-periodic case
// analysis (cases 8t, 8t+1..4, 8t+5, 8t+6, 8t+7). Defined for i >= 1 only;
// throws std::invalid_argument otherwise.
std::int64_t n_of(std::int64_t i);

// The case analysis itself, bypassing any installed override.
std::int64_t n_closed_form(std::int64_t i);

// m(i): exact rho-divisibility exponent of eta^i.
//   i-1 for i = 0,1 (mod 4);  i-2 for i = 2 (mod 4);  i-3 for i = 3 (mod 4).
std::int64_t m_of(std::int64_t i);

// b(i) = i - n(i): the image of geometric fixed points in degree (i,i) is
// 2^{b(i)} * Z.
std::int64_t b_of(std::int64_t i);

struct DivisibilityProfile {
    std::int64_t i = 0;
    std::int64_t n = 0;
    std::int64_t m = 0;
    std::int64_t b = 0;
};

DivisibilityProfile divisibility_profile(std::int64_t i);

// Per-i verification of the inequalities tying m to n:
//   m(i - n(i)) >= n(i)   and   m(i - n(i) - 1) < n(i) + 1,
// the second skipped when i - n(i) - 1 < 1 (out of m's domain).
CheckReport check_nm_compatibility(std::int64_t i_max);

// Test hook: route n(i) through an override (pass an empty function to
// reset). Not thread-safe; meant for corrupting the table underneath the
// verification suites so their failure paths can be exercised.
void set_n_override(std::function<std::int64_t(std::int64_t)> fn);

}  // namespace c2ring
