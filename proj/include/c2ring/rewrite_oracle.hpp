#pragma once

#include <optional>

#include "c2ring/ring.hpp"

namespace c2ring::oracle {

// Product of two basis elements computed by relation rewriting on formal
// words in rho, eta, omega_n with power-of-2 bookkeeping, using only
//   w[n]*w[m] = 2*w[n+m],   rho*w[n] = eta*w[n] = 0,
//   rho*eta^2 = 2*eta,      rho^2*eta = 2*rho,   rho*eta = 2 - w[0],
// never the closed-form structure constants of mul_basis. Used to
// cross-check the derived exponents there.
//
// Returns nullopt if reduction ends on a non-integral power of 2, which
// would signal a defect in the divisibility table or the rewrite rules.
std::optional<RingElement> mul_basis_rewriting(const BasisElement& a, const BasisElement& b);

}  // namespace c2ring::oracle
