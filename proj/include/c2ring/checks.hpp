#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "c2ring/divisibility.hpp"
#include "c2ring/rational.hpp"
#include "c2ring/report.hpp"

namespace c2ring {

// Ring axioms on the box |stem|,|weight| <= window: grading of products,
// commutativity, associativity, the torsion-free model, and unique
// 2-divisibility of eta powers.
CheckReport check_ring_axioms(std::int64_t window);

// Every relation of the presentation, instantiated across the window:
// 2 = w[0] + rho*eta; w[n]*w[m] = 2*w[n+m]; the eta^3/eta ladder relations
// (with exponent n(i+6), plus an entry recording that the m(i+6) variant is
// not 2-integral); rho*w[n] = x[i]*w[n] = 0; 2*eta = rho*eta^2 and
// 2*rho = rho^2*eta; w[0]*eta = w[0]*rho = 0; and generator sufficiency
// (every x[i] as a monomial in x[j], j = 1,7 mod 8, and rho).
CheckReport check_presentation(std::int64_t window);

// Multiplicativity of both characters on all basis pairs in the window,
// plus the spot values pinning them.
CheckReport check_characters(std::int64_t window);

// The divisibility tables against an independent oracle (frozen leading
// values extended by periodicity), plus the step bound, superadditivity,
// monotonicity of b, and the n/m compatibility inequalities.
CheckReport check_divisibility(std::int64_t i_max);

// Closed-form multiplication against the rewriting oracle on every basis
// pair in the window.
CheckReport check_oracle_agreement(std::int64_t window);

struct SuiteSelection {
    bool axioms = false;
    bool presentation = false;
    bool rational = false;
    bool divisibility = false;
    bool characters = false;
    bool oracle = false;

    static SuiteSelection all() { return {true, true, true, true, true, true}; }
};

// Valid suite names, in canonical run order.
const std::vector<std::string>& suite_names();

// Parse a suite name; throws std::invalid_argument on unknown names.
SuiteSelection select_suite(const std::string& name);

// Run the selected suites at the given window (divisibility uses
// max(window, 200) as its table extent so the tables are always exercised
// well past the basis box).
CheckReport run_suites(const SuiteSelection& sel, std::int64_t window);

}  // namespace c2ring
