#include "c2ring/divisibility.hpp"

#include <stdexcept>
#include <utility>

namespace c2ring {

namespace {

std::function<std::int64_t(std::int64_t)>& n_override() {
    static std::function<std::int64_t(std::int64_t)> fn;
    return fn;
}

void require_positive(std::int64_t i, const char* what) {
    if (i <= 0) throw std::invalid_argument(std::string(what) + ": defined for i >= 1 only");
}

}  // namespace

void set_n_override(std::function<std::int64_t(std::int64_t)> fn) {
    n_override() = std::move(fn);
}

std::int64_t n_closed_form(std::int64_t i) {
    require_positive(i, "n_closed_form");
    const std::int64_t t = i / 8;
    switch (i % 8) {
        case 0: return 4 * t - 1;
        case 1:
        case 2:
        case 3:
        case 4: return 4 * t;
        case 5: return 4 * t + 1;
        case 6: return 4 * t + 2;
        default: return 4 * t + 3;  // i = 8t+7
    }
}

std::int64_t n_of(std::int64_t i) {
    require_positive(i, "n_of");
    if (const auto& fn = n_override()) return fn(i);
    return n_closed_form(i);
}

std::int64_t m_of(std::int64_t i) {
    require_positive(i, "m_of");
    switch (i % 4) {
        case 0:
        case 1: return i - 1;
        case 2: return i - 2;
        default: return i - 3;  // i = 3 (mod 4)
    }
}

std::int64_t b_of(std::int64_t i) {
    require_positive(i, "b_of");
    return i - n_of(i);
}

DivisibilityProfile divisibility_profile(std::int64_t i) {
    return {i, n_of(i), m_of(i), b_of(i)};
}

CheckReport check_nm_compatibility(std::int64_t i_max) {
    if (i_max < 1) throw std::invalid_argument("check_nm_compatibility: i_max must be >= 1");
    CheckReport report;
    for (std::int64_t i = 1; i <= i_max; ++i) {
        const std::int64_t n = n_of(i);
        const std::string tag = "nm-compat[i=" + std::to_string(i) + "]";
        if (i - n < 1) {
            report.add(tag, false, "i - n(i) < 1, m undefined");
            continue;
        }
        const bool first = m_of(i - n) >= n;
        // Vacuous when i - n(i) - 1 is out of m's domain.
        const bool second = (i - n - 1 < 1) || (m_of(i - n - 1) < n + 1);
        report.add(tag, first && second,
                   first && second ? ""
                                   : "m(" + std::to_string(i - n) + ")=" +
                                         std::to_string(m_of(i - n)) + " vs n=" + std::to_string(n));
    }
    return report;
}

}  // namespace c2ring
