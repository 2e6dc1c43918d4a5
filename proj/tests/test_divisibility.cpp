#include <doctest.h>

#include <stdexcept>

#include "c2ring/divisibility.hpp"

using namespace c2ring;

TEST_CASE("n(i): first two periods, frozen by hand from the case analysis") {
    const std::int64_t expected[16] = {0, 0, 0, 0, 1, 2, 3, 3, 4, 4, 4, 4, 5, 6, 7, 7};
    for (std::int64_t i = 1; i <= 16; ++i) CHECK(n_of(i) == expected[i - 1]);
}

TEST_CASE("n(i) spot values") {
    CHECK(n_of(1) == 0);
    CHECK(n_of(8) == 3);
    CHECK(n_of(7) == 3);
    CHECK(n_of(14) == 6);
}

TEST_CASE("m(i): first two periods and spot values") {
    const std::int64_t expected[8] = {0, 0, 0, 3, 4, 4, 4, 7};
    for (std::int64_t i = 1; i <= 8; ++i) CHECK(m_of(i) == expected[i - 1]);
    CHECK(m_of(4) == 3);
    CHECK(m_of(6) == 4);
    CHECK(m_of(7) == 4);
}

TEST_CASE("b(i) = i - n(i)") {
    CHECK(b_of(1) == 1);
    CHECK(b_of(8) == 5);
    CHECK(b_of(9) == 5);
    const std::int64_t expected[16] = {1, 2, 3, 4, 4, 4, 4, 5, 5, 6, 7, 8, 8, 8, 8, 9};
    for (std::int64_t i = 1; i <= 16; ++i) CHECK(b_of(i) == expected[i - 1]);
}

TEST_CASE("domain: i >= 1 only") {
    CHECK_THROWS_AS(n_of(0), std::invalid_argument);
    CHECK_THROWS_AS(n_of(-3), std::invalid_argument);
    CHECK_THROWS_AS(m_of(0), std::invalid_argument);
    CHECK_THROWS_AS(b_of(-1), std::invalid_argument);
}

TEST_CASE("periodicity") {
    for (std::int64_t i = 1; i <= 100; ++i) {
        CHECK(n_of(i + 8) == n_of(i) + 4);
        CHECK(m_of(i + 4) == m_of(i) + 4);
    }
}

TEST_CASE("step bound: n(j) - n(j-1) in {0,1}") {
    for (std::int64_t j = 2; j <= 400; ++j) {
        const std::int64_t step = n_of(j) - n_of(j - 1);
        CHECK(step >= 0);
        CHECK(step <= 1);
    }
}

TEST_CASE("superadditivity: n(i+j) >= n(i) + n(j) up to i+j = 400") {
    for (std::int64_t i = 1; i < 400; ++i)
        for (std::int64_t j = 1; i + j <= 400; ++j) CHECK(n_of(i + j) >= n_of(i) + n_of(j));
}

TEST_CASE("b is nondecreasing and >= 1") {
    for (std::int64_t i = 1; i <= 400; ++i) {
        CHECK(b_of(i) >= 1);
        if (i > 1) CHECK(b_of(i) >= b_of(i - 1));
    }
}

TEST_CASE("n/m compatibility inequalities") {
    CHECK(check_nm_compatibility(8).all_passed());
    const CheckReport big = check_nm_compatibility(200);
    CHECK(big.all_passed());
    CHECK(big.results.size() == 200);
    // i = 1 has n(1) = 0, so the second inequality is vacuous but reported
    CHECK(big.results.front().passed);
}

TEST_CASE("profile row bundles the three values") {
    const auto p = divisibility_profile(9);
    CHECK(p.i == 9);
    CHECK(p.n == 4);
    CHECK(p.m == 8);
    CHECK(p.b == 5);
}
