#include <doctest.h>

#include "c2ring/grading.hpp"

using namespace c2ring;

TEST_CASE("bidegree addition is componentwise") {
    CHECK(Bidegree{0, 0} + Bidegree{3, 3} == Bidegree{3, 3});
    CHECK(Bidegree{-1, -1} + Bidegree{1, 1} == Bidegree{0, 0});
    CHECK(Bidegree{0, -2} + Bidegree{0, 2} == Bidegree{0, 0});
    CHECK(Bidegree{2, 5}.coweight() == -3);
}

TEST_CASE("bidegree printing") {
    CHECK(to_string(Bidegree{0, 0}) == "(0,0)");
    CHECK(to_string(Bidegree{-2, 7}) == "(-2,7)");
}

TEST_CASE("support of the reduced ring") {
    CHECK(is_nonzero_degree({0, -4}));
    CHECK(is_nonzero_degree({3, 3}));
    CHECK_FALSE(is_nonzero_degree({0, 3}));
    CHECK_FALSE(is_nonzero_degree({2, 5}));
}

TEST_CASE("rank: 2 at the origin, 1 on support, 0 off it") {
    CHECK(rank({0, 0}) == 2);
    CHECK(rank({5, 5}) == 1);
    CHECK(rank({1, 0}) == 0);
    CHECK(rank({0, -6}) == 1);
    CHECK(rank({0, -7}) == 0);
}

TEST_CASE("rank positive iff nonzero degree") {
    for (std::int64_t s = -12; s <= 12; ++s)
        for (std::int64_t w = -12; w <= 12; ++w)
            CHECK((rank({s, w}) > 0) == is_nonzero_degree({s, w}));
}

TEST_CASE("products of nonzero-stem support degrees stay in coweight 0") {
    for (std::int64_t s1 = -12; s1 <= 12; ++s1)
        for (std::int64_t s2 = -12; s2 <= 12; ++s2) {
            const Bidegree a{s1, s1}, b{s2, s2};
            if (rank(a) > 0 && rank(b) > 0 && a.stem != 0 && b.stem != 0)
                CHECK((a + b).coweight() == 0);
        }
}
