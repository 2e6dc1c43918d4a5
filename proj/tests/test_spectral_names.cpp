#include <doctest.h>

#include <map>
#include <set>
#include <sstream>
#include <stdexcept>

#include "c2ring/spectral_names.hpp"

using namespace c2ring;

namespace {
BasisElement w(std::int64_t n) { return BasisElement::omega(n); }
BasisElement x(std::int64_t i) { return BasisElement::x_class(i); }
}  // namespace

TEST_CASE("bockstein differentials move (s,f,w) to (s-1,f+1,w)") {
    CHECK(bockstein_degree({0, 0, -1}) == TriDegree{-1, 1, -1});
    CHECK(bockstein_degree({0, 0, 0}) == TriDegree{-1, 1, 0});
    CHECK(bockstein_degree({5, 2, 3}) == TriDegree{4, 3, 3});
    for (std::int64_t s = -4; s <= 4; ++s)
        for (std::int64_t f = 0; f <= 4; ++f)
            for (std::int64_t wt = -4; wt <= 4; ++wt) {
                const TriDegree d = bockstein_degree({s, f, wt});
                CHECK(d.weight == wt);
                CHECK(d.stem == s - 1);
            }
}

TEST_CASE("adams names of the stem-0 generators") {
    CHECK(adams_name(w(0))->str() == "h0");
    CHECK(adams_name(w(1))->str() == "tau^2 h0");
    CHECK(adams_name(w(5))->str() == "tau^10 h0");
    CHECK(adams_name(w(-1))->str() == "gamma/tau");
    CHECK(adams_name(w(-2))->str() == "gamma/tau^3");
    CHECK(adams_name(w(-5))->str() == "gamma/tau^9");
}

TEST_CASE("adams names of the coweight-0 table") {
    CHECK(adams_name(x(1))->str() == "h1");
    // stem 8k-1: Q/rho^{4k-2} h1^{4k}
    CHECK(adams_name(x(7))->str() == "Q/rho^2 h1^4");
    CHECK(adams_name(x(15))->str() == "Q/rho^6 h1^8");
    CHECK(adams_name(x(23))->str() == "Q/rho^10 h1^12");
    // stem 8k+1: Q/rho^{4k-1} h1^{4k+1}
    CHECK(adams_name(x(9))->str() == "Q/rho^3 h1^5");
    CHECK(adams_name(x(17))->str() == "Q/rho^7 h1^9");
    CHECK(adams_name(x(25))->str() == "Q/rho^11 h1^13");
}

TEST_CASE("the name table is partial") {
    CHECK_FALSE(adams_name(BasisElement::unit()).has_value());
    CHECK_FALSE(adams_name(BasisElement::rho_pow(1)).has_value());
    CHECK_FALSE(adams_name(x(2)).has_value());
    CHECK_FALSE(adams_name(x(8)).has_value());
    CHECK_FALSE(adams_name(x(12)).has_value());
}

TEST_CASE("adams_name is injective on the omega family") {
    std::set<std::string> seen;
    for (std::int64_t n = -10; n <= 10; ++n) {
        const auto name = adams_name(w(n));
        REQUIRE(name.has_value());
        CHECK(seen.insert(name->str()).second);
    }
}

TEST_CASE("gamma family over the unit class") {
    const std::vector<ExtCGenerator> catalog = {{"1", {0, 0, 0}, TauStatus::free()}};
    const TriWindow window{0, 6, 0, 0, 0, 6};
    const auto classes = enumerate_e1_minus(catalog, window);
    // (a,b) with a >= 0, b >= 1, a+b+1 <= 6: 5+4+3+2+1 classes
    CHECK(classes.size() == 15);
    for (const auto& c : classes) {
        CHECK(c.kind == E1MinusClass::Kind::Gamma);
        CHECK(c.degree == TriDegree{c.a, 0, c.a + c.b + 1});
    }
    // a = 0 members are gamma/tau^b in degree (0,0,b+1)
    int found = 0;
    for (const auto& c : classes)
        if (c.a == 0) {
            CHECK(c.degree == TriDegree{0, 0, c.b + 1});
            ++found;
        }
    CHECK(found == 5);
    // no duplicates
    std::set<std::string> keys;
    for (const auto& c : classes)
        CHECK(keys.insert(c.name() + to_string(c.degree)).second);
}

TEST_CASE("gamma weights increase strictly in b for fixed a") {
    const auto classes =
        enumerate_e1_minus(bundled_catalog(), TriWindow{0, 8, 0, 2, -8, 8});
    std::map<std::pair<std::string, std::int64_t>, std::int64_t> last_weight;
    for (const auto& c : classes) {
        if (c.kind != E1MinusClass::Kind::Gamma) continue;
        const auto key = std::make_pair(c.base, c.a);
        if (last_weight.count(key)) CHECK(c.degree.weight > last_weight[key]);
        last_weight[key] = c.degree.weight;
    }
}

TEST_CASE("Q family over a tau-torsion generator") {
    const std::vector<ExtCGenerator> catalog = {
        {"x", {1, 1, 1}, TauStatus::torsion(0)}};
    const auto classes = enumerate_e1_minus(catalog, TriWindow{0, 8, 0, 0, 0, 8});
    REQUIRE(!classes.empty());
    for (const auto& c : classes) {
        CHECK(c.kind == E1MinusClass::Kind::Q);
        CHECK(c.b == 0);
        // degree (s+a+1, f-1, w+a+b+1) with (s,f,w) = (1,1,1)
        CHECK(c.degree == TriDegree{2 + c.a, 0, 2 + c.a});
    }
    CHECK(classes.front().degree == TriDegree{2, 0, 2});   // a = 0, by hand
    CHECK(classes[1].degree == TriDegree{3, 0, 3});        // a = 1, by hand
    // torsion order bounds b
    const std::vector<ExtCGenerator> torsion2 = {
        {"y", {0, 2, 0}, TauStatus::torsion(2)}};
    for (const auto& c : enumerate_e1_minus(torsion2, TriWindow{0, 10, 0, 4, -10, 10}))
        CHECK(c.b <= 2);
}

TEST_CASE("empty catalog enumerates nothing") {
    CHECK(enumerate_e1_minus({}, TriWindow{0, 10, -10, 10, -10, 10}).empty());
}

TEST_CASE("catalogs with negative stems violate Ext_C connectivity") {
    const std::vector<ExtCGenerator> bad = {{"bad", {-1, 0, 0}, TauStatus::free()}};
    CHECK_THROWS_AS(enumerate_e1_minus(bad, TriWindow{0, 4, 0, 4, 0, 4}),
                    std::invalid_argument);
}

TEST_CASE("support validation") {
    const auto classes = enumerate_e1_minus(bundled_catalog(), TriWindow{0, 8, -2, 4, -8, 8});
    CHECK(validate_e1_support(classes).all_passed());
    CHECK(validate_e1_support({}).all_passed());
    const E1MinusClass rogue{E1MinusClass::Kind::Gamma, 0, 1, "1", {-1, 0, 2}};
    CHECK_FALSE(validate_e1_support({rogue}).all_passed());
}

TEST_CASE("catalog parsing") {
    std::istringstream in(
        "# Ext_C generators\n"
        "\n"
        "1   0 0 0 free\n"
        "h1  1 1 1 free   # the Hopf class\n"
        "t   2 3 1 torsion:2\n");
    const auto catalog = parse_catalog(in);
    REQUIRE(catalog.size() == 3);
    CHECK(catalog[0].label == "1");
    CHECK(catalog[1].degree == TriDegree{1, 1, 1});
    CHECK(catalog[2].tau == TauStatus::torsion(2));

    std::istringstream short_line("h0 0 1\n");
    CHECK_THROWS_WITH_AS(parse_catalog(short_line),
                         "catalog line 1: expected 'label s f w tau_status'",
                         std::runtime_error);
    std::istringstream bad_status("h0 0 1 0 maybe\n");
    CHECK_THROWS_AS(parse_catalog(bad_status), std::runtime_error);
    std::istringstream bad_stem("h0 -2 1 0 free\n");
    CHECK_THROWS_AS(parse_catalog(bad_stem), std::runtime_error);
    std::istringstream trailing("h0 0 1 0 free junk\n");
    CHECK_THROWS_AS(parse_catalog(trailing), std::runtime_error);
    std::istringstream bad_torsion("h0 0 1 0 torsion:x\n");
    CHECK_THROWS_AS(parse_catalog(bad_torsion), std::runtime_error);
}

TEST_CASE("bundled catalog holds the unit, h0 and h1") {
    const auto& catalog = bundled_catalog();
    REQUIRE(catalog.size() == 3);
    CHECK(catalog[0].degree == TriDegree{0, 0, 0});
    CHECK(catalog[1].degree == TriDegree{0, 1, 0});
    CHECK(catalog[2].degree == TriDegree{1, 1, 1});
}

TEST_CASE("class naming") {
    CHECK(E1MinusClass{E1MinusClass::Kind::Gamma, 0, 3, "1", {0, 0, 4}}.name() ==
          "gamma/tau^3");
    CHECK(E1MinusClass{E1MinusClass::Kind::Gamma, 2, 1, "h1", {3, 1, 6}}.name() ==
          "gamma/(rho^2 tau)*h1");
    CHECK(E1MinusClass{E1MinusClass::Kind::Q, 0, 0, "h1", {2, 0, 2}}.name() == "Q*h1");
    CHECK(E1MinusClass{E1MinusClass::Kind::Q, 1, 0, "x", {3, 0, 3}}.name() == "Q/rho*x");
}

TEST_CASE("torsion order must be nonnegative") {
    CHECK_THROWS_AS(TauStatus::torsion(-1), std::invalid_argument);
}
