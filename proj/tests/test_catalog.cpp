#include "cubinv/catalog.hpp"
#include "cubinv/parser.hpp"
#include "cubinv/restriction.hpp"
#include "support.hpp"

#include <doctest.h>

#include <set>

using namespace cubinv;

namespace {

using Rows = std::array<std::array<Rational, 3>, 3>;

// Quarter-turns about e1, e2, e3.
const Rows kQuarterTurns[] = {
    {{{1, 0, 0}, {0, 0, -1}, {0, 1, 0}}},
    {{{0, 0, 1}, {0, 1, 0}, {-1, 0, 0}}},
    {{{0, -1, 0}, {1, 0, 0}, {0, 0, 1}}},
};

}  // namespace

TEST_CASE("catalog holds the 30 invariants") {
    const Catalog c = build_catalog();
    REQUIRE(c.size() == 30);
    const auto names = c.names();
    CHECK(std::set<std::string>(names.begin(), names.end()).size() == 30);
    CHECK(names.front() == "I010");
    CHECK(names.back() == "I601");
    CHECK(c.find("I200").bidegree3d == BiDegree{2, 0});
    CHECK(c.find("I010").bidegree3d == BiDegree{0, 1});
    CHECK(c.find("I601").bidegree3d == BiDegree{6, 1});
    CHECK_THROWS_AS(c.find("I999"), UsageError);
}

TEST_CASE("generic evaluations of simple invariants") {
    const Catalog c = build_catalog();
    const auto g = generic_state();
    CHECK(evaluate_invariant(c.find("I200"), g.sigma, g.m) == parse("m1^2 + m2^2 + m3^2", g.table));
    CHECK(evaluate_invariant(c.find("I002"), g.sigma, g.m) == parse("2*(s12^2 + s13^2 + s23^2)", g.table));
    CHECK(evaluate_invariant(c.find("I010"), g.sigma, g.m) == parse("s11 + s22 + s33", g.table));
    // |M x M|^dbar squared by hand: 2 (m1^2 m2^2 + m1^2 m3^2 + m2^2 m3^2).
    CHECK(evaluate_invariant(c.find("I400"), g.sigma, g.m) ==
          parse("2*(m1^2*m2^2 + m1^2*m3^2 + m2^2*m3^2)", g.table));
}

TEST_CASE("every invariant is bi-homogeneous of its tabulated bi-degree") {
    const Catalog c = build_catalog();
    const auto g = generic_state();
    const auto all = evaluate_all(c, g.sigma, g.m);
    REQUIRE(all.size() == 30);
    for (std::size_t i = 0; i < 30; ++i) {
        CAPTURE(all[i].name);
        CHECK(all[i].name == c[i].name);
        REQUIRE_FALSE(all[i].poly.is_zero());
        CHECK(all[i].poly.is_bihomogeneous());
        CHECK(all[i].poly.bidegree() == c[i].bidegree3d);
    }
}

TEST_CASE("tabulated double-contraction forms agree with the interleaved trace forms") {
    const Catalog c = build_catalog();
    const auto g = generic_state();
    const InvariantOperands o(g.sigma, g.m);
    const SymMatrix3 mm2 = o.mm_bar * o.mm_bar;
    CHECK(double_contract(mm2, o.sbar) == evaluate_invariant(c.find("I401"), g.sigma, g.m));
    CHECK(double_contract(mm2, o.sd) == evaluate_invariant(c.find("I410"), g.sigma, g.m));
    CHECK(double_contract(mm2, o.sbar2_bar) == evaluate_invariant(c.find("I402"), g.sigma, g.m));
    CHECK(double_contract(mm2, o.sd * o.sbar) == evaluate_invariant(c.find("I411"), g.sigma, g.m));
    CHECK(double_contract(o.sbar2, o.sd) == evaluate_invariant(c.find("I012"), g.sigma, g.m));
}

TEST_CASE("property: octahedral quarter-turns leave every invariant unchanged") {
    const Catalog c = build_catalog();
    const auto g = generic_state();
    std::mt19937_64 rng(41);
    for (int sample = 0; sample < 4; ++sample) {
        std::vector<Rational> point;
        for (std::size_t k = 0; k < g.table->size(); ++k) point.push_back(cubinv::testing::small_rational(rng, 100));
        auto constant = [&](const Polynomial& p) { return Polynomial::constant(g.table, p.evaluate(point)); };
        SymMatrix3 sigma(g.table);
        for (std::size_t i = 0; i < 3; ++i) {
            for (std::size_t j = 0; j < 3; ++j) sigma(i, j) = constant(g.sigma(i, j));
        }
        const SymVector3 m(constant(g.m[0]), constant(g.m[1]), constant(g.m[2]));
        const auto before = evaluate_all(c, sigma, m);
        for (const auto& rows : kQuarterTurns) {
            const SymMatrix3 r = SymMatrix3::from_rows(g.table, rows);
            const auto after = evaluate_all(c, r * sigma * r.transpose(), r * m);
            for (std::size_t i = 0; i < 30; ++i) {
                CAPTURE(before[i].name);
                CHECK(after[i].poly == before[i].poly);
            }
        }
    }
}

TEST_CASE("property: octahedral invariance holds symbolically") {
    const Catalog c = build_catalog();
    const auto g = generic_state();
    const auto before = evaluate_all(c, g.sigma, g.m);
    const SymMatrix3 r = SymMatrix3::from_rows(g.table, kQuarterTurns[2]);
    const auto after = evaluate_all(c, r * g.sigma * r.transpose(), r * g.m);
    for (std::size_t i = 0; i < 30; ++i) {
        CAPTURE(before[i].name);
        CHECK(after[i].poly == before[i].poly);
    }
}

TEST_CASE("three-fold axis is a symmetry, a generic rotation is not") {
    const Catalog c = build_catalog();
    const auto g = generic_state();
    const SymMatrix3 p = SymMatrix3::from_rows(g.table, {{{0, 0, 1}, {1, 0, 0}, {0, 1, 0}}});
    const auto base = evaluate_all(c, g.sigma, g.m);
    const auto cycled = evaluate_all(c, p * g.sigma * p.transpose(), p * g.m);
    for (std::size_t i = 0; i < 30; ++i) CHECK(cycled[i].poly == base[i].poly);

    // Rational rotation about e3 by atan(4/3).
    const SymMatrix3 r = SymMatrix3::from_rows(
        g.table, {{{Rational(3, 5), Rational(-4, 5), 0}, {Rational(4, 5), Rational(3, 5), 0}, {0, 0, 1}}});
    const auto rotated = evaluate_all(c, r * g.sigma * r.transpose(), r * g.m);
    CHECK(rotated[c.index_of("I200")].poly == base[c.index_of("I200")].poly);
    CHECK(rotated[c.index_of("I010")].poly == base[c.index_of("I010")].poly);
    CHECK_FALSE(rotated[c.index_of("I400")].poly == base[c.index_of("I400")].poly);
}
