#include "cubinv/parser.hpp"
#include "cubinv/reduction.hpp"
#include "cubinv/verify.hpp"

#include <doctest.h>

#include <set>

using namespace cubinv;

namespace {

RestrictedBasis basis(Fiber f) { return restrict_basis(build_catalog(), fiber_substitution(f)); }

ReductionResult paper(Fiber f) {
    ReduceOptions o;
    o.keep = paper_generators(f);
    return reduce(basis(f), o);
}

const SolvedRelation* solved_for(const std::vector<SolvedRelation>& rs, const std::string& name) {
    for (const auto& r : rs) {
        if (r.name == name) return &r;
    }
    return nullptr;
}

std::size_t rank_of(const std::vector<Polynomial>& ps) {
    if (ps.empty()) return 0;
    return rank(coefficient_matrix(ps).a);
}

}  // namespace

TEST_CASE("partition by bi-degree") {
    const auto parts = partition_bidegrees(basis(Fiber::Theta));
    REQUIRE_FALSE(parts.empty());
    CHECK(parts.front().first == BiDegree{0, 1});
    CHECK(parts.front().second == std::vector<std::string>{"I010"});
    bool found = false;
    for (std::size_t i = 0; i < parts.size(); ++i) {
        if (i > 0) CHECK(parts[i - 1].first < parts[i].first);
        if (parts[i].first == BiDegree{2, 1}) {
            found = true;
            CHECK(parts[i].second == std::vector<std::string>{"I201", "I210"});
        }
    }
    CHECK(found);
    std::size_t count = 0;
    for (const auto& [b, names] : parts) count += names.size();
    CHECK(count == 18);
}

TEST_CASE("reducible products") {
    const RestrictedBasis rb = basis(Fiber::Theta);
    const auto p02 = reducible_products(rb, {0, 2});
    REQUIRE(p02.size() == 1);
    CHECK(p02[0].product.to_string() == "I010^2");
    CHECK(p02[0].poly == rb.find("I010")->pow(2));

    CHECK(reducible_products(rb, {0, 1}).empty());

    const auto p40 = reducible_products(rb, {4, 0});
    REQUIRE(p40.size() == 1);
    CHECK(p40[0].product == FreeProduct({"I200", "I200"}));

    // (2,1): I010*I200 only.
    const auto p21 = reducible_products(rb, {2, 1});
    REQUIRE(p21.size() == 1);
    CHECK(p21[0].product.to_string() == "I010*I200");
}

TEST_CASE("relations at a single bi-degree") {
    const RestrictedBasis theta = basis(Fiber::Theta);
    const auto r03 = relations_at(theta, {0, 3});
    CHECK(r03.size() == 2);
    for (const auto& r : r03) CHECK(relation_residual(r, theta).is_zero());

    // The published (0,3) relations lie in the span of the kernel relations.
    const RestrictedBasis gamma = basis(Fiber::Gamma);
    const auto r02 = relations_at(gamma, {0, 2});
    REQUIRE(r02.size() == 1);
    Relation expected;
    expected.terms[FreeProduct::single("I002")] = 6;
    expected.terms[FreeProduct::single("I020")] = -12;
    expected.terms[FreeProduct({"I010", "I010"})] = -1;
    CHECK(relation_residual(expected, gamma).is_zero());
    for (const auto& [p, c] : r02[0].terms) CHECK(c * Rational(6) == expected.terms.at(p) * r02[0].terms.at(FreeProduct::single("I002")));

    CHECK(relations_at(theta, {2, 0}).empty());
}

TEST_CASE("published generator sets under the paper policy") {
    CHECK(paper(Fiber::Theta).generators ==
          std::vector<std::string>{"I010", "I002", "I020", "I200", "I201", "I210", "I400"});
    CHECK(paper(Fiber::AlphaPrime).generators ==
          std::vector<std::string>{"I010", "I002", "I020", "I003", "I030", "I200", "I201", "I210", "I202a",
                                   "I211", "I220", "I400", "I401", "I410", "I600"});
    CHECK(paper(Fiber::Gamma).generators ==
          std::vector<std::string>{"I010", "I020", "I030", "I200", "I210", "I220", "I410", "I600"});
}

TEST_CASE("count identities") {
    const std::map<Fiber, std::array<std::size_t, 3>> expected = {
        {Fiber::Theta, {7, 11, 12}}, {Fiber::AlphaPrime, {15, 15, 0}}, {Fiber::Gamma, {8, 22, 0}}};
    for (const auto& [f, counts] : expected) {
        CAPTURE(to_string(f));
        const ReductionResult r = paper(f);
        CHECK(r.generators.size() == counts[0]);
        CHECK(r.relations.size() == counts[1]);
        CHECK(r.vanished.size() == counts[2]);
        CHECK(r.generators.size() + r.relations.size() + r.vanished.size() == 30);
    }
}

TEST_CASE("every catalog name is exactly one of generator, solved or vanished") {
    for (Fiber f : kAllFibers) {
        const ReductionResult r = paper(f);
        std::map<std::string, int> seen;
        for (const auto& g : r.generators) ++seen[g];
        for (const auto& v : r.vanished) ++seen[v];
        for (const auto& rel : r.relations) {
            REQUIRE(rel.solved_for.has_value());
            ++seen[*rel.solved_for];
            CHECK(rel.terms.at(FreeProduct::single(*rel.solved_for)).sign() > 0);
            int singles = 0;
            for (const auto& [p, c] : rel.terms) singles += p.size() == 1 && p.factors()[0] == *rel.solved_for;
            CHECK(singles == 1);
        }
        CHECK(seen.size() == 30);
        for (const auto& [name, n] : seen) CHECK(n == 1);
    }
}

TEST_CASE("solved forms") {
    const auto theta = solve_relations(paper(Fiber::Theta));
    REQUIRE(solved_for(theta, "I012"));
    CHECK(solved_for(theta, "I012")->to_string() == "I012 = 1/6*I002*I010");
    CHECK(solved_for(theta, "I601")->to_string() == "I601 = 1/18*(9*I201*I400 - 4*I200^2*I201)");

    const auto gamma = solve_relations(paper(Fiber::Gamma));
    CHECK(solved_for(gamma, "I400")->to_string() == "I400 = 1/2*I200^2");
    CHECK(solved_for(gamma, "I002")->to_string() == "I002 = 1/6*(12*I020 + I010^2)");

    // The alpha-prime I601 display, compared as a formal polynomial.
    const auto alpha = solve_relations(paper(Fiber::AlphaPrime));
    const VarTablePtr symbols = invariant_symbols();
    CHECK(parse(solved_for(alpha, "I601")->rhs_string(), symbols) ==
          parse("1/18*(-4*I200^2*I201 + 6*I201*I400 - 3*I210*I400 + 6*I200*I410 + I200*I400*I010 - 3*I600*I010)",
                symbols));
}

TEST_CASE("solved forms parse back to the kernel relation") {
    const VarTablePtr symbols = invariant_symbols();
    for (Fiber f : kAllFibers) {
        const RestrictedBasis rb = basis(f);
        for (const auto& s : solve_relations(paper(f))) {
            const PublishedRelation as_text{to_string(f), s.name, s.rhs_string(), "engine"};
            CHECK(verify_published(as_text, rb).pass);
        }
    }
}

TEST_CASE("property: every relation and syzygy substitutes to zero") {
    for (Fiber f : kAllFibers) {
        const RestrictedBasis rb = basis(f);
        ReduceOptions o;
        o.keep = paper_generators(f);
        o.all_bidegrees = true;
        const ReductionResult r = reduce(rb, o);
        for (const auto& rel : r.relations) {
            CHECK(relation_residual(rel, rb).is_zero());
            CHECK(numeric_spotcheck(rel, rb, 100, 2024).pass);
        }
        for (const auto& rel : r.syzygies) {
            CHECK_FALSE(rel.solved_for.has_value());
            for (const auto& [p, c] : rel.terms) CHECK(p.reducible());
            CHECK(relation_residual(rel, rb).is_zero());
        }
    }
}

TEST_CASE("property: solved relations use only generator products") {
    for (Fiber f : kAllFibers) {
        const ReductionResult r = paper(f);
        const std::set<std::string> gens(r.generators.begin(), r.generators.end());
        for (const auto& s : solve_relations(r)) {
            for (const auto& [p, c] : s.rhs) {
                for (const auto& factor : p.factors()) CHECK(gens.count(factor) == 1);
            }
        }
    }
}

TEST_CASE("property: products of generators span the same space as all reducible products") {
    for (Fiber f : kAllFibers) {
        const RestrictedBasis rb = basis(f);
        const ReductionResult r = paper(f);
        const std::set<std::string> gens(r.generators.begin(), r.generators.end());
        for (const auto& [b, names] : partition_bidegrees(rb)) {
            CAPTURE(b.to_string());
            std::vector<Polynomial> all, from_gens;
            for (const auto& pt : reducible_products(rb, b)) {
                all.push_back(pt.poly);
                const bool only = std::all_of(pt.product.factors().begin(), pt.product.factors().end(),
                                              [&](const std::string& n) { return gens.count(n) > 0; });
                if (only) from_gens.push_back(pt.poly);
            }
            CHECK(rank_of(from_gens) == rank_of(all));
        }
    }
}

TEST_CASE("property: completeness of the generator set") {
    for (Fiber f : kAllFibers) {
        const RestrictedBasis rb = basis(f);
        const ReductionResult r = paper(f);
        const auto cert = verify_generating_set(r.generators, rb);
        CHECK(cert.spanning());
        CHECK(cert.unchecked.empty());
    }
}

TEST_CASE("property: cardinality does not depend on the selection policy") {
    const std::map<Fiber, std::size_t> sizes = {{Fiber::Theta, 7}, {Fiber::AlphaPrime, 15}, {Fiber::Gamma, 8}};
    for (Fiber f : kAllFibers) {
        const RestrictedBasis rb = basis(f);
        for (SelectionPolicy p : {SelectionPolicy::TableOrder, SelectionPolicy::ReverseTableOrder}) {
            ReduceOptions o;
            o.policy = p;
            const ReductionResult r = reduce(rb, o);
            CHECK(r.generators.size() == sizes.at(f));
            CHECK(r.relations.size() + r.generators.size() + r.vanished.size() == 30);
            CHECK(verify_generating_set(r.generators, rb).passes());
        }
    }
}

TEST_CASE("table-order prefers earlier invariants") {
    ReduceOptions o;
    o.policy = SelectionPolicy::TableOrder;
    const ReductionResult r = reduce(basis(Fiber::Gamma), o);
    // At (0,2) the earlier of I002/I020 is kept.
    CHECK(std::find(r.generators.begin(), r.generators.end(), "I002") != r.generators.end());
    CHECK(std::find(r.generators.begin(), r.generators.end(), "I020") == r.generators.end());
}

TEST_CASE("policy conflicts name the bi-degree") {
    const RestrictedBasis rb = basis(Fiber::Theta);
    ReduceOptions o;
    o.keep = std::vector<std::string>{"I010", "I002", "I020", "I200", "I201", "I210"};
    try {
        reduce(rb, o);
        FAIL("expected a policy conflict");
    } catch (const PolicyConflict& e) {
        CHECK(e.bidegree() == BiDegree{4, 0});
    }

    o.keep = paper_generators(Fiber::Theta);
    o.keep->push_back("I012");
    CHECK_THROWS_AS(reduce(rb, o), PolicyConflict);

    o.keep = std::vector<std::string>{"I003"};
    CHECK_THROWS_AS(reduce(rb, o), UsageError);

    o.keep.reset();
    CHECK_THROWS_AS(reduce(rb, o), UsageError);
}

TEST_CASE("bounds") {
    ReduceOptions o;
    o.keep = paper_generators(Fiber::Theta);
    o.bounds = {3, 6};
    const ReductionResult r = reduce(basis(Fiber::Theta), o);
    // Everything above total degree 3 is left unreduced.
    CHECK(r.relations.size() == 2);
    std::size_t beyond = 0;
    for (const auto& b : r.per_bidegree) beyond += b.beyond_bounds;
    CHECK(beyond > 0);
    CHECK(r.generators.size() + r.relations.size() + r.vanished.size() == 30);
}

TEST_CASE("per bi-degree report") {
    const ReductionResult r = paper(Fiber::Theta);
    for (const auto& b : r.per_bidegree) {
        CHECK(b.n == b.rank + b.kernel_dim);
        CHECK(b.kernel_dim == b.eliminated.size() + b.syzygies);
        CHECK(b.kept.size() + b.eliminated.size() == b.invariants.size());
    }
}

TEST_CASE("union of fiber generator sets") {
    std::map<Fiber, ReductionResult> results;
    for (Fiber f : kAllFibers) results.emplace(f, paper(f));
    const UnionReport u = check_union_property(results);
    CHECK(u.theta_in_alpha);
    CHECK(u.gamma_in_alpha);
    CHECK_FALSE(u.gamma_in_theta);
    CHECK(u.holds());
    CHECK(u.union_names.size() == 15);
    CHECK(u.union_names == results.at(Fiber::AlphaPrime).generators);
}

TEST_CASE("property: reduction is deterministic") {
    for (Fiber f : kAllFibers) {
        const ReductionResult a = paper(f);
        const ReductionResult b = paper(f);
        CHECK(a.generators == b.generators);
        REQUIRE(a.relations.size() == b.relations.size());
        for (std::size_t i = 0; i < a.relations.size(); ++i) CHECK(a.relations[i].to_string() == b.relations[i].to_string());
    }
}

TEST_CASE("printing") {
    CHECK(FreeProduct({"I010", "I002", "I010"}).to_string() == "I002*I010^2");
    CHECK(FreeProduct({"I202a", "I202a"}).to_latex() == "(I_{202}^{a})^{2}");
    CHECK(invariant_latex("I010") == "\\operatorname{tr}\\boldsymbol{\\sigma}");
    CHECK(parse_policy("reverse-table-order") == SelectionPolicy::ReverseTableOrder);
    CHECK_FALSE(parse_policy("random").has_value());
}
