#pragma once

#include "cubinv/reduction.hpp"

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace cubinv {

/// A relation `lhs = rhs` as printed in the literature, over invariant names.
struct PublishedRelation {
    std::string fiber;
    std::string lhs;
    std::string rhs;
    std::string source;

    std::string text() const { return lhs + " = " + rhs; }
};

/// Parses records of the form `fiber | lhs | rhs | tag`; blank lines and
/// lines starting with '#' are skipped. Throws UsageError naming the line.
std::vector<PublishedRelation> parse_published_relations(std::string_view text);
std::vector<PublishedRelation> load_published_relations(const std::string& path);
/// The relation file shipped in data/, compiled into the library.
std::vector<PublishedRelation> builtin_published_relations();
std::vector<PublishedRelation> published_for(const std::vector<PublishedRelation>& all, std::string_view fiber);

/// One formal variable per catalog name, in catalog order.
VarTablePtr invariant_symbols();

/// lhs - rhs as a polynomial in the invariant symbols. Throws ParseError
/// (UnknownVariable for names outside the catalog).
Polynomial published_polynomial(const PublishedRelation& rel);

struct PublishedCheck {
    bool pass = false;
    Polynomial residual;  // over the restricted variables
};

PublishedCheck verify_published(const PublishedRelation& rel, const RestrictedBasis& rb);

struct GeneratingSetReport {
    std::vector<std::string> names;
    /// Survivors outside `names` that no product of names reaches.
    std::vector<std::pair<std::string, BiDegree>> unspanned;
    /// Members lying in the span of products of the other members.
    std::vector<std::string> redundant;
    /// Members that are not nonzero restricted invariants.
    std::vector<std::string> unknown;
    /// Survivors whose bi-degree lies outside the bounds.
    std::vector<std::string> unchecked;

    bool spanning() const { return unspanned.empty() && unknown.empty(); }
    bool minimal() const { return redundant.empty() && unknown.empty(); }
    bool passes() const { return spanning() && minimal(); }
};

GeneratingSetReport verify_generating_set(const std::vector<std::string>& names, const RestrictedBasis& rb,
                                          const Bounds& bounds = {});

struct SpotCheck {
    bool pass = false;
    std::size_t trials = 0;
    std::size_t failures = 0;
};

/// Evaluates the residual at `trials` random rational points with numerators
/// in [-100, 100] and denominators in [1, 100].
SpotCheck numeric_spotcheck(const PublishedRelation& rel, const RestrictedBasis& rb, std::size_t trials,
                            std::uint64_t seed);
SpotCheck numeric_spotcheck(const Relation& rel, const RestrictedBasis& rb, std::size_t trials,
                            std::uint64_t seed);

/// The engine's relation for the same eliminated invariant, if any.
std::optional<SolvedRelation> kernel_replacement(const PublishedRelation& rel, const ReductionResult& result);

}  // namespace cubinv
