#pragma once

#include "cubinv/restriction.hpp"

#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace cubinv {

/// A relation at some bi-degree fails to substitute to zero. Indicates a bug,
/// never a property of the input.
class IntegrityError : public std::logic_error {
public:
    using std::logic_error::logic_error;
};

/// A selection policy asks for a generator set the linear algebra rules out.
class PolicyConflict : public std::runtime_error {
public:
    PolicyConflict(BiDegree where, const std::string& what)
        : std::runtime_error("bi-degree " + where.to_string() + ": " + what), bidegree_(where) {}
    BiDegree bidegree() const { return bidegree_; }

private:
    BiDegree bidegree_;
};

/// Formal product of restricted invariants, factors kept sorted by name.
class FreeProduct {
public:
    FreeProduct() = default;
    explicit FreeProduct(std::vector<std::string> factors);
    static FreeProduct single(std::string name) { return FreeProduct({std::move(name)}); }

    const std::vector<std::string>& factors() const { return factors_; }
    std::size_t size() const { return factors_.size(); }
    bool reducible() const { return factors_.size() >= 2; }

    /// "I002*I010^2"
    std::string to_string() const;
    /// LaTeX with I010 rendered as tr(sigma).
    std::string to_latex() const;

    friend auto operator<=>(const FreeProduct&, const FreeProduct&) = default;
    friend bool operator==(const FreeProduct&, const FreeProduct&) = default;

private:
    std::vector<std::string> factors_;
};

/// sum_j coefficient_j * product_j = 0 among restricted invariants.
struct Relation {
    BiDegree bidegree;
    std::map<FreeProduct, Rational> terms;
    std::optional<std::string> solved_for;

    /// "6*I012 - I002*I010 = 0", solved-for term first.
    std::string to_string() const;
};

enum class SelectionPolicy { Paper, TableOrder, ReverseTableOrder };

const char* to_string(SelectionPolicy p);
std::optional<SelectionPolicy> parse_policy(std::string_view text);

struct Bounds {
    int d_max = 7;
    int alpha_max = 6;

    bool contains(BiDegree b) const { return b.total() <= d_max && b.alpha <= alpha_max; }
};

struct BidegreeReport {
    BiDegree bidegree;
    std::vector<std::string> invariants;  // restricted invariants of this bi-degree
    std::size_t reducibles = 0;
    std::size_t n = 0;           // columns of the coefficient matrix
    std::size_t rank = 0;
    std::size_t kernel_dim = 0;  // n - rank
    std::vector<std::string> kept;
    std::vector<std::string> eliminated;
    std::size_t syzygies = 0;    // relations among reducible products only
    bool beyond_bounds = false;  // not examined; its invariants are kept unreduced
};

struct ReductionResult {
    std::string substitution;
    SelectionPolicy policy = SelectionPolicy::Paper;
    Bounds bounds;
    std::vector<std::string> generators;  // catalog order
    std::vector<Relation> relations;      // one per eliminated invariant, ascending bi-degree
    std::vector<Relation> syzygies;       // pure product relations
    std::vector<std::string> vanished;
    std::vector<BidegreeReport> per_bidegree;
};

struct ReduceOptions {
    Bounds bounds;
    SelectionPolicy policy = SelectionPolicy::Paper;
    /// Required for SelectionPolicy::Paper.
    std::optional<std::vector<std::string>> keep;
    /// Also visit bi-degrees inside the bounds that hold no restricted
    /// invariant, collecting their pure syzygies.
    bool all_bidegrees = false;
};

/// Bi-degree of every nonzero restricted invariant (catalog order).
std::vector<std::pair<std::string, BiDegree>> entry_bidegrees(const RestrictedBasis& rb);

/// Groups the nonzero restricted invariants by bi-degree, ascending in degree-lexicographic order.
std::vector<std::pair<BiDegree, std::vector<std::string>>> partition_bidegrees(const RestrictedBasis& rb);

struct ProductTerm {
    FreeProduct product;
    Polynomial poly;
};

/// All products of at least two nonzero restricted invariants whose
/// bi-degrees sum to target, sorted by factor names.
std::vector<ProductTerm> reducible_products(const RestrictedBasis& rb, BiDegree target);

/// Canonical kernel relations among [reducible products, invariants of bi-degree target].
std::vector<Relation> relations_at(const RestrictedBasis& rb, BiDegree target);

/// The published generator list of a built-in fiber.
std::vector<std::string> paper_generators(Fiber fiber);

ReductionResult reduce(const RestrictedBasis& rb, const ReduceOptions& options);

/// Relation written as `name = prefactor * (sum of integer-coefficient terms)`.
struct SolvedRelation {
    std::string name;
    BiDegree bidegree;
    Rational prefactor;                       // 1 / (coefficient of name)
    std::vector<std::pair<FreeProduct, Rational>> rhs;  // integer coefficients

    /// "I030 = 1/18*(9*I010*I020 - 2*I010^3)"; the right side parses as an
    /// expression over invariant names.
    std::string to_string() const;
    std::string rhs_string() const;
    std::string to_latex() const;
};

SolvedRelation solve(const Relation& relation);
std::vector<SolvedRelation> solve_relations(const ReductionResult& result);

/// Sum of coefficient * product of restricted polynomials.
Polynomial relation_residual(const Relation& relation, const RestrictedBasis& rb);

struct UnionReport {
    std::map<Fiber, std::vector<std::string>> generators;
    bool theta_in_alpha = false;
    bool gamma_in_alpha = false;
    bool gamma_in_theta = false;
    std::vector<std::string> union_names;  // catalog order
    bool holds() const { return theta_in_alpha && gamma_in_alpha; }
};

UnionReport check_union_property(const std::map<Fiber, ReductionResult>& results);

std::string invariant_latex(std::string_view name);

}  // namespace cubinv
