#pragma once

#include "cubinv/catalog.hpp"

#include <array>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace cubinv {

enum class Fiber { Theta, AlphaPrime, Gamma };

const char* to_string(Fiber f);
std::optional<Fiber> parse_fiber(std::string_view text);
constexpr std::array<Fiber, 3> kAllFibers = {Fiber::Theta, Fiber::AlphaPrime, Fiber::Gamma};

class SubstitutionError : public UsageError {
public:
    using UsageError::UsageError;
};

/// An in-plane parameterization of (sigma, M) by restricted variables.
struct Substitution {
    std::string name;
    VarTablePtr table;
    SymMatrix3 sigma;
    SymVector3 m;
    /// Unnormalized sheet normal; set for the built-in fibers.
    std::optional<std::array<Rational, 3>> normal;
    /// Generators to keep under the `paper` selection policy, if the source provides them.
    std::optional<std::vector<std::string>> keep;

    /// Throws SubstitutionError on a non-symmetric sigma or an entry of the wrong bi-degree.
    void validate() const;
};

/// Restricted variable table (m1, m2, s1, s2, s3).
VarTablePtr restricted_table();

Substitution fiber_substitution(Fiber fiber);

/// Parses the JSON substitution format (see docs/substitution-format.md).
Substitution parse_substitution(std::string_view json_text);
/// Reads and parses a substitution file; throws SubstitutionError if unreadable.
Substitution custom_substitution(const std::string& path);
/// Canonical JSON serialization, accepted back by parse_substitution.
std::string substitution_to_json(const Substitution& sub);

struct RestrictedBasis {
    std::string substitution;
    /// Nonzero restricted invariants in catalog order.
    std::vector<NamedPolynomial> entries;
    /// Names whose restriction is the zero polynomial, in catalog order.
    std::vector<std::string> vanished;

    const Polynomial* find(std::string_view name) const;
    const VarTablePtr& table() const { return table_; }
    VarTablePtr table_;
};

RestrictedBasis restrict_basis(const Catalog& catalog, const Substitution& sub);

}  // namespace cubinv
