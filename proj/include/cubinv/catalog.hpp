#pragma once

#include "cubinv/tensor3.hpp"

#include <functional>
#include <string>
#include <vector>

namespace cubinv {

/// Shared intermediate tensors of one (sigma, M) state, built once per evaluation.
struct InvariantOperands {
    InvariantOperands(const SymMatrix3& sigma, const SymVector3& m);

    SymMatrix3 sigma;
    SymVector3 m;
    SymMatrix3 sbar;       // sigma^dbar
    SymMatrix3 sd;         // sigma^d
    SymMatrix3 sbar2;      // (sigma^dbar)^2
    SymMatrix3 sbar2_bar;  // ((sigma^dbar)^2)^dbar
    SymMatrix3 sbar2_d;    // ((sigma^dbar)^2)^d
    SymMatrix3 mm_bar;     // (M x M)^dbar
    SymMatrix3 mm_d;       // (M x M)^d
};

struct InvariantDef {
    std::string name;     // I010, I002, ..., I202a, I202b, ...
    std::string label;    // tri-graded notation, LaTeX
    std::string formula;  // human-readable tensorial recipe
    BiDegree bidegree3d;
    std::function<Polynomial(const InvariantOperands&)> recipe;
};

/// The 30 generators of the cubic integrity basis for (M, sigma), in table order.
class Catalog {
public:
    static Catalog build();

    const std::vector<InvariantDef>& defs() const { return defs_; }
    std::size_t size() const { return defs_.size(); }
    const InvariantDef& operator[](std::size_t i) const { return defs_[i]; }
    /// Throws UsageError for an unknown name.
    const InvariantDef& find(std::string_view name) const;
    std::size_t index_of(std::string_view name) const;
    std::vector<std::string> names() const;

private:
    std::vector<InvariantDef> defs_;
};

inline Catalog build_catalog() { return Catalog::build(); }

Polynomial evaluate_invariant(const InvariantDef& def, const SymMatrix3& sigma, const SymVector3& m);

struct NamedPolynomial {
    std::string name;
    Polynomial poly;
};

/// Evaluates every catalog entry, preserving catalog order.
std::vector<NamedPolynomial> evaluate_all(const Catalog& catalog, const SymMatrix3& sigma, const SymVector3& m);

/// Unconstrained 3D state: M = (m1, m2, m3), sigma with independent s11, s22, s33, s12, s13, s23.
struct GenericState {
    VarTablePtr table;
    SymMatrix3 sigma;
    SymVector3 m;
};

GenericState generic_state();

}  // namespace cubinv
