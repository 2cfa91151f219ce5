#include "cubinv/catalog.hpp"

namespace cubinv {

InvariantOperands::InvariantOperands(const SymMatrix3& sigma_in, const SymVector3& m_in)
    : sigma(sigma_in),
      m(m_in),
      sbar(dbar(sigma_in)),
      sd(ddev(sigma_in)),
      sbar2(sbar * sbar),
      sbar2_bar(dbar(sbar2)),
      sbar2_d(ddev(sbar2)),
      mm_bar(dbar(outer(m_in))),
      mm_d(ddev(outer(m_in))) {
    if (!(*sigma_in.table() == *m_in.table())) {
        throw UsageError("stress and magnetization over different variable tables");
    }
}

namespace {

using Ops = InvariantOperands;

InvariantDef def(std::string name, std::string label, std::string formula, BiDegree b,
                 std::function<Polynomial(const Ops&)> recipe) {
    return {std::move(name), std::move(label), std::move(formula), b, std::move(recipe)};
}

}  // namespace

// Recipes follow the trace-of-products forms; where the tabulated formula is a
// double contraction of symmetric factors the two agree by trace cyclicity.
Catalog Catalog::build() {
    Catalog c;
    auto& d = c.defs_;
    d.push_back(def("I010", "\\operatorname{tr}\\boldsymbol{\\sigma}", "tr(sigma)", {0, 1},
                    [](const Ops& o) { return trace(o.sigma); }));
    d.push_back(def("I002", "I_{002}", "sigma^dbar : sigma^dbar", {0, 2},
                    [](const Ops& o) { return double_contract(o.sbar, o.sbar); }));
    d.push_back(def("I020", "I_{020}", "sigma^d : sigma^d", {0, 2},
                    [](const Ops& o) { return double_contract(o.sd, o.sd); }));
    d.push_back(def("I003", "I_{003}", "tr((sigma^dbar)^3)", {0, 3},
                    [](const Ops& o) { return trace(o.sbar2 * o.sbar); }));
    d.push_back(def("I012", "I_{012}", "(sigma^dbar)^2 : sigma^d", {0, 3},
                    [](const Ops& o) { return trace(o.sbar2 * o.sd); }));
    d.push_back(def("I030", "I_{030}", "tr((sigma^d)^3)", {0, 3},
                    [](const Ops& o) { return trace(o.sd * o.sd * o.sd); }));
    d.push_back(def("I004", "I_{004}", "((sigma^dbar)^2)^dbar : ((sigma^dbar)^2)^dbar", {0, 4},
                    [](const Ops& o) { return trace(o.sbar2_bar * o.sbar2_bar); }));
    d.push_back(def("I022", "I_{022}", "tr(sigma^dbar sigma^d sigma^dbar sigma^d)", {0, 4},
                    [](const Ops& o) { return trace(o.sbar * o.sd * o.sbar * o.sd); }));
    d.push_back(def("I014", "I_{014}", "(sigma^dbar ((sigma^dbar)^2)^dbar sigma^dbar) : sigma^d", {0, 5},
                    [](const Ops& o) { return trace(o.sbar * o.sbar2_bar * o.sbar * o.sd); }));
    d.push_back(def("I200", "I_{200}", "|M|^2", {2, 0}, [](const Ops& o) { return dot(o.m, o.m); }));
    d.push_back(def("I201", "I_{201}", "(M x M)^dbar : sigma^dbar", {2, 1},
                    [](const Ops& o) { return trace(o.mm_bar * o.sbar); }));
    d.push_back(def("I210", "I_{210}", "(M x M)^d : sigma^d", {2, 1},
                    [](const Ops& o) { return trace(o.mm_d * o.sd); }));
    d.push_back(def("I202a", "I_{202}^{a}", "(M x M)^d : (sigma^dbar)^2", {2, 2},
                    [](const Ops& o) { return trace(o.mm_d * o.sbar2); }));
    d.push_back(def("I202b", "I_{202}^{b}", "(M x M)^dbar : (sigma^dbar)^2", {2, 2},
                    [](const Ops& o) { return trace(o.mm_bar * o.sbar2_bar); }));
    d.push_back(def("I211", "I_{211}", "(M x M)^dbar : (sigma^dbar sigma^d)", {2, 2},
                    [](const Ops& o) { return trace(o.mm_bar * o.sbar * o.sd); }));
    d.push_back(def("I220", "I_{220}", "(M x M)^d : (sigma^d)^2", {2, 2},
                    [](const Ops& o) { return trace(o.mm_d * (o.sd * o.sd)); }));
    d.push_back(def("I203", "I_{203}", "(M x M)^dbar : (((sigma^dbar)^2)^dbar sigma^dbar)", {2, 3},
                    [](const Ops& o) { return trace(o.mm_bar * o.sbar2_bar * o.sbar); }));
    d.push_back(def("I212a", "I_{212}^{a}", "(M x M)^d : (((sigma^dbar)^2)^d sigma^d)", {2, 3},
                    [](const Ops& o) { return trace(o.mm_d * o.sbar2_d * o.sd); }));
    d.push_back(def("I212b", "I_{212}^{b}", "(M x M)^dbar : (((sigma^dbar)^2)^dbar sigma^d)", {2, 3},
                    [](const Ops& o) { return trace(o.mm_bar * o.sbar2_bar * o.sd); }));
    d.push_back(def("I221", "I_{221}", "(M x M)^dbar : (sigma^d sigma^dbar sigma^d)", {2, 3},
                    [](const Ops& o) { return trace(o.mm_bar * o.sd * o.sbar * o.sd); }));
    d.push_back(def("I204", "I_{204}", "(M x M)^d : (sigma^dbar ((sigma^dbar)^2)^dbar sigma^dbar)", {2, 4},
                    [](const Ops& o) { return trace(o.mm_d * o.sbar * o.sbar2_bar * o.sbar); }));
    d.push_back(def("I213", "I_{213}", "(M x M)^dbar : (((sigma^dbar)^2)^d sigma^dbar sigma^d)", {2, 4},
                    [](const Ops& o) { return trace(o.mm_bar * o.sbar2_d * o.sbar * o.sd); }));
    d.push_back(def("I222", "I_{222}", "(M x M)^dbar : (sigma^d ((sigma^dbar)^2)^dbar sigma^d)", {2, 4},
                    [](const Ops& o) { return trace(o.mm_bar * o.sd * o.sbar2_bar * o.sd); }));
    d.push_back(def("I400", "I_{400}", "(M x M)^dbar : (M x M)^dbar", {4, 0},
                    [](const Ops& o) { return double_contract(o.mm_bar, o.mm_bar); }));
    d.push_back(def("I401", "I_{401}", "tr((M x M)^dbar sigma^dbar (M x M)^dbar)", {4, 1},
                    [](const Ops& o) { return trace(o.mm_bar * o.sbar * o.mm_bar); }));
    d.push_back(def("I410", "I_{410}", "tr((M x M)^dbar sigma^d (M x M)^dbar)", {4, 1},
                    [](const Ops& o) { return trace(o.mm_bar * o.sd * o.mm_bar); }));
    d.push_back(def("I402", "I_{402}", "tr((M x M)^dbar ((sigma^dbar)^2)^dbar (M x M)^dbar)", {4, 2},
                    [](const Ops& o) { return trace(o.mm_bar * o.sbar2_bar * o.mm_bar); }));
    d.push_back(def("I411", "I_{411}", "tr((M x M)^dbar sigma^d sigma^dbar (M x M)^dbar)", {4, 2},
                    [](const Ops& o) { return trace(o.mm_bar * o.sd * o.sbar * o.mm_bar); }));
    d.push_back(def("I600", "I_{600}", "tr(((M x M)^dbar)^3)", {6, 0},
                    [](const Ops& o) { return trace(o.mm_bar * o.mm_bar * o.mm_bar); }));
    d.push_back(def("I601", "I_{601}", "tr((M x M)^d (M x M)^dbar (M x M)^d sigma^dbar)", {6, 1},
                    [](const Ops& o) { return trace(o.mm_d * o.mm_bar * o.mm_d * o.sbar); }));
    return c;
}

const InvariantDef& Catalog::find(std::string_view name) const {
    return defs_[index_of(name)];
}

std::size_t Catalog::index_of(std::string_view name) const {
    for (std::size_t i = 0; i < defs_.size(); ++i) {
        if (defs_[i].name == name) return i;
    }
    throw UsageError("unknown invariant '" + std::string(name) + "'");
}

std::vector<std::string> Catalog::names() const {
    std::vector<std::string> out;
    out.reserve(defs_.size());
    for (const auto& d : defs_) out.push_back(d.name);
    return out;
}

Polynomial evaluate_invariant(const InvariantDef& def, const SymMatrix3& sigma, const SymVector3& m) {
    return def.recipe(InvariantOperands(sigma, m));
}

std::vector<NamedPolynomial> evaluate_all(const Catalog& catalog, const SymMatrix3& sigma, const SymVector3& m) {
    const InvariantOperands ops(sigma, m);
    std::vector<NamedPolynomial> out;
    out.reserve(catalog.size());
    for (const auto& d : catalog.defs()) out.push_back({d.name, d.recipe(ops)});
    return out;
}

GenericState generic_state() {
    auto table = VarTable::make({{"m1", VarKind::Magnetization},
                                 {"m2", VarKind::Magnetization},
                                 {"m3", VarKind::Magnetization},
                                 {"s11", VarKind::Stress},
                                 {"s22", VarKind::Stress},
                                 {"s33", VarKind::Stress},
                                 {"s12", VarKind::Stress},
                                 {"s13", VarKind::Stress},
                                 {"s23", VarKind::Stress}});
    auto v = [&](const char* n) { return Polynomial::variable(table, n); };
    SymMatrix3 sigma(table, {v("s11"), v("s12"), v("s13"), v("s12"), v("s22"), v("s23"), v("s13"), v("s23"),
                             v("s33")});
    SymVector3 m(v("m1"), v("m2"), v("m3"));
    return {table, std::move(sigma), std::move(m)};
}

}  // namespace cubinv
