#include "cubinv/reduction.hpp"

#include <algorithm>
#include <set>

namespace cubinv {

FreeProduct::FreeProduct(std::vector<std::string> factors) : factors_(std::move(factors)) {
    std::sort(factors_.begin(), factors_.end());
}

std::string FreeProduct::to_string() const {
    std::string out;
    for (std::size_t i = 0; i < factors_.size();) {
        std::size_t j = i;
        while (j < factors_.size() && factors_[j] == factors_[i]) ++j;
        if (!out.empty()) out += '*';
        out += factors_[i];
        if (j - i > 1) out += "^" + std::to_string(j - i);
        i = j;
    }
    return out;
}

std::string invariant_latex(std::string_view name) {
    if (name == "I010") return "\\operatorname{tr}\\boldsymbol{\\sigma}";
    if (name.size() >= 4 && name[0] == 'I') {
        std::string out = "I_{" + std::string(name.substr(1, 3)) + "}";
        if (name.size() > 4) out += "^{" + std::string(name.substr(4)) + "}";
        return out;
    }
    return std::string(name);
}

std::string FreeProduct::to_latex() const {
    std::string out;
    for (std::size_t i = 0; i < factors_.size();) {
        std::size_t j = i;
        while (j < factors_.size() && factors_[j] == factors_[i]) ++j;
        if (!out.empty()) out += ' ';
        const std::string sym = invariant_latex(factors_[i]);
        if (j - i > 1) {
            out += factors_[i] == "I010" || factors_[i].size() > 4 ? "(" + sym + ")" : sym;
            out += "^{" + std::to_string(j - i) + "}";
        } else {
            out += sym;
        }
        i = j;
    }
    return out;
}

namespace {

std::string coefficient_prefix(const Rational& magnitude) {
    return magnitude.is_one() ? std::string() : magnitude.to_string() + "*";
}

// "a*P - b*Q + ..." with the first sign folded into the leading term.
std::string signed_sum(const std::vector<std::pair<FreeProduct, Rational>>& terms) {
    std::string out;
    for (std::size_t k = 0; k < terms.size(); ++k) {
        const auto& [prod, c] = terms[k];
        if (k == 0) {
            if (c.sign() < 0) out += "-";
        } else {
            out += c.sign() < 0 ? " - " : " + ";
        }
        out += coefficient_prefix(c.abs()) + prod.to_string();
    }
    return out.empty() ? "0" : out;
}

}  // namespace

std::string Relation::to_string() const {
    std::vector<std::pair<FreeProduct, Rational>> ordered;
    if (solved_for) {
        const FreeProduct lead = FreeProduct::single(*solved_for);
        ordered.emplace_back(lead, terms.at(lead));
    }
    for (const auto& [p, c] : terms) {
        if (solved_for && p.size() == 1 && p.factors()[0] == *solved_for) continue;
        ordered.emplace_back(p, c);
    }
    return signed_sum(ordered) + " = 0";
}

const char* to_string(SelectionPolicy p) {
    switch (p) {
        case SelectionPolicy::Paper: return "paper";
        case SelectionPolicy::TableOrder: return "table-order";
        case SelectionPolicy::ReverseTableOrder: return "reverse-table-order";
    }
    return "?";
}

std::optional<SelectionPolicy> parse_policy(std::string_view text) {
    if (text == "paper") return SelectionPolicy::Paper;
    if (text == "table-order") return SelectionPolicy::TableOrder;
    if (text == "reverse-table-order") return SelectionPolicy::ReverseTableOrder;
    return std::nullopt;
}

std::vector<std::pair<std::string, BiDegree>> entry_bidegrees(const RestrictedBasis& rb) {
    std::vector<std::pair<std::string, BiDegree>> out;
    out.reserve(rb.entries.size());
    for (const auto& e : rb.entries) {
        BiDegree b;
        try {
            b = e.poly.bidegree();
        } catch (const std::domain_error& err) {
            throw UsageError("restricted invariant " + e.name + ": " + err.what());
        }
        if (b.total() == 0) throw UsageError("restricted invariant " + e.name + " is a nonzero constant");
        out.emplace_back(e.name, b);
    }
    return out;
}

std::vector<std::pair<BiDegree, std::vector<std::string>>> partition_bidegrees(const RestrictedBasis& rb) {
    std::map<BiDegree, std::vector<std::string>> groups;
    for (auto& [name, b] : entry_bidegrees(rb)) groups[b].push_back(name);
    return {groups.begin(), groups.end()};
}

namespace {

struct Factor {
    std::string name;
    BiDegree bidegree;
    const Polynomial* poly;
};

std::vector<Factor> sorted_factors(const RestrictedBasis& rb) {
    std::vector<Factor> out;
    const auto degrees = entry_bidegrees(rb);
    for (std::size_t i = 0; i < degrees.size(); ++i) {
        out.push_back({degrees[i].first, degrees[i].second, &rb.entries[i].poly});
    }
    std::sort(out.begin(), out.end(), [](const Factor& a, const Factor& b) { return a.name < b.name; });
    return out;
}

void enumerate_products(const std::vector<Factor>& factors, std::size_t start, BiDegree remaining,
                        std::vector<std::string>& names, const Polynomial& acc, std::vector<ProductTerm>& out) {
    if (remaining.alpha == 0 && remaining.beta == 0) {
        if (names.size() >= 2) out.push_back({FreeProduct(names), acc});
        return;
    }
    for (std::size_t i = start; i < factors.size(); ++i) {
        const BiDegree b = factors[i].bidegree;
        if (b.alpha > remaining.alpha || b.beta > remaining.beta) continue;
        // A lone factor equal to the whole target is the invariant itself, not a product.
        if (names.empty() && b == remaining) continue;
        names.push_back(factors[i].name);
        enumerate_products(factors, i, {remaining.alpha - b.alpha, remaining.beta - b.beta}, names,
                           acc * *factors[i].poly, out);
        names.pop_back();
    }
}

Polynomial product_poly(const FreeProduct& p, const RestrictedBasis& rb) {
    Polynomial acc = Polynomial::constant(rb.table(), Rational(1));
    for (const auto& f : p.factors()) {
        const Polynomial* poly = rb.find(f);
        if (!poly) throw UsageError("relation refers to '" + f + "', which is not a nonzero restricted invariant");
        acc = acc * *poly;
    }
    return acc;
}

}  // namespace

std::vector<ProductTerm> reducible_products(const RestrictedBasis& rb, BiDegree target) {
    std::vector<ProductTerm> out;
    const auto factors = sorted_factors(rb);
    std::vector<std::string> names;
    enumerate_products(factors, 0, target, names, Polynomial::constant(rb.table(), Rational(1)), out);
    std::sort(out.begin(), out.end(), [](const ProductTerm& a, const ProductTerm& b) { return a.product < b.product; });
    return out;
}

Polynomial relation_residual(const Relation& relation, const RestrictedBasis& rb) {
    Polynomial acc(rb.table());
    for (const auto& [p, c] : relation.terms) acc += product_poly(p, rb).scaled(c);
    return acc;
}

namespace {

struct Column {
    FreeProduct product;
    const Polynomial* poly;
    bool invariant;  // single restricted invariant of the target bi-degree
};

struct Elimination {
    RatMatrix reduced;
    std::vector<std::size_t> pivots;
    std::vector<bool> is_pivot;
};

Elimination eliminate(const std::vector<Column>& cols) {
    std::vector<Polynomial> polys;
    polys.reserve(cols.size());
    for (const auto& c : cols) polys.push_back(*c.poly);
    Elimination e;
    e.reduced = rref(coefficient_matrix(polys).a);
    e.pivots = pivot_columns(e.reduced);
    e.is_pivot.assign(cols.size(), false);
    for (auto p : e.pivots) e.is_pivot[p] = true;
    return e;
}

// Kernel vector of the free column `free`, expressed through the pivot columns.
Relation relation_for_free_column(const std::vector<Column>& cols, const Elimination& e, std::size_t free,
                                  BiDegree target) {
    RatVector v(cols.size());
    v[free] = 1;
    for (std::size_t r = 0; r < e.pivots.size(); ++r) v[e.pivots[r]] = -e.reduced(r, free);
    v = primitive(v);
    Relation rel;
    rel.bidegree = target;
    if (cols[free].invariant) {
        rel.solved_for = cols[free].product.factors()[0];
        if (v[free].sign() < 0) {
            for (auto& x : v) x = -x;
        }
    }
    for (std::size_t k = 0; k < cols.size(); ++k) {
        if (!v[k].is_zero()) rel.terms.emplace(cols[k].product, v[k]);
    }
    return rel;
}

void check_relation(const Relation& rel, const RestrictedBasis& rb) {
    const Polynomial residual = relation_residual(rel, rb);
    if (!residual.is_zero()) {
        throw IntegrityError("relation " + rel.to_string() + " leaves residual " + residual.to_string());
    }
}

}  // namespace

std::vector<Relation> relations_at(const RestrictedBasis& rb, BiDegree target) {
    const auto products = reducible_products(rb, target);
    std::vector<Column> cols;
    for (const auto& pt : products) cols.push_back({pt.product, &pt.poly, false});
    for (const auto& e : rb.entries) {
        if (e.poly.bidegree() == target) cols.push_back({FreeProduct::single(e.name), &e.poly, true});
    }
    if (cols.empty()) return {};
    const Elimination elim = eliminate(cols);
    std::vector<Relation> out;
    for (std::size_t k = 0; k < cols.size(); ++k) {
        if (elim.is_pivot[k]) continue;
        Relation rel = relation_for_free_column(cols, elim, k, target);
        check_relation(rel, rb);
        out.push_back(std::move(rel));
    }
    return out;
}

std::vector<std::string> paper_generators(Fiber fiber) {
    switch (fiber) {
        case Fiber::Theta: return {"I010", "I002", "I020", "I200", "I201", "I210", "I400"};
        case Fiber::AlphaPrime:
            return {"I010", "I002", "I020", "I003", "I030", "I200", "I201", "I210",
                    "I202a", "I211", "I220", "I400", "I401", "I410", "I600"};
        case Fiber::Gamma: return {"I010", "I020", "I030", "I200", "I210", "I220", "I410", "I600"};
    }
    return {};
}

ReductionResult reduce(const RestrictedBasis& rb, const ReduceOptions& options) {
    ReductionResult result;
    result.substitution = rb.substitution;
    result.policy = options.policy;
    result.bounds = options.bounds;
    result.vanished = rb.vanished;

    std::set<std::string> keep;
    if (options.policy == SelectionPolicy::Paper) {
        if (!options.keep) {
            throw UsageError("policy 'paper' needs a generator list for substitution '" + rb.substitution + "'");
        }
        for (const auto& k : *options.keep) {
            if (!rb.find(k)) {
                throw UsageError("policy 'paper' keeps '" + k + "', which vanishes or is unknown under '" +
                                 rb.substitution + "'");
            }
            keep.insert(k);
        }
    }

    const auto degrees = entry_bidegrees(rb);
    std::map<BiDegree, std::vector<std::size_t>> groups;  // bi-degree -> entry indices
    for (std::size_t i = 0; i < degrees.size(); ++i) groups[degrees[i].second].push_back(i);
    if (options.all_bidegrees) {
        for (int total = 1; total <= options.bounds.d_max; ++total) {
            for (int alpha = 0; alpha <= std::min(total, options.bounds.alpha_max); ++alpha) {
                groups.try_emplace(BiDegree{alpha, total - alpha});
            }
        }
    }

    std::set<std::string> generators;
    std::set<std::string> eliminated_all;

    for (const auto& [target, members] : groups) {
        BidegreeReport report;
        report.bidegree = target;
        for (auto i : members) report.invariants.push_back(degrees[i].first);

        if (!options.bounds.contains(target)) {
            report.beyond_bounds = true;
            report.kept = report.invariants;
            generators.insert(report.kept.begin(), report.kept.end());
            result.per_bidegree.push_back(std::move(report));
            continue;
        }

        const auto products = reducible_products(rb, target);
        if (products.empty() && members.empty()) continue;

        // Column order fixes which columns become pivots: products of
        // generators first, then the remaining products, then the invariants
        // of this bi-degree in policy order.
        std::vector<Column> cols;
        for (const auto& pt : products) {
            const bool all_gen = std::all_of(pt.product.factors().begin(), pt.product.factors().end(),
                                             [&](const std::string& f) { return generators.count(f) > 0; });
            if (all_gen) cols.push_back({pt.product, &pt.poly, false});
        }
        for (const auto& pt : products) {
            const bool all_gen = std::all_of(pt.product.factors().begin(), pt.product.factors().end(),
                                             [&](const std::string& f) { return generators.count(f) > 0; });
            if (!all_gen) cols.push_back({pt.product, &pt.poly, false});
        }
        const std::size_t n_products = cols.size();

        std::vector<std::size_t> order = members;
        switch (options.policy) {
            case SelectionPolicy::Paper:
                std::stable_partition(order.begin(), order.end(),
                                      [&](std::size_t i) { return keep.count(degrees[i].first) > 0; });
                break;
            case SelectionPolicy::TableOrder: break;
            case SelectionPolicy::ReverseTableOrder: std::reverse(order.begin(), order.end()); break;
        }
        for (auto i : order) cols.push_back({FreeProduct::single(degrees[i].first), &rb.entries[i].poly, true});

        const Elimination elim = eliminate(cols);
        const std::size_t product_rank = static_cast<std::size_t>(std::count_if(
            elim.pivots.begin(), elim.pivots.end(), [&](std::size_t p) { return p < n_products; }));

        report.reducibles = n_products;
        report.n = cols.size();
        report.rank = elim.pivots.size();
        report.kernel_dim = report.n - report.rank;
        report.syzygies = n_products - product_rank;

        for (std::size_t k = n_products; k < cols.size(); ++k) {
            const std::string& name = cols[k].product.factors()[0];
            if (options.policy == SelectionPolicy::Paper) {
                const bool wanted = keep.count(name) > 0;
                if (wanted && !elim.is_pivot[k]) {
                    throw PolicyConflict(target, "keeping " + name + " exceeds the rank: it is spanned by "
                                                 "reducible products and the other kept invariants");
                }
                if (!wanted && elim.is_pivot[k]) {
                    throw PolicyConflict(target, "the generator list does not span: " + name +
                                                 " is independent of the kept invariants and reducible products");
                }
            }
            (elim.is_pivot[k] ? report.kept : report.eliminated).push_back(name);
        }

        for (std::size_t k = 0; k < cols.size(); ++k) {
            if (elim.is_pivot[k]) continue;
            Relation rel = relation_for_free_column(cols, elim, k, target);
            check_relation(rel, rb);
            (cols[k].invariant ? result.relations : result.syzygies).push_back(std::move(rel));
        }

        // Report lists follow catalog order.
        auto catalog_sort = [&](std::vector<std::string>& v) {
            std::sort(v.begin(), v.end(), [&](const std::string& a, const std::string& b) {
                auto pos = [&](const std::string& s) {
                    for (std::size_t i = 0; i < degrees.size(); ++i) {
                        if (degrees[i].first == s) return i;
                    }
                    return degrees.size();
                };
                return pos(a) < pos(b);
            });
        };
        catalog_sort(report.kept);
        catalog_sort(report.eliminated);
        generators.insert(report.kept.begin(), report.kept.end());
        eliminated_all.insert(report.eliminated.begin(), report.eliminated.end());
        result.per_bidegree.push_back(std::move(report));
    }

    for (const auto& [name, b] : degrees) {
        if (generators.count(name)) result.generators.push_back(name);
    }
    if (result.generators.size() + eliminated_all.size() + result.vanished.size() !=
        rb.entries.size() + rb.vanished.size()) {
        throw IntegrityError("reduction of '" + rb.substitution + "' does not partition the invariants");
    }
    return result;
}

SolvedRelation solve(const Relation& relation) {
    if (!relation.solved_for) throw UsageError("relation " + relation.to_string() + " is not solved for an invariant");
    SolvedRelation s;
    s.name = *relation.solved_for;
    s.bidegree = relation.bidegree;
    const FreeProduct lead = FreeProduct::single(s.name);
    const Rational c = relation.terms.at(lead);
    s.prefactor = c.inverse();
    for (const auto& [p, v] : relation.terms) {
        if (p == lead) continue;
        s.rhs.emplace_back(p, -v);
    }
    // Same-bi-degree invariants ahead of products.
    std::stable_sort(s.rhs.begin(), s.rhs.end(),
                     [](const auto& a, const auto& b) { return a.first.size() < b.first.size(); });
    return s;
}

std::vector<SolvedRelation> solve_relations(const ReductionResult& result) {
    std::vector<SolvedRelation> out;
    out.reserve(result.relations.size());
    for (const auto& r : result.relations) out.push_back(solve(r));
    return out;
}

std::string SolvedRelation::rhs_string() const {
    if (rhs.empty()) return "0";
    if (prefactor.is_one()) return signed_sum(rhs);
    if (rhs.size() == 1) {
        const Rational c = prefactor * rhs[0].second;
        return (c.sign() < 0 ? "-" : "") + coefficient_prefix(c.abs()) + rhs[0].first.to_string();
    }
    return prefactor.to_string() + "*(" + signed_sum(rhs) + ")";
}

std::string SolvedRelation::to_string() const { return name + " = " + rhs_string(); }

std::string SolvedRelation::to_latex() const {
    auto latex_rational = [](const Rational& a) {
        if (a.is_integer()) return a.to_string();
        return "\\frac{" + a.num().get_str() + "}{" + a.den().get_str() + "}";
    };
    auto sum = [&](const std::vector<std::pair<FreeProduct, Rational>>& terms, const Rational& scale) {
        std::string out;
        for (std::size_t k = 0; k < terms.size(); ++k) {
            const Rational c = terms[k].second * scale;
            if (k == 0) {
                if (c.sign() < 0) out += "-";
            } else {
                out += c.sign() < 0 ? " - " : " + ";
            }
            if (!c.abs().is_one()) out += latex_rational(c.abs()) + " ";
            out += terms[k].first.to_latex();
        }
        return out;
    };
    std::string body;
    if (rhs.empty()) {
        body = "0";
    } else if (prefactor.is_one() || rhs.size() == 1) {
        body = sum(rhs, prefactor);
    } else {
        body = latex_rational(prefactor) + "\\left(" + sum(rhs, Rational(1)) + "\\right)";
    }
    return invariant_latex(name) + " = " + body;
}

UnionReport check_union_property(const std::map<Fiber, ReductionResult>& results) {
    UnionReport report;
    for (const auto& [fiber, r] : results) report.generators[fiber] = r.generators;
    auto as_set = [&](Fiber f) {
        const auto it = report.generators.find(f);
        if (it == report.generators.end()) throw UsageError(std::string("union check needs fiber ") + to_string(f));
        return std::set<std::string>(it->second.begin(), it->second.end());
    };
    const auto theta = as_set(Fiber::Theta);
    const auto alpha = as_set(Fiber::AlphaPrime);
    const auto gamma = as_set(Fiber::Gamma);
    auto subset = [](const std::set<std::string>& a, const std::set<std::string>& b) {
        return std::includes(b.begin(), b.end(), a.begin(), a.end());
    };
    report.theta_in_alpha = subset(theta, alpha);
    report.gamma_in_alpha = subset(gamma, alpha);
    report.gamma_in_theta = subset(gamma, theta);
    std::set<std::string> all = theta;
    all.insert(alpha.begin(), alpha.end());
    all.insert(gamma.begin(), gamma.end());
    for (const auto& name : Catalog::build().names()) {
        if (all.count(name)) report.union_names.push_back(name);
    }
    return report;
}

}  // namespace cubinv
