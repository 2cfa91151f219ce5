#include "cubinv/verify.hpp"

#include "cubinv/parser.hpp"

#include <algorithm>
#include <fstream>
#include <functional>
#include <random>
#include <sstream>

namespace cubinv {

extern const char* const kPublishedRelationsText;

namespace {

std::string trim(std::string_view s) {
    const auto b = s.find_first_not_of(" \t\r");
    if (b == std::string_view::npos) return {};
    const auto e = s.find_last_not_of(" \t\r");
    return std::string(s.substr(b, e - b + 1));
}

}  // namespace

std::vector<PublishedRelation> parse_published_relations(std::string_view text) {
    std::vector<PublishedRelation> out;
    std::size_t line_no = 0;
    std::size_t start = 0;
    while (start <= text.size()) {
        auto end = text.find('\n', start);
        if (end == std::string_view::npos) end = text.size();
        const std::string line = trim(text.substr(start, end - start));
        start = end + 1;
        ++line_no;
        if (line.empty() || line[0] == '#') continue;

        std::vector<std::string> fields;
        std::size_t p = 0;
        while (true) {
            const auto bar = line.find('|', p);
            fields.push_back(trim(std::string_view(line).substr(p, bar == std::string::npos ? bar : bar - p)));
            if (bar == std::string::npos) break;
            p = bar + 1;
        }
        if (fields.size() != 4) {
            throw UsageError("published relations, line " + std::to_string(line_no) +
                             ": expected 'fiber | lhs | rhs | tag'");
        }
        for (const auto& f : fields) {
            if (f.empty()) throw UsageError("published relations, line " + std::to_string(line_no) + ": empty field");
        }
        out.push_back({fields[0], fields[1], fields[2], fields[3]});
    }
    return out;
}

std::vector<PublishedRelation> load_published_relations(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw UsageError("cannot read published relations file '" + path + "'");
    std::ostringstream buf;
    buf << in.rdbuf();
    return parse_published_relations(buf.str());
}

std::vector<PublishedRelation> builtin_published_relations() {
    return parse_published_relations(kPublishedRelationsText);
}

std::vector<PublishedRelation> published_for(const std::vector<PublishedRelation>& all, std::string_view fiber) {
    std::vector<PublishedRelation> out;
    for (const auto& r : all) {
        if (r.fiber == fiber) out.push_back(r);
    }
    return out;
}

VarTablePtr invariant_symbols() {
    static const VarTablePtr table = [] {
        std::vector<VarTable::Var> vars;
        for (const auto& name : build_catalog().names()) vars.push_back({name, VarKind::Formal});
        return VarTable::make(std::move(vars));
    }();
    return table;
}

Polynomial published_polynomial(const PublishedRelation& rel) {
    const VarTablePtr table = invariant_symbols();
    return parse(rel.lhs, table) - parse(rel.rhs, table);
}

namespace {

// Image of every invariant symbol in the restricted ring; vanished names map to zero.
std::vector<Polynomial> symbol_images(const RestrictedBasis& rb) {
    const VarTablePtr symbols = invariant_symbols();
    std::vector<Polynomial> images;
    images.reserve(symbols->size());
    for (const auto& v : symbols->vars()) {
        const Polynomial* p = rb.find(v.name);
        images.push_back(p ? *p : Polynomial(rb.table()));
    }
    return images;
}

}  // namespace

PublishedCheck verify_published(const PublishedRelation& rel, const RestrictedBasis& rb) {
    const Polynomial residual = published_polynomial(rel).substitute(symbol_images(rb));
    return {residual.is_zero(), residual};
}

namespace {

struct Member {
    std::string name;
    BiDegree bidegree;
    const Polynomial* poly;
};

// Every product of one or more members (with repetition) of the given bi-degree.
std::vector<Polynomial> products_of(const std::vector<Member>& members, BiDegree target, const VarTablePtr& table) {
    std::vector<Polynomial> out;
    std::function<void(std::size_t, BiDegree, const Polynomial&, bool)> walk =
        [&](std::size_t from, BiDegree left, const Polynomial& acc, bool nonempty) {
            if (left.alpha == 0 && left.beta == 0) {
                if (nonempty) out.push_back(acc);
                return;
            }
            for (std::size_t i = from; i < members.size(); ++i) {
                const BiDegree b = members[i].bidegree;
                if (b.alpha > left.alpha || b.beta > left.beta) continue;
                walk(i, {left.alpha - b.alpha, left.beta - b.beta}, acc * *members[i].poly, true);
            }
        };
    walk(0, target, Polynomial::constant(table, Rational(1)), false);
    return out;
}

bool in_span(const Polynomial& p, const std::vector<Polynomial>& basis) {
    if (basis.empty()) return p.is_zero();
    std::vector<Polynomial> with = basis;
    with.push_back(p);
    const CoefficientMatrix all = coefficient_matrix(with);
    RatMatrix without(all.a.rows(), basis.size());
    for (std::size_t i = 0; i < all.a.rows(); ++i) {
        for (std::size_t j = 0; j < basis.size(); ++j) without(i, j) = all.a(i, j);
    }
    return rank(without) == rank(all.a);
}

}  // namespace

GeneratingSetReport verify_generating_set(const std::vector<std::string>& names, const RestrictedBasis& rb,
                                          const Bounds& bounds) {
    GeneratingSetReport report;
    report.names = names;

    std::vector<Member> members;
    for (const auto& n : names) {
        const Polynomial* p = rb.find(n);
        if (!p) {
            report.unknown.push_back(n);
            continue;
        }
        members.push_back({n, p->bidegree(), p});
    }

    for (const auto& e : rb.entries) {
        const BiDegree b = e.poly.bidegree();
        if (!bounds.contains(b)) {
            report.unchecked.push_back(e.name);
            continue;
        }
        const auto it = std::find_if(members.begin(), members.end(), [&](const Member& m) { return m.name == e.name; });
        if (it == members.end()) {
            if (!in_span(e.poly, products_of(members, b, rb.table()))) report.unspanned.push_back({e.name, b});
        } else {
            std::vector<Member> others;
            for (const auto& m : members) {
                if (m.name != e.name) others.push_back(m);
            }
            if (in_span(e.poly, products_of(others, b, rb.table()))) report.redundant.push_back(e.name);
        }
    }
    return report;
}

namespace {

Rational draw(std::mt19937_64& rng) {
    const long num = static_cast<long>(rng() % 201) - 100;
    const long den = static_cast<long>(rng() % 100) + 1;
    return Rational(num, den);
}

template <typename Residual>
SpotCheck spotcheck(const RestrictedBasis& rb, std::size_t trials, std::uint64_t seed, Residual residual) {
    if (trials == 0) throw UsageError("numeric spot check needs at least one trial");
    std::mt19937_64 rng(seed);
    const auto names = build_catalog().names();
    SpotCheck out;
    out.trials = trials;
    std::vector<Rational> point(rb.table()->size());
    for (std::size_t t = 0; t < trials; ++t) {
        for (auto& x : point) x = draw(rng);
        std::map<std::string, Rational> values;
        for (const auto& n : names) {
            const Polynomial* p = rb.find(n);
            values[n] = p ? p->evaluate(point) : Rational(0);
        }
        if (!residual(values).is_zero()) ++out.failures;
    }
    out.pass = out.failures == 0;
    return out;
}

}  // namespace

SpotCheck numeric_spotcheck(const PublishedRelation& rel, const RestrictedBasis& rb, std::size_t trials,
                            std::uint64_t seed) {
    const Polynomial poly = published_polynomial(rel);
    return spotcheck(rb, trials, seed, [&](const std::map<std::string, Rational>& v) { return poly.evaluate(v); });
}

SpotCheck numeric_spotcheck(const Relation& rel, const RestrictedBasis& rb, std::size_t trials, std::uint64_t seed) {
    return spotcheck(rb, trials, seed, [&](const std::map<std::string, Rational>& v) {
        Rational sum(0);
        for (const auto& [product, c] : rel.terms) {
            Rational term = c;
            for (const auto& f : product.factors()) {
                const auto it = v.find(f);
                if (it == v.end()) throw UsageError("relation refers to unknown invariant '" + f + "'");
                term = term * it->second;
            }
            sum = sum + term;
        }
        return sum;
    });
}

std::optional<SolvedRelation> kernel_replacement(const PublishedRelation& rel, const ReductionResult& result) {
    for (const auto& r : result.relations) {
        if (r.solved_for && *r.solved_for == rel.lhs) return solve(r);
    }
    return std::nullopt;
}

}  // namespace cubinv
