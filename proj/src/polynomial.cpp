#include "cubinv/polynomial.hpp"

#include <algorithm>
#include <cctype>
#include <set>
#include <sstream>

namespace cubinv {

const char* to_string(VarKind kind) {
    switch (kind) {
        case VarKind::Magnetization: return "magnetization";
        case VarKind::Stress: return "stress";
        case VarKind::Formal: return "formal";
    }
    return "?";
}

std::optional<VarKind> parse_var_kind(std::string_view text) {
    if (text == "magnetization" || text == "m") return VarKind::Magnetization;
    if (text == "stress" || text == "s") return VarKind::Stress;
    if (text == "formal") return VarKind::Formal;
    return std::nullopt;
}

std::string BiDegree::to_string() const {
    return "(" + std::to_string(alpha) + "," + std::to_string(beta) + ")";
}

VarTable::VarTable(std::vector<Var> vars) : vars_(std::move(vars)) {
    std::set<std::string> seen;
    for (const auto& v : vars_) {
        if (v.name.empty()) {
            throw UsageError("empty variable name");
        }
        if (!seen.insert(v.name).second) {
            throw UsageError("duplicate variable name '" + v.name + "'");
        }
    }
}

std::optional<std::size_t> VarTable::index_of(std::string_view name) const {
    for (std::size_t i = 0; i < vars_.size(); ++i) {
        if (vars_[i].name == name) return i;
    }
    return std::nullopt;
}

int Monomial::total_degree() const {
    int d = 0;
    for (auto e : exps_) d += e;
    return d;
}

BiDegree Monomial::bidegree(const VarTable& table) const {
    BiDegree b;
    for (std::size_t i = 0; i < exps_.size(); ++i) {
        switch (table[i].kind) {
            case VarKind::Magnetization: b.alpha += exps_[i]; break;
            case VarKind::Stress: b.beta += exps_[i]; break;
            case VarKind::Formal: break;
        }
    }
    return b;
}

Monomial operator*(const Monomial& a, const Monomial& b) {
    Monomial out(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) {
        out[i] = static_cast<std::uint16_t>(a[i] + b[i]);
    }
    return out;
}

bool GrlexDescending::operator()(const Monomial& a, const Monomial& b) const {
    const int da = a.total_degree();
    const int db = b.total_degree();
    if (da != db) return da > db;
    return a.exponents() > b.exponents();
}

Polynomial::Polynomial(VarTablePtr table, TermMap terms) : table_(std::move(table)) {
    for (auto& [m, c] : terms) {
        if (m.size() != table_->size()) {
            throw UsageError("monomial arity does not match variable table");
        }
        if (!c.is_zero()) terms_.emplace(m, c);
    }
}

Polynomial Polynomial::constant(VarTablePtr table, const Rational& c) {
    Polynomial p(std::move(table));
    if (!c.is_zero()) p.terms_.emplace(Monomial(p.table_->size()), c);
    return p;
}

Polynomial Polynomial::variable(VarTablePtr table, std::size_t index) {
    if (index >= table->size()) {
        throw UsageError("variable index out of range");
    }
    Polynomial p(std::move(table));
    Monomial m(p.table_->size());
    m[index] = 1;
    p.terms_.emplace(std::move(m), Rational(1));
    return p;
}

Polynomial Polynomial::variable(const VarTablePtr& table, std::string_view name) {
    const auto idx = table->index_of(name);
    if (!idx) {
        throw UsageError("unknown variable '" + std::string(name) + "'");
    }
    return variable(table, *idx);
}

Rational Polynomial::coefficient(const Monomial& m) const {
    const auto it = terms_.find(m);
    return it == terms_.end() ? Rational() : it->second;
}

BiDegree Polynomial::bidegree() const {
    if (terms_.empty()) throw ZeroPolynomial();
    const BiDegree first = terms_.begin()->first.bidegree(*table_);
    for (const auto& [m, c] : terms_) {
        if (m.bidegree(*table_) != first) {
            throw NotBiHomogeneous("polynomial mixes bi-degrees " + first.to_string() + " and " +
                                   m.bidegree(*table_).to_string());
        }
    }
    return first;
}

bool Polynomial::is_bihomogeneous() const {
    try {
        (void)bidegree();
        return true;
    } catch (const std::domain_error&) {
        return false;
    }
}

int Polynomial::total_degree() const {
    return terms_.empty() ? -1 : terms_.begin()->first.total_degree();
}

void Polynomial::check_table(const Polynomial& o) const {
    if (table_ != o.table_ && !(*table_ == *o.table_)) {
        throw UsageError("polynomials over different variable tables");
    }
}

void Polynomial::add_term(const Monomial& m, const Rational& c) {
    if (c.is_zero()) return;
    auto [it, inserted] = terms_.try_emplace(m, c);
    if (!inserted) {
        it->second += c;
        if (it->second.is_zero()) terms_.erase(it);
    }
}

Polynomial& Polynomial::operator+=(const Polynomial& o) {
    check_table(o);
    for (const auto& [m, c] : o.terms_) add_term(m, c);
    return *this;
}

Polynomial& Polynomial::operator-=(const Polynomial& o) {
    check_table(o);
    for (const auto& [m, c] : o.terms_) add_term(m, -c);
    return *this;
}

Polynomial operator*(const Polynomial& a, const Polynomial& b) {
    a.check_table(b);
    Polynomial out(a.table_);
    for (const auto& [ma, ca] : a.terms_) {
        for (const auto& [mb, cb] : b.terms_) {
            out.add_term(ma * mb, ca * cb);
        }
    }
    return out;
}

Polynomial Polynomial::scaled(const Rational& c) const {
    Polynomial out(table_);
    if (c.is_zero()) return out;
    for (const auto& [m, v] : terms_) out.terms_.emplace_hint(out.terms_.end(), m, v * c);
    return out;
}

Polynomial Polynomial::pow(unsigned n) const {
    Polynomial result = constant(table_, Rational(1));
    Polynomial base = *this;
    while (n > 0) {
        if (n & 1U) result = result * base;
        n >>= 1U;
        if (n > 0) base = base * base;
    }
    return result;
}

Rational Polynomial::evaluate(std::span<const Rational> values) const {
    if (values.size() != table_->size()) {
        throw UsageError("evaluation point has wrong arity");
    }
    Rational acc;
    for (const auto& [m, c] : terms_) {
        Rational t = c;
        for (std::size_t i = 0; i < m.size(); ++i) {
            for (unsigned e = 0; e < m[i]; ++e) t *= values[i];
        }
        acc += t;
    }
    return acc;
}

Rational Polynomial::evaluate(const std::map<std::string, Rational>& point) const {
    std::vector<Rational> values(table_->size());
    for (std::size_t i = 0; i < table_->size(); ++i) {
        const auto it = point.find((*table_)[i].name);
        if (it == point.end()) {
            throw UsageError("no value assigned to variable '" + (*table_)[i].name + "'");
        }
        values[i] = it->second;
    }
    return evaluate(values);
}

Polynomial Polynomial::substitute(const std::vector<Polynomial>& images) const {
    if (images.size() != table_->size()) {
        throw UsageError("substitution needs one image per variable");
    }
    if (images.empty()) {
        throw UsageError("cannot substitute into a polynomial without variables");
    }
    const VarTablePtr& target = images.front().table();
    for (const auto& img : images) {
        if (!(*img.table() == *target)) {
            throw UsageError("substitution images over different variable tables");
        }
    }
    // Powers of each image are reused across terms.
    std::vector<std::vector<Polynomial>> powers(images.size());
    Polynomial out(target);
    for (const auto& [m, c] : terms_) {
        Polynomial t = constant(target, c);
        for (std::size_t i = 0; i < m.size(); ++i) {
            if (m[i] == 0) continue;
            auto& pw = powers[i];
            if (pw.empty()) pw.push_back(constant(target, Rational(1)));
            while (pw.size() <= m[i]) pw.push_back(pw.back() * images[i]);
            t = t * pw[m[i]];
        }
        out += t;
    }
    return out;
}

std::string monomial_to_string(const Monomial& m, const VarTable& table) {
    std::string out;
    for (std::size_t i = 0; i < m.size(); ++i) {
        if (m[i] == 0) continue;
        if (!out.empty()) out += '*';
        out += table[i].name;
        if (m[i] > 1) out += "^" + std::to_string(m[i]);
    }
    return out;
}

std::string Polynomial::to_string() const {
    if (terms_.empty()) return "0";
    std::string out;
    bool first = true;
    for (const auto& [m, c] : terms_) {
        const std::string mono = monomial_to_string(m, *table_);
        const Rational a = c.abs();
        if (first) {
            if (c.sign() < 0) out += "-";
        } else {
            out += c.sign() < 0 ? " - " : " + ";
        }
        if (mono.empty()) {
            out += a.to_string();
        } else if (a.is_one()) {
            out += mono;
        } else {
            out += a.to_string() + "*" + mono;
        }
        first = false;
    }
    return out;
}

std::string latex_variable(std::string_view name) {
    std::size_t split = name.size();
    while (split > 0 && std::isdigit(static_cast<unsigned char>(name[split - 1]))) --split;
    const std::string_view stem = name.substr(0, split);
    const std::string_view index = name.substr(split);
    std::string symbol;
    if (stem == "s" || stem == "sig" || stem == "sigma") {
        symbol = "\\sigma";
    } else if (stem == "m" || stem == "M") {
        symbol = "M";
    } else {
        symbol = std::string(stem);
    }
    if (index.empty()) return symbol;
    return symbol + "_{" + std::string(index) + "}";
}

namespace {

std::string latex_rational(const Rational& a) {
    if (a.is_integer()) return a.to_string();
    return "\\frac{" + a.num().get_str() + "}{" + a.den().get_str() + "}";
}

}  // namespace

std::string Polynomial::to_latex() const {
    if (terms_.empty()) return "0";
    std::string out;
    bool first = true;
    for (const auto& [m, c] : terms_) {
        std::string mono;
        for (std::size_t i = 0; i < m.size(); ++i) {
            if (m[i] == 0) continue;
            if (!mono.empty()) mono += ' ';
            mono += latex_variable((*table_)[i].name);
            if (m[i] > 1) mono += "^{" + std::to_string(m[i]) + "}";
        }
        const Rational a = c.abs();
        if (first) {
            if (c.sign() < 0) out += "-";
        } else {
            out += c.sign() < 0 ? " - " : " + ";
        }
        if (mono.empty()) {
            out += latex_rational(a);
        } else if (a.is_one()) {
            out += mono;
        } else {
            out += latex_rational(a) + " " + mono;
        }
        first = false;
    }
    return out;
}

bool operator==(const Polynomial& a, const Polynomial& b) {
    a.check_table(b);
    return a.terms_ == b.terms_;
}

CoefficientMatrix coefficient_matrix(const std::vector<Polynomial>& ps) {
    CoefficientMatrix out;
    if (ps.empty()) return out;
    const VarTablePtr& table = ps.front().table();
    std::optional<BiDegree> common;
    std::set<Monomial, GrlexDescending> monos;
    for (const auto& p : ps) {
        if (!(*p.table() == *table)) {
            throw UsageError("coefficient_matrix: polynomials over different variable tables");
        }
        if (p.is_zero()) continue;
        BiDegree b;
        try {
            b = p.bidegree();
        } catch (const NotBiHomogeneous& e) {
            throw UsageError(std::string("coefficient_matrix: ") + e.what());
        }
        if (common && *common != b) {
            throw UsageError("coefficient_matrix: mixed bi-degrees " + common->to_string() + " and " +
                             b.to_string());
        }
        common = b;
        for (const auto& [m, c] : p.terms()) monos.insert(m);
    }
    out.monomials.assign(monos.begin(), monos.end());
    out.a = RatMatrix(out.monomials.size(), ps.size());
    for (std::size_t j = 0; j < ps.size(); ++j) {
        std::size_t i = 0;
        auto it = ps[j].terms().begin();
        // Both sequences are sorted by the same order.
        for (; it != ps[j].terms().end(); ++it) {
            while (!(out.monomials[i] == it->first)) ++i;
            out.a(i, j) = it->second;
        }
    }
    return out;
}

}  // namespace cubinv
