#include "cubinv/restriction.hpp"

#include "cubinv/parser.hpp"

#include <json.hpp>

#include <fstream>
#include <sstream>

namespace cubinv {

const char* to_string(Fiber f) {
    switch (f) {
        case Fiber::Theta: return "theta";
        case Fiber::AlphaPrime: return "alpha-prime";
        case Fiber::Gamma: return "gamma";
    }
    return "?";
}

std::optional<Fiber> parse_fiber(std::string_view text) {
    if (text == "theta") return Fiber::Theta;
    if (text == "alpha-prime" || text == "alphaprime" || text == "alpha'") return Fiber::AlphaPrime;
    if (text == "gamma") return Fiber::Gamma;
    return std::nullopt;
}

VarTablePtr restricted_table() {
    static const VarTablePtr table = VarTable::make({{"m1", VarKind::Magnetization},
                                                     {"m2", VarKind::Magnetization},
                                                     {"s1", VarKind::Stress},
                                                     {"s2", VarKind::Stress},
                                                     {"s3", VarKind::Stress}});
    return table;
}

void Substitution::validate() const {
    if (!sigma.is_symmetric()) {
        throw SubstitutionError("substitution '" + name + "': sigma is not symmetric");
    }
    for (std::size_t i = 0; i < 3; ++i) {
        for (std::size_t j = 0; j < 3; ++j) {
            const Polynomial& e = sigma(i, j);
            if (e.is_zero()) continue;
            if (!e.is_bihomogeneous() || e.bidegree() != BiDegree{0, 1}) {
                throw SubstitutionError("substitution '" + name + "': sigma(" + std::to_string(i + 1) + "," +
                                        std::to_string(j + 1) + ") = " + e.to_string() +
                                        " is not linear in the stress variables");
            }
        }
    }
    for (std::size_t i = 0; i < 3; ++i) {
        const Polynomial& e = m[i];
        if (e.is_zero()) continue;
        if (!e.is_bihomogeneous() || e.bidegree() != BiDegree{1, 0}) {
            throw SubstitutionError("substitution '" + name + "': m(" + std::to_string(i + 1) + ") = " +
                                    e.to_string() + " is not linear in the magnetization variables");
        }
    }
}

Substitution fiber_substitution(Fiber fiber) {
    const VarTablePtr t = restricted_table();
    auto v = [&](const char* n) { return Polynomial::variable(t, n); };
    const Polynomial zero(t);
    const Polynomial m1 = v("m1"), m2 = v("m2"), s1 = v("s1"), s2 = v("s2"), s3 = v("s3");

    auto sym = [&](const Polynomial& a11, const Polynomial& a12, const Polynomial& a13, const Polynomial& a22,
                   const Polynomial& a23, const Polynomial& a33) {
        return SymMatrix3(t, {a11, a12, a13, a12, a22, a23, a13, a23, a33});
    };

    switch (fiber) {
        case Fiber::Theta:
            // (s1, s2, s3) = (sigma11, sigma22, sigma12), normal e3.
            return {"theta", t, sym(s1, s3, zero, s2, zero, zero), SymVector3(m1, m2, zero),
                    std::array<Rational, 3>{0, 0, 1}, std::nullopt};
        case Fiber::AlphaPrime:
            // (s1, s2, s3) = (sigma11, sigma12, sigma23), normal e2 + e3.
            return {"alpha-prime", t, sym(s1, s2, -s2, -s3, s3, -s3), SymVector3(m1, m2, -m2),
                    std::array<Rational, 3>{0, 1, 1}, std::nullopt};
        case Fiber::Gamma:
            // (s1, s2, s3) = (sigma12, sigma13, sigma23), normal e1 + e2 + e3.
            return {"gamma", t, sym(-s1 - s2, s1, s2, -s1 - s3, s3, -s2 - s3), SymVector3(m1, m2, -m1 - m2),
                    std::array<Rational, 3>{1, 1, 1}, std::nullopt};
    }
    throw UsageError("unknown fiber");
}

namespace {

using nlohmann::json;

std::string expect_string(const json& j, const std::string& where) {
    if (j.is_string()) return j.get<std::string>();
    if (j.is_number_integer()) return std::to_string(j.get<long long>());
    throw SubstitutionError(where + ": expected an expression string");
}

Polynomial parse_entry(const json& j, const VarTablePtr& table, const std::string& where) {
    const std::string text = expect_string(j, where);
    try {
        return parse(text, table);
    } catch (const ParseError& e) {
        throw SubstitutionError(where + ": " + e.what());
    }
}

}  // namespace

Substitution parse_substitution(std::string_view json_text) {
    json doc;
    try {
        doc = json::parse(json_text);
    } catch (const json::parse_error& e) {
        throw SubstitutionError(std::string("substitution file is not valid JSON: ") + e.what());
    }
    if (!doc.is_object()) throw SubstitutionError("substitution file must hold a JSON object");

    const std::string name = doc.contains("name") ? expect_string(doc["name"], "name") : "custom";

    if (!doc.contains("variables") || !doc["variables"].is_array()) {
        throw SubstitutionError("substitution file needs a 'variables' array of \"name: kind\" strings");
    }
    std::vector<VarTable::Var> vars;
    for (const auto& item : doc["variables"]) {
        const std::string decl = expect_string(item, "variables");
        const auto colon = decl.find(':');
        if (colon == std::string::npos) {
            throw SubstitutionError("variable declaration '" + decl + "' must read 'name: kind'");
        }
        auto trim = [](std::string s) {
            const auto b = s.find_first_not_of(" \t");
            const auto e = s.find_last_not_of(" \t");
            return b == std::string::npos ? std::string() : s.substr(b, e - b + 1);
        };
        const std::string vname = trim(decl.substr(0, colon));
        const std::string kind_text = trim(decl.substr(colon + 1));
        const auto kind = parse_var_kind(kind_text);
        if (!kind || *kind == VarKind::Formal) {
            throw SubstitutionError("variable '" + vname + "' has unknown kind '" + kind_text +
                                    "' (expected magnetization or stress)");
        }
        vars.push_back({vname, *kind});
    }
    VarTablePtr table;
    try {
        table = VarTable::make(std::move(vars));
    } catch (const UsageError& e) {
        throw SubstitutionError(e.what());
    }

    if (!doc.contains("sigma")) throw SubstitutionError("substitution file needs a 'sigma' block");
    SymMatrix3 sigma(table);
    const json& sj = doc["sigma"];
    if (sj.is_object()) {
        static const char* upper[] = {"11", "12", "13", "22", "23", "33"};
        for (const char* key : upper) {
            if (!sj.contains(key)) throw SubstitutionError(std::string("sigma block is missing entry '") + key + "'");
        }
        for (const auto& [key, value] : sj.items()) {
            if (key.size() != 2 || key[0] < '1' || key[0] > '3' || key[1] < '1' || key[1] > '3') {
                throw SubstitutionError("sigma block has unknown entry '" + key + "'");
            }
            const std::size_t i = static_cast<std::size_t>(key[0] - '1');
            const std::size_t j = static_cast<std::size_t>(key[1] - '1');
            sigma(i, j) = parse_entry(value, table, "sigma." + key);
        }
        // Lower-triangle entries default to their mirror.
        for (std::size_t i = 0; i < 3; ++i) {
            for (std::size_t j = 0; j < i; ++j) {
                const std::string key = std::to_string(i + 1) + std::to_string(j + 1);
                if (!sj.contains(key)) sigma(i, j) = sigma(j, i);
            }
        }
    } else if (sj.is_array() && sj.size() == 3) {
        for (std::size_t i = 0; i < 3; ++i) {
            if (!sj[i].is_array() || sj[i].size() != 3) throw SubstitutionError("sigma array must be 3x3");
            for (std::size_t j = 0; j < 3; ++j) {
                sigma(i, j) = parse_entry(sj[i][j], table,
                                          "sigma[" + std::to_string(i) + "][" + std::to_string(j) + "]");
            }
        }
    } else {
        throw SubstitutionError("sigma must be an object of entries or a 3x3 array");
    }

    if (!doc.contains("m") || !doc["m"].is_array() || doc["m"].size() != 3) {
        throw SubstitutionError("substitution file needs an 'm' array of three expressions");
    }
    SymVector3 m(table);
    for (std::size_t i = 0; i < 3; ++i) m[i] = parse_entry(doc["m"][i], table, "m[" + std::to_string(i) + "]");

    std::optional<std::vector<std::string>> keep;
    if (doc.contains("keep")) {
        keep.emplace();
        for (const auto& k : doc["keep"]) keep->push_back(expect_string(k, "keep"));
    }

    Substitution sub{name, table, std::move(sigma), std::move(m), std::nullopt, std::move(keep)};
    sub.validate();
    return sub;
}

Substitution custom_substitution(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw SubstitutionError("cannot read substitution file '" + path + "'");
    std::ostringstream buf;
    buf << in.rdbuf();
    return parse_substitution(buf.str());
}

std::string substitution_to_json(const Substitution& sub) {
    nlohmann::ordered_json doc = nlohmann::ordered_json::object();
    doc["name"] = sub.name;
    nlohmann::ordered_json vars = nlohmann::ordered_json::array();
    for (const auto& v : sub.table->vars()) vars.push_back(v.name + ": " + to_string(v.kind));
    doc["variables"] = vars;
    nlohmann::ordered_json sigma = nlohmann::ordered_json::object();
    for (std::size_t i = 0; i < 3; ++i) {
        for (std::size_t j = i; j < 3; ++j) {
            sigma[std::to_string(i + 1) + std::to_string(j + 1)] = sub.sigma(i, j).to_string();
        }
    }
    doc["sigma"] = sigma;
    doc["m"] = nlohmann::ordered_json::array({sub.m[0].to_string(), sub.m[1].to_string(), sub.m[2].to_string()});
    if (sub.keep) doc["keep"] = *sub.keep;
    return doc.dump(2) + "\n";
}

const Polynomial* RestrictedBasis::find(std::string_view name) const {
    for (const auto& e : entries) {
        if (e.name == name) return &e.poly;
    }
    return nullptr;
}

RestrictedBasis restrict_basis(const Catalog& catalog, const Substitution& sub) {
    RestrictedBasis rb;
    rb.substitution = sub.name;
    rb.table_ = sub.table;
    for (auto& np : evaluate_all(catalog, sub.sigma, sub.m)) {
        if (np.poly.is_zero()) {
            rb.vanished.push_back(np.name);
        } else {
            rb.entries.push_back(std::move(np));
        }
    }
    return rb;
}

}  // namespace cubinv
