#include "cubinv/cli.hpp"

#include "cubinv/parser.hpp"

#include <json.hpp>

#include <iomanip>
#include <ostream>
#include <sstream>

namespace cubinv {

using Json = nlohmann::ordered_json;

const char* to_string(Command c) {
    switch (c) {
        case Command::Catalog: return "catalog";
        case Command::Reduce: return "reduce";
        case Command::Verify: return "verify";
        case Command::Union: return "union";
    }
    return "?";
}

const char* to_string(OutputFormat f) {
    switch (f) {
        case OutputFormat::Text: return "text";
        case OutputFormat::Json: return "json";
        case OutputFormat::Latex: return "latex";
    }
    return "?";
}

std::optional<OutputFormat> parse_format(std::string_view text) {
    if (text == "text") return OutputFormat::Text;
    if (text == "json") return OutputFormat::Json;
    if (text == "latex") return OutputFormat::Latex;
    return std::nullopt;
}

ResolvedFiber resolve_fiber(const std::string& spec) {
    if (const auto f = parse_fiber(spec)) {
        return {fiber_substitution(*f), *f, paper_generators(*f)};
    }
    constexpr std::string_view prefix = "custom:";
    if (spec.rfind(prefix, 0) == 0) {
        ResolvedFiber r{custom_substitution(spec.substr(prefix.size())), std::nullopt, std::nullopt};
        r.keep = r.substitution.keep;
        if (!r.keep) {
            if (const auto f = parse_fiber(r.substitution.name)) r.keep = paper_generators(*f);
        }
        return r;
    }
    throw UsageError("unknown fiber '" + spec + "' (expected theta, alpha-prime, gamma or custom:PATH)");
}

namespace {

struct Reduced {
    ResolvedFiber fiber;
    RestrictedBasis rb;
    ReductionResult result;
};

Reduced run_reduction(const std::string& spec, const RunConfig& config) {
    ResolvedFiber fiber = resolve_fiber(spec);
    RestrictedBasis rb = restrict_basis(build_catalog(), fiber.substitution);
    ReduceOptions options;
    options.bounds = config.bounds;
    options.policy = config.policy;
    options.keep = fiber.keep;
    options.all_bidegrees = config.all_bidegrees;
    ReductionResult result = reduce(rb, options);
    return {std::move(fiber), std::move(rb), std::move(result)};
}

std::string join(const std::vector<std::string>& names, const char* sep = " ") {
    std::string out;
    for (const auto& n : names) {
        if (!out.empty()) out += sep;
        out += n;
    }
    return out;
}

Json bidegree_json(BiDegree b) { return Json::array({b.alpha, b.beta}); }

Json terms_json(const Relation& r) {
    Json terms = Json::array();
    for (const auto& [product, c] : r.terms) {
        Json t = Json::object();
        t["coefficient"] = c.to_string();
        t["factors"] = product.factors();
        terms.push_back(t);
    }
    return terms;
}

Json config_json(const RunConfig& config) {
    Json c = Json::object();
    c["command"] = to_string(config.command);
    c["fiber"] = config.fiber;
    c["policy"] = to_string(config.policy);
    c["bounds"] = Json::object({{"d_max", config.bounds.d_max}, {"alpha_max", config.bounds.alpha_max}});
    c["all_bidegrees"] = config.all_bidegrees;
    if (config.command == Command::Verify) {
        c["seed"] = config.seed;
        c["trials"] = config.trials;
    }
    return c;
}

Json header_json(const RunConfig& config) {
    Json doc = Json::object();
    doc["tool"] = kToolName;
    doc["version"] = kToolVersion;
    doc["config"] = config_json(config);
    return doc;
}

Json reduction_json(const Reduced& r) {
    const ReductionResult& res = r.result;
    Json doc = Json::object();
    doc["substitution"] = res.substitution;
    doc["vanished"] = res.vanished;
    doc["generators"] = res.generators;

    Json relations = Json::array();
    for (const auto& rel : res.relations) {
        const SolvedRelation s = solve(rel);
        Json j = Json::object();
        j["solved_for"] = s.name;
        j["bidegree"] = bidegree_json(rel.bidegree);
        j["solved"] = s.to_string();
        j["relation"] = rel.to_string();
        j["terms"] = terms_json(rel);
        relations.push_back(j);
    }
    doc["relations"] = relations;

    Json syzygies = Json::array();
    for (const auto& rel : res.syzygies) {
        Json j = Json::object();
        j["bidegree"] = bidegree_json(rel.bidegree);
        j["relation"] = rel.to_string();
        j["terms"] = terms_json(rel);
        syzygies.push_back(j);
    }
    doc["syzygies"] = syzygies;

    Json per = Json::array();
    for (const auto& b : res.per_bidegree) {
        Json j = Json::object();
        j["bidegree"] = bidegree_json(b.bidegree);
        j["invariants"] = b.invariants;
        j["reducibles"] = b.reducibles;
        j["n"] = b.n;
        j["rank"] = b.rank;
        j["kernel_dim"] = b.kernel_dim;
        j["kept"] = b.kept;
        j["eliminated"] = b.eliminated;
        j["syzygies"] = b.syzygies;
        j["beyond_bounds"] = b.beyond_bounds;
        per.push_back(j);
    }
    doc["per_bidegree"] = per;
    doc["counts"] = Json::object({{"generators", res.generators.size()},
                                  {"relations", res.relations.size()},
                                  {"vanished", res.vanished.size()}});
    return doc;
}

void print_reduce_text(const Reduced& r, const RunConfig& config, std::ostream& out) {
    const ReductionResult& res = r.result;
    out << "substitution: " << res.substitution << "\n";
    out << "policy: " << to_string(config.policy) << ", bounds: dMax=" << config.bounds.d_max
        << " alphaMax=" << config.bounds.alpha_max << "\n";
    out << "vanished (" << res.vanished.size() << "): " << join(res.vanished) << "\n";
    out << "generators (" << res.generators.size() << "): " << join(res.generators) << "\n";
    out << "relations (" << res.relations.size() << "):\n";
    for (const auto& s : solve_relations(res)) out << "  " << s.to_string() << "\n";
    out << "syzygies among products: " << res.syzygies.size() << "\n";
    out << "\n" << std::left << std::setw(10) << "bidegree" << std::right << std::setw(6) << "N" << std::setw(6)
        << "R" << std::setw(8) << "kernel" << "  invariants\n";
    for (const auto& b : res.per_bidegree) {
        out << std::left << std::setw(10) << b.bidegree.to_string() << std::right << std::setw(6) << b.n
            << std::setw(6) << b.rank << std::setw(8) << b.kernel_dim << "  " << join(b.invariants);
        if (b.beyond_bounds) out << " (beyond bounds)";
        out << "\n";
    }
}

void print_reduce_latex(const Reduced& r, std::ostream& out) {
    const ReductionResult& res = r.result;
    std::vector<std::string> gens;
    for (const auto& g : res.generators) gens.push_back(invariant_latex(g));
    out << "% substitution: " << res.substitution << "\n";
    out << "\\[\nG = \\{" << join(gens, ", ") << "\\}\n\\]\n";
    if (!res.vanished.empty()) {
        std::vector<std::string> v;
        for (const auto& n : res.vanished) v.push_back(invariant_latex(n));
        out << "\\[\n" << join(v, " = ") << " = 0\n\\]\n";
    }
    out << "\\begin{align*}\n";
    const auto solved = solve_relations(res);
    for (std::size_t i = 0; i < solved.size(); ++i) {
        std::string line = solved[i].to_latex();
        const auto eq = line.find(" = ");
        out << "  " << line.substr(0, eq) << " &= " << line.substr(eq + 3) << (i + 1 < solved.size() ? " \\\\" : "")
            << "\n";
    }
    out << "\\end{align*}\n";
}

int cmd_catalog(const RunConfig& config, std::ostream& out) {
    const Catalog catalog = build_catalog();
    const GenericState g = generic_state();
    const auto polys = evaluate_all(catalog, g.sigma, g.m);
    switch (config.format) {
        case OutputFormat::Text:
            for (std::size_t i = 0; i < catalog.size(); ++i) {
                const auto& d = catalog[i];
                out << std::left << std::setw(7) << d.name << std::setw(8) << polys[i].poly.bidegree().to_string()
                    << std::setw(6) << polys[i].poly.term_count() << d.formula << "\n";
            }
            break;
        case OutputFormat::Json: {
            Json doc = header_json(config);
            Json entries = Json::array();
            for (std::size_t i = 0; i < catalog.size(); ++i) {
                const auto& d = catalog[i];
                Json e = Json::object();
                e["name"] = d.name;
                e["label"] = d.label;
                e["formula"] = d.formula;
                e["bidegree"] = bidegree_json(polys[i].poly.bidegree());
                e["polynomial"] = polys[i].poly.to_string();
                entries.push_back(e);
            }
            doc["variables"] = Json::array();
            for (const auto& v : g.table->vars()) doc["variables"].push_back(v.name);
            doc["invariants"] = entries;
            out << doc.dump(2) << "\n";
            break;
        }
        case OutputFormat::Latex:
            out << "\\begin{align*}\n";
            for (std::size_t i = 0; i < catalog.size(); ++i) {
                out << "  " << catalog[i].label << " &= " << polys[i].poly.to_latex()
                    << (i + 1 < catalog.size() ? " \\\\" : "") << "\n";
            }
            out << "\\end{align*}\n";
            break;
    }
    return 0;
}

int cmd_reduce(const RunConfig& config, std::ostream& out) {
    if (config.fiber.empty()) throw UsageError("reduce needs --fiber");
    const Reduced r = run_reduction(config.fiber, config);
    switch (config.format) {
        case OutputFormat::Text: print_reduce_text(r, config, out); break;
        case OutputFormat::Json: {
            Json doc = header_json(config);
            doc.update(reduction_json(r));
            out << doc.dump(2) << "\n";
            break;
        }
        case OutputFormat::Latex: print_reduce_latex(r, out); break;
    }
    return 0;
}

int cmd_verify(const RunConfig& config, std::ostream& out) {
    const auto published =
        config.relations_file.empty() ? builtin_published_relations() : load_published_relations(config.relations_file);
    std::vector<std::string> specs;
    if (config.fiber.empty()) {
        for (Fiber f : kAllFibers) specs.push_back(to_string(f));
    } else {
        specs.push_back(config.fiber);
    }

    bool ok = true;
    std::size_t passed = 0, total = 0;
    Json fibers = Json::array();
    std::ostringstream text;
    for (const auto& spec : specs) {
        const Reduced r = run_reduction(spec, config);
        const auto rels = published_for(published, r.fiber.substitution.name);
        Json jf = Json::object();
        jf["fiber"] = r.fiber.substitution.name;
        Json jr = Json::array();
        std::size_t fiber_pass = 0;
        text << "== " << r.fiber.substitution.name << "\n";
        for (const auto& rel : rels) {
            ++total;
            const PublishedCheck check = verify_published(rel, r.rb);
            const SpotCheck numeric = numeric_spotcheck(rel, r.rb, config.trials, config.seed);
            Json j = Json::object();
            j["source"] = rel.source;
            j["relation"] = rel.text();
            j["status"] = check.pass ? "pass" : "fail";
            j["numeric"] = Json::object({{"trials", numeric.trials}, {"failures", numeric.failures}});
            if (check.pass) {
                ++fiber_pass;
                ++passed;
                text << "PASS " << rel.source << "  " << rel.text() << "\n";
            } else {
                ok = false;
                j["residual"] = check.residual.to_string();
                text << "FAIL " << rel.source << "  " << rel.text() << "\n";
                text << "     residual: " << check.residual.to_string() << "\n";
                if (const auto rep = kernel_replacement(rel, r.result)) {
                    Relation engine;
                    for (const auto& rr : r.result.relations) {
                        if (rr.solved_for && *rr.solved_for == rel.lhs) engine = rr;
                    }
                    const SpotCheck rep_check = numeric_spotcheck(engine, r.rb, config.trials, config.seed);
                    j["replacement"] = rep->to_string();
                    j["replacement_numeric"] =
                        Json::object({{"trials", rep_check.trials}, {"failures", rep_check.failures}});
                    text << "     corrected: " << rep->to_string() << " (numeric " << rep_check.trials - rep_check.failures
                         << "/" << rep_check.trials << ")\n";
                }
            }
            jr.push_back(j);
        }
        const GeneratingSetReport cert = verify_generating_set(r.result.generators, r.rb, config.bounds);
        if (!cert.passes()) ok = false;
        text << fiber_pass << "/" << rels.size() << " published relations pass\n";
        text << "generating set (" << r.result.generators.size() << "): spanning " << (cert.spanning() ? "yes" : "no")
             << ", minimal " << (cert.minimal() ? "yes" : "no") << "\n";
        for (const auto& [n, b] : cert.unspanned) text << "  not spanned: " << n << " at " << b.to_string() << "\n";
        for (const auto& n : cert.redundant) text << "  redundant: " << n << "\n";
        for (const auto& n : cert.unknown) text << "  unknown: " << n << "\n";
        jf["relations"] = jr;
        Json jc = Json::object();
        jc["names"] = cert.names;
        jc["spanning"] = cert.spanning();
        jc["minimal"] = cert.minimal();
        Json un = Json::array();
        for (const auto& [n, b] : cert.unspanned) un.push_back(n);
        jc["unspanned"] = un;
        jc["redundant"] = cert.redundant;
        jf["generating_set"] = jc;
        fibers.push_back(jf);
    }

    switch (config.format) {
        case OutputFormat::Json: {
            Json doc = header_json(config);
            doc["fibers"] = fibers;
            doc["summary"] = Json::object({{"passed", passed}, {"total", total}, {"ok", ok}});
            out << doc.dump(2) << "\n";
            break;
        }
        default:
            out << text.str() << "total: " << passed << "/" << total << " published relations pass\n";
            break;
    }
    return ok ? 0 : 1;
}

int cmd_union(const RunConfig& config, std::ostream& out) {
    std::map<Fiber, ReductionResult> results;
    for (Fiber f : kAllFibers) results.emplace(f, run_reduction(to_string(f), config).result);
    const UnionReport u = check_union_property(results);
    const bool ok = u.holds() && u.union_names == u.generators.at(Fiber::AlphaPrime);
    switch (config.format) {
        case OutputFormat::Json: {
            Json doc = header_json(config);
            Json g = Json::object();
            for (Fiber f : kAllFibers) g[to_string(f)] = u.generators.at(f);
            doc["generators"] = g;
            doc["theta_in_alpha_prime"] = u.theta_in_alpha;
            doc["gamma_in_alpha_prime"] = u.gamma_in_alpha;
            doc["gamma_in_theta"] = u.gamma_in_theta;
            doc["union"] = u.union_names;
            doc["union_cardinal"] = u.union_names.size();
            doc["holds"] = ok;
            out << doc.dump(2) << "\n";
            break;
        }
        default:
            for (Fiber f : kAllFibers) {
                out << std::left << std::setw(12) << to_string(f) << "(" << u.generators.at(f).size()
                    << "): " << join(u.generators.at(f)) << "\n";
            }
            out << "theta in alpha-prime: " << (u.theta_in_alpha ? "yes" : "no") << "\n";
            out << "gamma in alpha-prime: " << (u.gamma_in_alpha ? "yes" : "no") << "\n";
            out << "gamma in theta: " << (u.gamma_in_theta ? "yes" : "no") << "\n";
            out << "union (" << u.union_names.size() << "): " << join(u.union_names) << "\n";
            out << (ok ? "union equals the alpha-prime set\n" : "union differs from the alpha-prime set\n");
            break;
    }
    return ok ? 0 : 1;
}

}  // namespace

std::string reduce_json(const RunConfig& config) {
    RunConfig c = config;
    c.command = Command::Reduce;
    c.format = OutputFormat::Json;
    std::ostringstream out;
    cmd_reduce(c, out);
    return out.str();
}

int run(const RunConfig& config, std::ostream& out, std::ostream& err) {
    try {
        if (config.bounds.d_max < 1 || config.bounds.alpha_max < 0) throw UsageError("bounds must be positive");
        if (config.trials == 0) throw UsageError("--trials must be at least 1");
        switch (config.command) {
            case Command::Catalog: return cmd_catalog(config, out);
            case Command::Reduce: return cmd_reduce(config, out);
            case Command::Verify: return cmd_verify(config, out);
            case Command::Union: return cmd_union(config, out);
        }
        return 2;
    } catch (const PolicyConflict& e) {
        err << "error: policy conflict at " << e.what() << "\n";
        return 2;
    } catch (const UsageError& e) {
        err << "error: " << e.what() << "\n";
        return 2;
    } catch (const ParseError& e) {
        err << "error: " << e.what() << "\n";
        return 2;
    } catch (const IntegrityError& e) {
        err << "internal error: " << e.what() << "\n";
        return 1;
    }
}

}  // namespace cubinv
