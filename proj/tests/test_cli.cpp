#include "cubinv/cli.hpp"

#include <doctest.h>
#include <json.hpp>

#include <cstdio>
#include <fstream>
#include <sstream>

using namespace cubinv;

namespace {

struct Outcome {
    int status;
    std::string out;
    std::string err;
};

Outcome run_with(const RunConfig& c) {
    std::ostringstream out, err;
    const int status = run(c, out, err);
    return {status, out.str(), err.str()};
}

RunConfig reduce_config(const std::string& fiber, OutputFormat format = OutputFormat::Json) {
    RunConfig c;
    c.command = Command::Reduce;
    c.fiber = fiber;
    c.format = format;
    return c;
}

}  // namespace

TEST_CASE("reduce --fiber theta --format json") {
    const Outcome o = run_with(reduce_config("theta"));
    REQUIRE(o.status == 0);
    const auto doc = nlohmann::json::parse(o.out);
    CHECK(doc["tool"] == "cubinv");
    CHECK(doc["version"] == kToolVersion);
    CHECK(doc["config"]["fiber"] == "theta");
    CHECK(doc["config"]["policy"] == "paper");
    CHECK(doc["config"]["bounds"]["d_max"] == 7);
    CHECK(doc["generators"].size() == 7);
    CHECK(doc["vanished"].size() == 12);
    CHECK(doc["relations"].size() == 11);
    CHECK(doc["relations"][0]["solved"] == "I012 = 1/6*I002*I010");
    CHECK(doc["relations"][0]["relation"] == "6*I012 - I002*I010 = 0");
    CHECK(doc["relations"][0]["terms"].size() == 2);
    CHECK(doc["per_bidegree"][0]["bidegree"] == nlohmann::json::array({0, 1}));
    CHECK(doc["counts"]["relations"] == 11);
}

TEST_CASE("JSON output is byte-identical across runs") {
    for (const char* f : {"theta", "alpha-prime", "gamma"}) {
        for (SelectionPolicy p : {SelectionPolicy::Paper, SelectionPolicy::TableOrder, SelectionPolicy::ReverseTableOrder}) {
            RunConfig c = reduce_config(f);
            c.policy = p;
            CHECK(reduce_json(c) == reduce_json(c));
        }
    }
}

TEST_CASE("custom theta file gives the same report") {
    const Outcome a = run_with(reduce_config("theta", OutputFormat::Text));
    const Outcome b = run_with(reduce_config("custom:" + std::string(CUBINV_DATA_DIR) + "/theta.sub.json", OutputFormat::Text));
    CHECK(a.status == 0);
    CHECK(a.out == b.out);

    auto ja = nlohmann::json::parse(run_with(reduce_config("theta")).out);
    auto jb = nlohmann::json::parse(run_with(reduce_config("custom:" + std::string(CUBINV_DATA_DIR) + "/theta.sub.json")).out);
    ja["config"].erase("fiber");
    jb["config"].erase("fiber");
    CHECK(ja == jb);
}

TEST_CASE("verify --fiber gamma") {
    RunConfig c;
    c.command = Command::Verify;
    c.fiber = "gamma";
    const Outcome o = run_with(c);
    CHECK(o.status == 0);
    CHECK(o.out.find("22/22 published relations pass") != std::string::npos);
    CHECK(o.out.find("FAIL") == std::string::npos);

    c.fiber.clear();
    c.format = OutputFormat::Json;
    const auto doc = nlohmann::json::parse(run_with(c).out);
    CHECK(doc["summary"]["passed"] == 48);
    CHECK(doc["summary"]["total"] == 48);
    CHECK(doc["summary"]["ok"] == true);
}

TEST_CASE("verify reports a failing relation with its replacement") {
    const std::string path = "cli_bad_relations.txt";
    {
        std::ofstream f(path);
        f << "theta | I012 | 1/5*I002*I010 | bad-01\n";
    }
    RunConfig c;
    c.command = Command::Verify;
    c.fiber = "theta";
    c.relations_file = path;
    const Outcome o = run_with(c);
    CHECK(o.status == 1);
    CHECK(o.out.find("FAIL bad-01") != std::string::npos);
    CHECK(o.out.find("corrected: I012 = 1/6*I002*I010 (numeric 100/100)") != std::string::npos);
    std::remove(path.c_str());
}

TEST_CASE("union") {
    RunConfig c;
    c.command = Command::Union;
    c.format = OutputFormat::Json;
    const Outcome o = run_with(c);
    CHECK(o.status == 0);
    const auto doc = nlohmann::json::parse(o.out);
    CHECK(doc["union_cardinal"] == 15);
    CHECK(doc["holds"] == true);
}

TEST_CASE("catalog") {
    RunConfig c;
    c.command = Command::Catalog;
    c.format = OutputFormat::Json;
    const auto doc = nlohmann::json::parse(run_with(c).out);
    CHECK(doc["invariants"].size() == 30);
    CHECK(doc["invariants"][9]["name"] == "I200");
    CHECK(doc["invariants"][9]["polynomial"] == "m1^2 + m2^2 + m3^2");
    c.format = OutputFormat::Latex;
    CHECK(run_with(c).out.find("\\begin{align*}") == 0);
}

TEST_CASE("latex reduce output") {
    const Outcome o = run_with(reduce_config("theta", OutputFormat::Latex));
    CHECK(o.status == 0);
    CHECK(o.out.find("I_{012} &= \\frac{1}{6} I_{002} \\operatorname{tr}\\boldsymbol{\\sigma}") != std::string::npos);
}

TEST_CASE("usage errors exit with status 2") {
    CHECK(run_with(reduce_config("delta")).status == 2);
    CHECK(run_with(reduce_config("")).status == 2);
    CHECK(run_with(reduce_config("custom:/no/such/file.json")).status == 2);

    RunConfig c = reduce_config("theta");
    c.trials = 0;
    CHECK(run_with(c).status == 2);

    // A custom substitution without a keep list cannot use the paper policy.
    const std::string path = "cli_nameless.sub.json";
    {
        std::ofstream f(path);
        f << R"({"name": "plane", "variables": ["a: magnetization", "x: stress"],
                 "sigma": {"11": "x", "12": "0", "13": "0", "22": "0", "23": "0", "33": "0"},
                 "m": ["a", "0", "0"]})";
    }
    const Outcome o = run_with(reduce_config("custom:" + path));
    CHECK(o.status == 2);
    CHECK(o.err.find("policy 'paper'") != std::string::npos);
    RunConfig t = reduce_config("custom:" + path);
    t.policy = SelectionPolicy::TableOrder;
    CHECK(run_with(t).status == 0);
    std::remove(path.c_str());
}
