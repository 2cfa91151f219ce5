#include "cubinv/cli.hpp"

#include <CLI11.hpp>

#include <iostream>

int main(int argc, char** argv) {
    using namespace cubinv;

    CLI::App app{"Cubic magneto-elastic invariants restricted to in-plane loadings", kToolName};
    app.set_version_flag("--version", std::string(kToolName) + " " + kToolVersion);
    app.require_subcommand(1, 1);

    RunConfig config;
    std::string policy = "paper";
    std::string format = "text";

    auto add_common = [&](CLI::App* sub) {
        sub->add_option("--format", format, "text, json or latex")
            ->check(CLI::IsMember({"text", "json", "latex"}));
    };
    auto add_reduction = [&](CLI::App* sub) {
        sub->add_option("--policy", policy, "paper, table-order or reverse-table-order")
            ->check(CLI::IsMember({"paper", "table-order", "reverse-table-order"}));
        sub->add_option("--dmax", config.bounds.d_max, "highest total degree examined")->check(CLI::PositiveNumber);
        sub->add_option("--alpha-max", config.bounds.alpha_max, "highest magnetization degree examined")
            ->check(CLI::NonNegativeNumber);
        sub->add_flag("--all-bidegrees", config.all_bidegrees,
                      "also visit empty bi-degrees inside the bounds for product syzygies");
    };

    auto* catalog = app.add_subcommand("catalog", "list the 30 invariants and their generic expansions");
    add_common(catalog);

    auto* reduce = app.add_subcommand("reduce", "restrict to a fiber and extract a generating set");
    reduce->add_option("--fiber", config.fiber, "theta, alpha-prime, gamma or custom:PATH")->required();
    add_common(reduce);
    add_reduction(reduce);

    auto* verify = app.add_subcommand("verify", "check published relations and generating-set certificates");
    verify->add_option("--fiber", config.fiber, "theta, alpha-prime, gamma or custom:PATH (default: all three)");
    verify->add_option("--seed", config.seed, "seed of the numeric spot check");
    verify->add_option("--trials", config.trials, "random points per relation")->check(CLI::PositiveNumber);
    verify->add_option("--relations", config.relations_file, "published relations file (default: built in)");
    add_common(verify);
    add_reduction(verify);

    auto* union_cmd = app.add_subcommand("union", "compare the generating sets of the three fibers");
    add_common(union_cmd);
    add_reduction(union_cmd);

    try {
        app.parse(argc, argv);
    } catch (const CLI::Success& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    }

    if (catalog->parsed()) config.command = Command::Catalog;
    if (reduce->parsed()) config.command = Command::Reduce;
    if (verify->parsed()) config.command = Command::Verify;
    if (union_cmd->parsed()) config.command = Command::Union;
    config.policy = *parse_policy(policy);
    config.format = *parse_format(format);
    return run(config, std::cout, std::cerr);
}
