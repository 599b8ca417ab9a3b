// skewbound: lower bounds for totally skew embeddings from dual Stiefel-Whitney classes.

#include "skewbound/cli.hpp"

#include <CLI11.hpp>

#include <iostream>
#include <string>

int main(int argc, char** argv)
{
    CLI::App app{"Lower bounds for totally skew embeddings from dual Stiefel-Whitney classes"};
    app.require_subcommand(1);

    std::string compute_expr;
    skew::ComputeOptions opts;
    auto* compute = app.add_subcommand("compute", "Dual classes, kmax and bounds for one manifold");
    compute->add_option("expr", compute_expr, "Manifold expression, e.g. RP(2)xRP(4) or G~(3,13)")->required();
    compute->add_flag("--json", opts.json, "Emit one flat JSON object");
    compute->add_flag("--classes", opts.classes, "List every non-zero dual class in normal form");
    compute->add_flag("--steenrod", opts.steenrod, "Also print Sq^1 and Sq^2 of each listed class");

    bool table_json = false;
    auto* table = app.add_subcommand("paper-table", "Recompute the published bounds and compare");
    table->add_flag("--json", table_json, "One JSON object per row");

    std::string verify_expr;
    auto* verify = app.add_subcommand("verify", "Cross-check the ring of a manifold against the linear-algebra oracle");
    verify->add_option("expr", verify_expr, "Manifold expression")->required();

    try {
        app.parse(argc, argv);
    }
    catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? skew::kExitOk : skew::kExitParseError;
    }

    if (*compute)
        return skew::cmd_compute(compute_expr, opts, std::cout, std::cerr);
    if (*table)
        return skew::cmd_paper_table(table_json, std::cout, std::cerr);
    return skew::cmd_verify(verify_expr, std::cout, std::cerr);
}
