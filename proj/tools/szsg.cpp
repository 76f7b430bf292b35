#include <cstdint>
#include <iostream>
#include <string>

#include "CLI11.hpp"

#include "nsg/cli.hpp"

int main(int argc, char** argv) {
    CLI::App app{"Weierstrass semigroups and one-point code bounds on Suzuki curves"};
    app.require_subcommand(1);

    std::int64_t q = 0;
    std::string point = "generic";
    std::int64_t ell = 0;
    std::string format = "csv";
    std::string output;
    std::int64_t length = 0;

    auto add_common = [&](CLI::App* sub) {
        sub->add_option("--q", q, "field size, 2*4^s with s >= 1")->required();
        sub->add_option("--output", output, "write output to this file instead of stdout");
    };
    auto add_point = [&](CLI::App* sub) {
        sub->add_option("--point", point, "point type (default generic)")
            ->check(CLI::IsMember({"rational", "generic"}));
    };

    auto* sg = app.add_subcommand("semigroup", "print the Weierstrass semigroup at a point");
    add_common(sg);
    add_point(sg);

    auto* verify = app.add_subcommand("verify", "machine-verify the structural lemmas");
    add_common(verify);

    auto* fengrao = app.add_subcommand("fengrao", "print Feng-Rao numbers and order bounds");
    add_common(fengrao);
    add_point(fengrao);
    auto* ell_opt = fengrao->add_option("--ell", ell, "single index (omit for the full table)");

    auto* table = app.add_subcommand("table", "emit the designed-distance comparison table");
    add_common(table);
    table->add_option("--format", format, "csv, markdown or json (default csv)");
    auto* length_opt =
        table->add_option("--length", length, "override the code length column");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        std::cerr << "error: " << e.what() << '\n' << app.help() << '\n';
        return 2;
    }

    nsg::cli::CliConfig config;
    config.q = q;
    config.format = format;
    if (!output.empty()) config.output = output;
    if (*ell_opt) config.ell = ell;
    if (*length_opt) config.length_override = length;
    config.point =
        point == "rational" ? nsg::cli::PointKind::rational : nsg::cli::PointKind::generic;
    if (sg->parsed()) config.command = nsg::cli::Command::semigroup;
    if (verify->parsed()) config.command = nsg::cli::Command::verify;
    if (fengrao->parsed()) config.command = nsg::cli::Command::fengrao;
    if (table->parsed()) config.command = nsg::cli::Command::table;

    return nsg::cli::run(config, std::cout, std::cerr);
}
