#include "nsg/cli.hpp"

#include <fstream>
#include <ostream>
#include <sstream>
#include <stdexcept>

#include "nsg/code_tables.hpp"
#include "nsg/feng_rao.hpp"
#include "nsg/semigroup.hpp"
#include "nsg/suzuki.hpp"

namespace nsg::cli {

namespace {

NumericalSemigroup pick_semigroup(const suzuki::SuzukiParams& p, PointKind point) {
    return point == PointKind::rational ? suzuki::rational_point_semigroup(p)
                                        : suzuki::nonrational_point_semigroup(p);
}

void print_semigroup(std::ostream& out, const NumericalSemigroup& s) {
    out << "generators:";
    for (auto gen : s.minimal_generating_set()) out << ' ' << gen;
    out << '\n';
    out << "genus: " << s.genus() << '\n';
    out << "conductor: " << s.conductor() << '\n';
    out << "gaps:";
    for (auto gap : s.gaps()) out << ' ' << gap;
    out << '\n';
    out << "symmetric: " << (s.is_symmetric() ? "true" : "false") << '\n';
}

int print_verification(std::ostream& out, const suzuki::SuzukiParams& p) {
    const auto report = suzuki::verify_structure(p);
    std::int64_t failed = 0;
    for (const auto& check : report.checks) {
        out << (check.pass ? "[PASS] " : "[FAIL] ") << check.id << ": expected "
            << check.expected << ", actual " << check.actual << '\n';
        if (!check.pass) ++failed;
    }
    if (failed == 0) {
        out << "all " << report.checks.size() << " checks passed\n";
        return 0;
    }
    out << failed << " of " << report.checks.size() << " checks failed\n";
    return 1;
}

void print_fengrao(std::ostream& out, const NumericalSemigroup& s,
                   std::optional<std::int64_t> ell) {
    const auto table = fengrao::build_table(s);
    out << "ell rho_ell nu d_ord\n";
    auto row = [&](std::int64_t l) {
        out << l << ' ' << s.element_at_index(l) << ' ' << table.nu_at(l) << ' '
            << table.d_ord_at(l) << '\n';
    };
    if (ell) {
        row(*ell);
        return;
    }
    for (std::int64_t l = 1; l <= table.horizon; ++l) row(l);
}

}  // namespace

int run(const CliConfig& config, std::ostream& out, std::ostream& err) {
    suzuki::SuzukiParams params{};
    try {
        params = suzuki::SuzukiParams::from_q(config.q);
    } catch (const std::invalid_argument& e) {
        err << "error: " << e.what() << '\n';
        return 2;
    }
    if (config.ell && *config.ell < 1) {
        err << "error: --ell must be a positive integer; got " << *config.ell << '\n';
        return 2;
    }
    if (config.length_override && *config.length_override < 1) {
        err << "error: --length must be a positive integer; got " << *config.length_override
            << '\n';
        return 2;
    }

    std::ostringstream text;
    int status = 0;
    try {
        switch (config.command) {
            case Command::semigroup:
                print_semigroup(text, pick_semigroup(params, config.point));
                break;
            case Command::verify:
                status = print_verification(text, params);
                break;
            case Command::fengrao:
                print_fengrao(text, pick_semigroup(params, config.point), config.ell);
                break;
            case Command::table: {
                const auto format = tables::parse_format(config.format);
                text << tables::render(tables::compare(params, config.length_override), format);
                break;
            }
        }
    } catch (const std::invalid_argument& e) {
        err << "error: " << e.what() << '\n';
        return 2;
    }

    if (config.output) {
        std::ofstream file{*config.output};
        if (!file) {
            err << "error: cannot open output file: " << *config.output << '\n';
            return 2;
        }
        file << text.str();
        if (!file.flush()) {
            err << "error: failed writing output file: " << *config.output << '\n';
            return 2;
        }
    } else {
        out << text.str();
    }
    return status;
}

}  // namespace nsg::cli
