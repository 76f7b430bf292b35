#pragma once

/**
 * @file cli.hpp
 * @brief Command dispatch behind the szsg tool, kept in the library so the
 *        exact output text is testable without spawning a process.
 */

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>

namespace nsg::cli {

enum class Command { semigroup, verify, fengrao, table };
enum class PointKind { rational, generic };

struct CliConfig {
    Command command = Command::semigroup;
    std::int64_t q = 0;
    PointKind point = PointKind::generic;
    std::optional<std::int64_t> ell;
    std::string format = "csv";
    std::optional<std::string> output;
    std::optional<std::int64_t> length_override;
};

/**
 * Executes one command. Primary output goes to `out`, or to the file named
 * by config.output when set; diagnostics go to `err`.
 *
 * Exit status: 2 for invalid arguments (bad q, non-positive ell, unknown
 * format, unwritable output), 1 when `verify` finds a failing check,
 * 0 otherwise.
 */
int run(const CliConfig& config, std::ostream& out, std::ostream& err);

}  // namespace nsg::cli
