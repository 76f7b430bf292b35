#pragma once

/**
 * @file code_tables.hpp
 * @brief Designed-distance comparison tables for the dual one-point codes
 *        attached to the two Suzuki-curve point types.
 *
 * For each index ell the two semigroups yield order bounds d1 (non-rational
 * point) and d2 (rational point) on codes of the same length and dimension.
 * compare() scans every ell up to the larger stabilization horizon, beyond
 * which both bounds equal ell+1-g and can never differ, and keeps the rows
 * where the same divisor degree rho_ell occurs in both semigroups with
 * d1 > d2.
 */

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "nsg/suzuki.hpp"

namespace nsg::tables {

/// One comparison row: shared divisor degree rho_ell, code length n,
/// dimension n - ell, and the two order bounds (d1 from the non-rational
/// point, d2 from the rational point).
struct CodeRecord {
    std::int64_t q;
    std::int64_t rho_ell;
    std::int64_t n;
    std::int64_t dim;
    std::int64_t d1;
    std::int64_t d2;
    friend bool operator==(const CodeRecord&, const CodeRecord&) = default;
};

/// Code length used in the n column: q^4 + 2*genus.
std::int64_t code_length(const suzuki::SuzukiParams& p);

struct Comparison {
    std::vector<CodeRecord> records;
    /// Indices where d1 > d2 but the two ell-th non-gaps differ, so no row
    /// with a shared rho_ell exists; nonzero values deserve a second look.
    std::int64_t suppressed = 0;
};

/// Scans ell in [1, max horizon] and collects the rows where the
/// non-rational point strictly beats the rational one at equal rho_ell.
/// Rows come out sorted by rho_ell. The n column uses code_length(p)
/// unless an override is supplied.
Comparison compare(const suzuki::SuzukiParams& p,
                   std::optional<std::int64_t> length_override = std::nullopt);

enum class Format { csv, markdown, json };

struct UnknownFormatError : std::invalid_argument {
    explicit UnknownFormatError(const std::string& name)
        : std::invalid_argument{"unknown format: " + name + " (expected csv, markdown or json)"} {}
};

/// @throws UnknownFormatError for anything but "csv", "markdown", "json"
Format parse_format(const std::string& name);

/// Byte-stable text form; every line newline-terminated.
/// csv: header "rho_ell,n,dim,d1,d2" then one row per record.
/// markdown: pipe table mirroring the published layout.
/// json: array of objects with the five integer fields.
std::string render(const std::vector<CodeRecord>& records, Format format);

inline std::string render(const Comparison& cmp, Format format) {
    return render(cmp.records, format);
}

}  // namespace nsg::tables
