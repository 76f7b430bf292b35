#include "nsg/code_tables.hpp"

#include <cassert>
#include <sstream>

#include "json.hpp"

#include "nsg/feng_rao.hpp"

namespace nsg::tables {

std::int64_t code_length(const suzuki::SuzukiParams& p) {
    return p.q * p.q * p.q * p.q + 2 * p.genus;
}

Comparison compare(const suzuki::SuzukiParams& p,
                   std::optional<std::int64_t> length_override) {
    const auto generic = suzuki::nonrational_point_semigroup(p);
    const auto rational = suzuki::rational_point_semigroup(p);
    const auto t1 = fengrao::build_table(generic);
    const auto t2 = fengrao::build_table(rational);
    const std::int64_t n = length_override.value_or(code_length(p));
    const std::int64_t horizon = std::max(t1.horizon, t2.horizon);

    Comparison out;
    for (std::int64_t ell = 1; ell <= horizon; ++ell) {
        std::int64_t d1 = t1.d_ord_at(ell);
        std::int64_t d2 = t2.d_ord_at(ell);
        if (d1 <= d2) continue;
        std::int64_t rho1 = generic.element_at_index(ell);
        std::int64_t rho2 = rational.element_at_index(ell);
        if (rho1 != rho2) {
            ++out.suppressed;
            continue;
        }
        assert(generic.index_of(rho1) == ell && rational.index_of(rho1) == ell);
        out.records.push_back({p.q, rho1, n, n - ell, d1, d2});
    }
    return out;
}

Format parse_format(const std::string& name) {
    if (name == "csv") return Format::csv;
    if (name == "markdown") return Format::markdown;
    if (name == "json") return Format::json;
    throw UnknownFormatError{name};
}

std::string render(const std::vector<CodeRecord>& records, Format format) {
    std::ostringstream out;
    switch (format) {
        case Format::csv:
            out << "rho_ell,n,dim,d1,d2\n";
            for (const auto& r : records)
                out << r.rho_ell << ',' << r.n << ',' << r.dim << ',' << r.d1 << ',' << r.d2
                    << '\n';
            return out.str();
        case Format::markdown:
            out << "| rho_ell | n | n-ell | d(C1) | d(C2) |\n";
            out << "| --- | --- | --- | --- | --- |\n";
            for (const auto& r : records)
                out << "| " << r.rho_ell << " | " << r.n << " | " << r.dim << " | " << r.d1
                    << " | " << r.d2 << " |\n";
            return out.str();
        case Format::json: {
            nlohmann::ordered_json arr = nlohmann::ordered_json::array();
            for (const auto& r : records)
                arr.push_back({{"rho_ell", r.rho_ell},
                               {"n", r.n},
                               {"dim", r.dim},
                               {"d1", r.d1},
                               {"d2", r.d2}});
            return arr.dump(2) + "\n";
        }
    }
    throw UnknownFormatError{"<invalid enum>"};
}

}  // namespace nsg::tables
