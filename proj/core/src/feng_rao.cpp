#include "nsg/feng_rao.hpp"

#include <algorithm>
#include <stdexcept>

namespace nsg::fengrao {

std::int64_t nu(const NumericalSemigroup& s, std::int64_t ell) {
    if (ell < 1) throw std::invalid_argument("nu requires ell >= 1");
    const std::int64_t rho = s.element_at_index(ell + 1);
    std::int64_t count = 0;
    for (std::int64_t a = 0; a <= rho; ++a)
        if (s.contains(a) && s.contains(rho - a)) ++count;
    return count;
}

std::int64_t d_ord(const NumericalSemigroup& s, std::int64_t ell) {
    if (ell < 1) throw std::invalid_argument("d_ord requires ell >= 1");
    const std::int64_t horizon = 2 * s.conductor() - s.genus() - 1;
    if (ell > horizon) return ell + 1 - s.genus();
    std::int64_t best = nu(s, horizon);  // nu is m + 1 - genus and increasing beyond
    for (std::int64_t m = ell; m < horizon; ++m) best = std::min(best, nu(s, m));
    return best;
}

std::int64_t OrderBoundTable::nu_at(std::int64_t ell) const {
    if (ell < 1) throw std::invalid_argument("nu_at requires ell >= 1");
    if (ell <= horizon) return nu_values[static_cast<std::size_t>(ell) - 1];
    return ell + 1 - semigroup.genus();
}

std::int64_t OrderBoundTable::d_ord_at(std::int64_t ell) const {
    if (ell < 1) throw std::invalid_argument("d_ord_at requires ell >= 1");
    if (ell <= horizon) return d_ord_values[static_cast<std::size_t>(ell) - 1];
    return ell + 1 - semigroup.genus();
}

OrderBoundTable build_table(const NumericalSemigroup& s) {
    if (s.genus() == 0) throw FullSemigroupError{"build_table"};
    OrderBoundTable t{s, 2 * s.conductor() - s.genus() - 1, {}, {}};
    t.nu_values.reserve(static_cast<std::size_t>(t.horizon));
    for (std::int64_t ell = 1; ell <= t.horizon; ++ell) t.nu_values.push_back(nu(s, ell));
    t.d_ord_values.assign(t.nu_values.size(), 0);
    std::int64_t acc = t.nu_values.back();  // nu at the horizon; the tail is larger
    for (std::int64_t ell = t.horizon; ell >= 1; --ell) {
        acc = std::min(acc, t.nu_values[static_cast<std::size_t>(ell) - 1]);
        t.d_ord_values[static_cast<std::size_t>(ell) - 1] = acc;
    }
    return t;
}

}  // namespace nsg::fengrao
