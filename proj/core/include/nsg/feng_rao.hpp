#pragma once

/**
 * @file feng_rao.hpp
 * @brief Feng-Rao function and order bound (designed minimum distance) for a
 *        numerical semigroup.
 *
 * With the elements ordered as rho_1 = 0 < rho_2 < rho_3 < ..., the Feng-Rao
 * function nu_ell counts the ordered pairs (a, b) of semigroup elements with
 * a + b = rho_{ell+1}.  The order bound for the ell-th dual one-point code is
 * d_ord(ell) = min{ nu_m : m >= ell }, a lower bound on its minimum distance.
 *
 * Both quantities stabilize at the horizon L = 2*conductor - genus - 1:
 * nu_m = m + 1 - genus for every m >= L, so the infinite minimum truncates
 * exactly, with no heuristic cutoff.
 */

#include <cstdint>
#include <vector>

#include "nsg/semigroup.hpp"

namespace nsg::fengrao {

/// Number of ordered pairs (a, b) of semigroup elements with a + b equal to
/// the (ell+1)-th element.  At least 2 for every ell >= 1 (the pairs with a
/// zero part always exist).
std::int64_t nu(const NumericalSemigroup& s, std::int64_t ell);

/// min{ nu(m) : m >= ell }, evaluated exactly by truncating at the
/// stabilization horizon; equals ell + 1 - genus for ell >= 2c - g - 1.
std::int64_t d_ord(const NumericalSemigroup& s, std::int64_t ell);

/// nu and d_ord tabulated over the full pre-stabilization range [1, horizon].
struct OrderBoundTable {
    NumericalSemigroup semigroup;
    std::int64_t horizon = 0;                 // 2*conductor - genus - 1
    std::vector<std::int64_t> nu_values;      // nu_values[ell-1] = nu(ell)
    std::vector<std::int64_t> d_ord_values;   // d_ord_values[ell-1] = d_ord(ell)

    /// nu at any ell >= 1; formula m + 1 - genus past the horizon.
    std::int64_t nu_at(std::int64_t ell) const;
    /// d_ord at any ell >= 1; formula ell + 1 - genus past the horizon.
    std::int64_t d_ord_at(std::int64_t ell) const;
};

/// Tabulates nu over [1, 2c-g-1] and the suffix minima in one backward sweep.
/// @throws FullSemigroupError for <1> (genus 0 has an empty range)
OrderBoundTable build_table(const NumericalSemigroup& s);

}  // namespace nsg::fengrao
