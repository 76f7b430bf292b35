#pragma once

// Brute-force reference implementations, deliberately structured unlike the
// production code: membership by memoized knapsack recursion instead of a
// forward DP sweep, element sets by closure iteration, pair counts by a
// double loop over explicit element lists.

#include <cstdint>
#include <set>
#include <vector>

namespace oracles {

// x representable as a nonnegative combination of gens[i..]?
inline bool knapsack_rec(const std::vector<std::int64_t>& gens, std::size_t i, std::int64_t x,
                         std::vector<std::vector<signed char>>& memo) {
    if (x == 0) return true;
    if (i == gens.size() || x < 0) return false;
    signed char& slot = memo[i][static_cast<std::size_t>(x)];
    if (slot != -1) return slot != 0;
    bool ok = knapsack_rec(gens, i + 1, x, memo) ||
              (x >= gens[i] && knapsack_rec(gens, i, x - gens[i], memo));
    slot = ok ? 1 : 0;
    return ok;
}

inline bool knapsack_contains(const std::vector<std::int64_t>& gens, std::int64_t x) {
    if (x < 0) return false;
    std::vector<std::vector<signed char>> memo(
        gens.size(), std::vector<signed char>(static_cast<std::size_t>(x) + 1, -1));
    return knapsack_rec(gens, 0, x, memo);
}

// All semigroup elements <= bound, by iterating closure from {0}.
inline std::set<std::int64_t> elements_up_to(const std::vector<std::int64_t>& gens,
                                             std::int64_t bound) {
    std::set<std::int64_t> elems{0};
    bool grew = true;
    while (grew) {
        grew = false;
        std::set<std::int64_t> next = elems;
        for (std::int64_t e : elems)
            for (std::int64_t g : gens)
                if (e + g <= bound && next.insert(e + g).second) grew = true;
        elems.swap(next);
    }
    return elems;
}

// Ordered pairs (a, b) of elements with a + b = target.
inline std::int64_t count_pairs(const std::set<std::int64_t>& elems, std::int64_t target) {
    std::int64_t count = 0;
    for (std::int64_t a : elems)
        for (std::int64_t b : elems)
            if (a + b == target) ++count;
    return count;
}

}  // namespace oracles
