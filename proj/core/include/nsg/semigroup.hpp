#pragma once

/**
 * @file semigroup.hpp
 * @brief Numerical semigroups: membership, gaps, genus, conductor, minimal
 *        generating sets.
 *
 * A numerical semigroup is a subset of the natural numbers that contains 0,
 * is closed under addition, and has finite complement (equivalently, it is
 * generated by positive integers with gcd 1).  Membership is materialized as
 * a bitmap over [0, bound] with bound >= conductor + max(generators), so
 * every query beyond the table is decided by x >= conductor.
 *
 * All arithmetic is exact 64-bit integer arithmetic; construction rejects
 * generator sets whose membership table would not fit in memory.
 */

#include <cstdint>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

namespace nsg {

/// from_generators() was called with an empty generator list.
struct EmptyGeneratorsError : std::invalid_argument {
    EmptyGeneratorsError() : std::invalid_argument("generator list is empty") {}
};

/// gcd of the generators is not 1, so the complement would be infinite.
struct GcdNotOneError : std::invalid_argument {
    explicit GcdNotOneError(std::int64_t gcd)
        : std::invalid_argument("gcd of generators is " + std::to_string(gcd) +
                                ", expected 1 (complement must be finite)"),
          gcd_{gcd} {}
    std::int64_t gcd() const { return gcd_; }

   private:
    std::int64_t gcd_;
};

/// Operation undefined on the full semigroup <1> (genus 0).
struct FullSemigroupError : std::domain_error {
    explicit FullSemigroupError(const std::string& op)
        : std::domain_error(op + " is undefined for the full semigroup <1>") {}
};

/// index_of() was asked for a gap.
struct NotAnElementError : std::domain_error {
    explicit NotAnElementError(std::int64_t x)
        : std::domain_error(std::to_string(x) + " is not an element of the semigroup") {}
};

/// Is x a nonnegative integer combination of gens?  Bounded dynamic program
/// up to x; gens need not have gcd 1 (the span of any subset is allowed).
bool representable(std::span<const std::int64_t> gens, std::int64_t x);

/**
 * Immutable numerical semigroup with materialized membership.
 *
 * Invariants established at construction:
 *   - generators are sorted, distinct, positive, gcd 1
 *   - membership[x] is exact for all x in [0, bound]
 *   - bound >= conductor + max(generators)
 *   - genus = |{x < conductor : x not in S}|, frobenius = conductor - 1
 *     (frobenius = -1 for the full semigroup <1>)
 *
 * All methods are pure reads; instances are safe to share across threads.
 */
class NumericalSemigroup {
public:
    /**
     * Builds the semigroup generated by `gens`.
     *
     * Input is normalized (sorted, deduplicated).  The membership table is
     * auto-sized to conductor + max(gens); pass `min_bound` to force a
     * larger table.
     *
     * @throws EmptyGeneratorsError, GcdNotOneError
     * @throws std::invalid_argument on nonpositive entries
     * @throws std::overflow_error if the table cannot be sized safely
     */
    static NumericalSemigroup from_generators(std::vector<std::int64_t> gens,
                                              std::int64_t min_bound = 0);

    const std::vector<std::int64_t>& generators() const { return generators_; }
    std::int64_t bound() const { return static_cast<std::int64_t>(membership_.size()) - 1; }
    std::int64_t genus() const { return genus_; }
    std::int64_t conductor() const { return conductor_; }
    std::int64_t frobenius() const { return conductor_ > 0 ? conductor_ - 1 : -1; }
    /// Least nonzero element.
    std::int64_t multiplicity() const { return generators_.front(); }

    /// True iff x is a nonnegative integer combination of the generators.
    /// Total over all of Z: negative x is never a member.
    bool contains(std::int64_t x) const {
        if (x < 0) return false;
        if (x < static_cast<std::int64_t>(membership_.size()))
            return membership_[static_cast<std::size_t>(x)];
        return x >= conductor_;
    }

    /// The gap set N \ S in increasing order; size equals genus().
    std::vector<std::int64_t> gaps() const;

    /// frobenius == 2*genus - 1, equivalently x in S <=> frobenius - x not in S.
    /// @throws FullSemigroupError when genus == 0 (symmetry is undefined)
    bool is_symmetric() const;

    /// The unique minimal generating set: nonzero elements that are not the
    /// sum of two nonzero elements.
    std::vector<std::int64_t> minimal_generating_set() const;

    /// The ell-th smallest element (1-based; element_at_index(1) == 0).
    /// @throws std::invalid_argument on ell < 1
    std::int64_t element_at_index(std::int64_t ell) const;

    /// Inverse of element_at_index: the 1-based rank of x among the elements.
    /// @throws NotAnElementError when x is not in the semigroup
    std::int64_t index_of(std::int64_t x) const;

    /// Same subset of N (independent of table bounds).
    friend bool operator==(const NumericalSemigroup& a, const NumericalSemigroup& b) {
        return a.conductor_ == b.conductor_ && a.genus_ == b.genus_ && a.gaps() == b.gaps();
    }

private:
    NumericalSemigroup() = default;

    std::vector<std::int64_t> generators_;
    std::vector<bool> membership_;
    std::int64_t genus_ = 0;
    std::int64_t conductor_ = 0;
};

}  // namespace nsg
