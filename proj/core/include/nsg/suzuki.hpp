#pragma once

/**
 * @file suzuki.hpp
 * @brief Weierstrass semigroups at the points of the Suzuki curve
 *        Y^q + Y = X^{q0} (X^q + X), with q0 = 2^s and q = 2*q0^2.
 *
 * Exactly two semigroups occur as the point varies:
 *
 *   - at an F_q-rational point:  < q, q+q0, q+2q0, q+2q0+1 >
 *   - at every other point: the semigroup spanned by two explicit families
 *     F1 = { h*q - (ell+2k)*q0 - j } and F2 = { h*q - (2h-2q0-1)*q0 - (q0-1) },
 *     whose minimal generating set is
 *        nu(h,k) = h*q - k*q0 - floor((2h-k-2)/2),  1 <= h <= q0, 0 <= k <= 2h-2,
 *        mu(h)   = h*q - (2(h-q0)-1)*q0 - (q0-1),   q0+1 <= h <= 2q0.
 *
 * Both have genus q0*(q-1); the rational-point semigroup is symmetric, the
 * other is not.  verify_structure() re-derives every counting, disjointness,
 * interval and minimality claim behind these facts by exhaustive enumeration.
 */

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "nsg/semigroup.hpp"

namespace nsg::suzuki {

/// Parameter bundle (s, q0 = 2^s, q = 2*q0^2, genus = q0*(q-1)); s >= 1.
struct SuzukiParams {
    std::int64_t s;
    std::int64_t q0;
    std::int64_t q;
    std::int64_t genus;

    /// From the field size q; accepts exactly q = 2*4^s with s >= 1.
    /// @throws std::invalid_argument naming the constraint otherwise
    static SuzukiParams from_q(std::int64_t q);
    /// From the exponent s >= 1.
    static SuzukiParams from_s(std::int64_t s);
};

/// Admissible index (h, j, k, ell) of an element of family F1.
/// ell in {0,1}, j,k in [0, q0-1], h in [max(1, m_threshold(j,k,ell)), 2*q0].
struct F1Index {
    std::int64_t h;
    std::int64_t j;
    std::int64_t k;
    std::int64_t ell;
    friend auto operator<=>(const F1Index&, const F1Index&) = default;
};

/// Label of one generator of the non-rational-point semigroup.
struct GeneratorLabel {
    enum class Kind { nu, mu };
    Kind kind;
    std::int64_t h;
    std::int64_t k;      // meaningful for Kind::nu only
    std::int64_t value;
};

/// Lower admissibility threshold for h at a given (j, k, ell):
/// ceil( q0/(q0-1) * (j + k + ell - (k+ell)/q) ), evaluated in exact integer
/// arithmetic on the cleared-denominator form.
std::int64_t m_threshold(const SuzukiParams& p, std::int64_t j, std::int64_t k, std::int64_t ell);

/// All of F1 as an index -> value map (the indexing is part of the contract:
/// distinctness of values is a theorem worth checking, not an assumption).
std::map<F1Index, std::int64_t> family_f1(const SuzukiParams& p);

/// F2 as an h -> value map, h in [q0+1, 2*q0]; q0 values, all <= 2*genus - 2.
std::map<std::int64_t, std::int64_t> family_f2(const SuzukiParams& p);

/// The minimal generating set of the non-rational-point semigroup, labelled;
/// q0^2 + q0 pairwise-distinct values.
std::vector<GeneratorLabel> generator_set(const SuzukiParams& p);

/// Values of generator_set(), sorted.
std::vector<std::int64_t> generator_values(const SuzukiParams& p);

/// < q, q+q0, q+2q0, q+2q0+1 >; symmetric, genus q0*(q-1).
NumericalSemigroup rational_point_semigroup(const SuzukiParams& p);

/// Semigroup spanned by generator_set(); non-symmetric, genus q0*(q-1).
NumericalSemigroup nonrational_point_semigroup(const SuzukiParams& p);

/// floor((2h - (ell+2k) - 2)/2) - j for an admissible index: the number of
/// extra generators (beyond one) needed to express that element of F1.
/// Zero exactly when the element is itself a generator.
std::int64_t delta(const SuzukiParams& p, const F1Index& idx);

/// One verification check: id, expected vs actual (booleans as 0/1).
struct CheckResult {
    std::string id;
    std::int64_t expected;
    std::int64_t actual;
    bool pass;
};

struct VerificationReport {
    std::vector<CheckResult> checks;
    bool all_passed() const;
};

/**
 * Machine-verifies the structural facts about the two semigroups by direct
 * enumeration, independent of any case analysis:
 *
 *   f1_count                |F1| = 2*q0^3
 *   f1_distinct             F1 values pairwise distinct
 *   f1_in_range             |F1 cap [1, 2g-1]| = 2*q0^3 - 2*q0 - 1
 *   f2_count                |F2| = q0
 *   f2_in_range             all F2 values below 2g-1
 *   f1_f2_disjoint          F1 cap F2 empty
 *   interval_span           [2g-q+2, 2g+1] inside <F1 u F2>
 *   count_below_2g          |(F1 u F2 u {0}) cap [0, 2g-1]| = g
 *   gen_set_spans_families  <G> = <F1 u F2> (identical gap sets)
 *   gen_set_minimal         every generator outside the span of the others
 *   rational_symmetric      rational-point semigroup symmetric
 *   generic_nonsymmetric    non-rational-point semigroup non-symmetric
 *
 * Failures are report entries, never exceptions.
 */
VerificationReport verify_structure(const SuzukiParams& p);

}  // namespace nsg::suzuki
