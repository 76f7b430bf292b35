#include "nsg/semigroup.hpp"

#include <algorithm>
#include <limits>
#include <numeric>

namespace nsg {

namespace {

// Hard cap on membership table entries (bits).  Keeps pathological generator
// sets from exhausting memory before the overflow checks trip.
constexpr std::int64_t kMaxTableSize = std::int64_t{1} << 31;

std::vector<bool> closure_sweep(const std::vector<std::int64_t>& gens, std::int64_t upto) {
    std::vector<bool> mem(static_cast<std::size_t>(upto) + 1, false);
    mem[0] = true;
    for (std::int64_t x = gens.front(); x <= upto; ++x) {
        for (std::int64_t g : gens) {
            if (g > x) break;
            if (mem[static_cast<std::size_t>(x - g)]) {
                mem[static_cast<std::size_t>(x)] = true;
                break;
            }
        }
    }
    return mem;
}

std::int64_t last_gap_below(const std::vector<bool>& mem) {
    for (std::int64_t x = static_cast<std::int64_t>(mem.size()) - 1; x >= 0; --x)
        if (!mem[static_cast<std::size_t>(x)]) return x;
    return -1;
}

}  // namespace

bool representable(std::span<const std::int64_t> gens, std::int64_t x) {
    if (x < 0) return false;
    if (x == 0) return true;
    std::vector<bool> mem(static_cast<std::size_t>(x) + 1, false);
    mem[0] = true;
    for (std::int64_t y = 1; y <= x; ++y)
        for (std::int64_t g : gens)
            if (g >= 1 && g <= y && mem[static_cast<std::size_t>(y - g)]) {
                mem[static_cast<std::size_t>(y)] = true;
                break;
            }
    return mem[static_cast<std::size_t>(x)];
}

NumericalSemigroup NumericalSemigroup::from_generators(std::vector<std::int64_t> gens,
                                                       std::int64_t min_bound) {
    if (gens.empty()) throw EmptyGeneratorsError{};
    for (std::int64_t g : gens)
        if (g < 1) throw std::invalid_argument("generators must be positive, got " + std::to_string(g));

    std::sort(gens.begin(), gens.end());
    gens.erase(std::unique(gens.begin(), gens.end()), gens.end());

    std::int64_t d = 0;
    for (std::int64_t g : gens) d = std::gcd(d, g);
    if (d != 1) throw GcdNotOneError{d};

    const std::int64_t mult = gens.front();
    const std::int64_t top = gens.back();

    // The Frobenius number of a coprime generator set is below mult*top, so
    // one sweep to mult*top + top already decides conductor and closure.  The
    // growth loop re-sweeps only if the tail run is too short to certify it.
    if (top > (kMaxTableSize - top) / mult)
        throw std::overflow_error("generator magnitudes too large to materialize membership");
    std::int64_t sweep = mult * top + top;
    if (min_bound > sweep) {
        if (min_bound >= kMaxTableSize)
            throw std::overflow_error("requested bound too large to materialize membership");
        sweep = min_bound;
    }

    std::vector<bool> mem;
    std::int64_t last_gap;
    for (;;) {
        mem = closure_sweep(gens, sweep);
        last_gap = last_gap_below(mem);
        // A run of >= multiplicity consecutive elements after the last gap
        // certifies that everything beyond is in the semigroup.
        if (sweep - last_gap >= mult) break;
        if (sweep > kMaxTableSize / 2)
            throw std::overflow_error("membership table grew past the size cap");
        sweep *= 2;
    }

    NumericalSemigroup s;
    s.conductor_ = last_gap + 1;
    const std::int64_t bound = std::max(s.conductor_ + top, min_bound);
    if (static_cast<std::int64_t>(mem.size()) > bound + 1)
        mem.resize(static_cast<std::size_t>(bound) + 1);
    else
        mem.resize(static_cast<std::size_t>(bound) + 1, true);  // all >= conductor
    s.generators_ = std::move(gens);
    s.membership_ = std::move(mem);
    s.genus_ = static_cast<std::int64_t>(
        std::count(s.membership_.begin(), s.membership_.begin() + s.conductor_, false));
    return s;
}

std::vector<std::int64_t> NumericalSemigroup::gaps() const {
    std::vector<std::int64_t> out;
    out.reserve(static_cast<std::size_t>(genus_));
    for (std::int64_t x = 0; x < conductor_; ++x)
        if (!membership_[static_cast<std::size_t>(x)]) out.push_back(x);
    return out;
}

bool NumericalSemigroup::is_symmetric() const {
    if (genus_ == 0) throw FullSemigroupError{"is_symmetric"};
    return frobenius() == 2 * genus_ - 1;
}

std::vector<std::int64_t> NumericalSemigroup::minimal_generating_set() const {
    // Every element >= conductor + multiplicity splits as m + (x - m), so
    // candidates live in [multiplicity, conductor + multiplicity - 1].
    const std::int64_t m = multiplicity();
    const std::int64_t hi = std::max(conductor_ + m - 1, m);
    std::vector<std::int64_t> out;
    for (std::int64_t x = m; x <= hi; ++x) {
        if (!contains(x)) continue;
        bool decomposable = false;
        for (std::int64_t a = m; a <= x - m; ++a)
            if (contains(a) && contains(x - a)) {
                decomposable = true;
                break;
            }
        if (!decomposable) out.push_back(x);
    }
    return out;
}

std::int64_t NumericalSemigroup::element_at_index(std::int64_t ell) const {
    if (ell < 1) throw std::invalid_argument("element index must be >= 1, got " + std::to_string(ell));
    // rho_ell = ell - 1 + genus once rho_ell >= conductor.
    if (ell >= conductor_ - genus_ + 1) return ell - 1 + genus_;
    std::int64_t count = 0;
    for (std::int64_t x = 0; x < conductor_; ++x)
        if (membership_[static_cast<std::size_t>(x)] && ++count == ell) return x;
    return ell - 1 + genus_;  // unreachable: ell < conductor - genus + 1 is found above
}

std::int64_t NumericalSemigroup::index_of(std::int64_t x) const {
    if (!contains(x)) throw NotAnElementError{x};
    if (x >= conductor_) return x + 1 - genus_;
    std::int64_t count = 0;
    for (std::int64_t y = 0; y <= x; ++y)
        if (membership_[static_cast<std::size_t>(y)]) ++count;
    return count;
}

}  // namespace nsg
