#include <algorithm>
#include <vector>

#include "doctest.h"

#include "nsg/feng_rao.hpp"
#include "nsg/semigroup.hpp"
#include "oracles.hpp"

using nsg::NumericalSemigroup;
namespace fr = nsg::fengrao;

namespace {

const std::vector<std::int64_t> kRationalQ8{8, 10, 12, 13};
const std::vector<std::int64_t> kGenericQ8{8, 12, 14, 15, 21, 25};

}  // namespace

TEST_CASE("nu on the full semigroup") {
    auto s = NumericalSemigroup::from_generators({1});
    CHECK(fr::nu(s, 1) == 2);  // rho_2 = 1: pairs (0,1), (1,0)
    CHECK(fr::nu(s, 5) == 6);
}

TEST_CASE("nu at ell=21 distinguishes the two q=8 semigroups") {
    auto rational = NumericalSemigroup::from_generators(kRationalQ8);
    auto generic = NumericalSemigroup::from_generators(kGenericQ8);
    CHECK(rational.element_at_index(22) == 35);
    CHECK(fr::nu(rational, 21) == 8);
    CHECK(fr::nu(generic, 21) == 10);
}

TEST_CASE("nu per index against frozen values") {
    auto rational = NumericalSemigroup::from_generators(kRationalQ8);
    auto generic = NumericalSemigroup::from_generators(kGenericQ8);
    std::vector<std::int64_t> rational_head{2, 2, 2, 2, 3, 4, 5, 4, 4, 4};
    std::vector<std::int64_t> generic_head{2, 2, 2, 2, 3, 4, 2, 4, 4, 5};
    for (std::int64_t ell = 1; ell <= 10; ++ell) {
        CHECK(fr::nu(rational, ell) == rational_head[static_cast<std::size_t>(ell - 1)]);
        CHECK(fr::nu(generic, ell) == generic_head[static_cast<std::size_t>(ell - 1)]);
    }
}

TEST_CASE("d_ord at the pinned q=8 rows") {
    auto rational = NumericalSemigroup::from_generators(kRationalQ8);
    auto generic = NumericalSemigroup::from_generators(kGenericQ8);
    CHECK(fr::d_ord(rational, 21) == 8);
    CHECK(fr::d_ord(generic, 21) == 10);
    CHECK(fr::d_ord(generic, 25) == 12);
    CHECK(fr::d_ord(rational, 41) == 28);  // horizon: 41 + 1 - 14
}

TEST_CASE("order bound table on <2,3>") {
    auto s = NumericalSemigroup::from_generators({2, 3});
    auto t = fr::build_table(s);
    CHECK(t.horizon == 2);
    CHECK(t.nu_values == std::vector<std::int64_t>{2, 2});
    CHECK(t.d_ord_values == std::vector<std::int64_t>{2, 2});
    for (std::int64_t ell = 2; ell <= 12; ++ell) CHECK(t.d_ord_at(ell) == ell);
}

TEST_CASE("build_table rejects genus zero") {
    auto s = NumericalSemigroup::from_generators({1});
    CHECK_THROWS_AS(fr::build_table(s), nsg::FullSemigroupError);
}

TEST_CASE("table horizons at q=8") {
    auto rational = fr::build_table(NumericalSemigroup::from_generators(kRationalQ8));
    auto generic = fr::build_table(NumericalSemigroup::from_generators(kGenericQ8));
    CHECK(rational.horizon == 41);  // 2*28 - 14 - 1
    CHECK(generic.horizon == 25);   // 2*20 - 14 - 1
    CHECK(rational.nu_values.size() == 41);
    CHECK(generic.d_ord_values.size() == 25);
}

TEST_CASE("nu equals the double-loop pair oracle up to the horizon") {
    for (const auto& gens : {kRationalQ8, kGenericQ8}) {
        auto s = NumericalSemigroup::from_generators(gens);
        auto t = fr::build_table(s);
        auto elems = oracles::elements_up_to(gens, s.element_at_index(t.horizon + 1));
        for (std::int64_t ell = 1; ell <= t.horizon; ++ell) {
            INFO("ell=", ell);
            auto rho = s.element_at_index(ell + 1);
            CHECK(t.nu_at(ell) == oracles::count_pairs(elems, rho));
        }
    }
}

TEST_CASE("stabilization: nu past the horizon follows rho + 1 - 2g") {
    for (const auto& gens : {kRationalQ8, kGenericQ8}) {
        auto s = NumericalSemigroup::from_generators(gens);
        auto t = fr::build_table(s);
        for (std::int64_t ell = t.horizon; ell < t.horizon + 10; ++ell) {
            auto rho = s.element_at_index(ell + 1);
            CHECK(rho >= 2 * s.conductor() - 1);
            CHECK(fr::nu(s, ell) == rho + 1 - 2 * s.genus());
            CHECK(t.nu_at(ell) == ell + 1 - s.genus());
        }
    }
}

TEST_CASE("order bound properties") {
    for (const auto& gens : {kRationalQ8, kGenericQ8}) {
        auto s = NumericalSemigroup::from_generators(gens);
        auto t = fr::build_table(s);

        for (std::int64_t ell = 1; ell <= t.horizon; ++ell) {
            CHECK(t.nu_at(ell) >= 2);
            CHECK(t.d_ord_at(ell) >= ell + 1 - s.genus());
            if (ell > 1) CHECK(t.d_ord_at(ell) >= t.d_ord_at(ell - 1));
            // suffix minimum recomputed from scratch
            std::int64_t lo = t.nu_at(t.horizon);
            for (std::int64_t m = ell; m <= t.horizon; ++m) lo = std::min(lo, t.nu_at(m));
            CHECK(t.d_ord_at(ell) == lo);
            CHECK(t.d_ord_at(ell) == fr::d_ord(s, ell));
        }
        for (std::int64_t ell = t.horizon; ell < t.horizon + 10; ++ell)
            CHECK(t.d_ord_at(ell) == ell + 1 - s.genus());
    }
}
