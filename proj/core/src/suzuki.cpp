#include "nsg/suzuki.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>
#include <utility>

namespace nsg::suzuki {

namespace {

// floor(x/2) for any sign of x
std::int64_t floor_half(std::int64_t x) {
    return (x >= 0) ? x / 2 : -((-x + 1) / 2);
}

std::vector<std::int64_t> sorted_values(const std::map<F1Index, std::int64_t>& f1,
                                        const std::map<std::int64_t, std::int64_t>& f2) {
    std::set<std::int64_t> vals;
    for (const auto& [idx, v] : f1) vals.insert(v);
    for (const auto& [h, v] : f2) vals.insert(v);
    return {vals.begin(), vals.end()};
}

}  // namespace

SuzukiParams SuzukiParams::from_q(std::int64_t q) {
    // q = 2*4^s  <=>  q/2 is an even power of two
    std::int64_t half = q / 2;
    bool ok = q >= 8 && q % 2 == 0 && (half & (half - 1)) == 0;
    if (ok) {
        std::int64_t s = 0;
        for (std::int64_t t = half; t > 1; t >>= 2) ++s;
        ok = (std::int64_t{1} << (2 * s)) == half && s >= 1;
        if (ok) return from_s(s);
    }
    throw std::invalid_argument{"q must be 2*4^s for some s >= 1 (8, 32, 128, ...); got " +
                                std::to_string(q)};
}

SuzukiParams SuzukiParams::from_s(std::int64_t s) {
    if (s < 1) throw std::invalid_argument{"s must be >= 1; got " + std::to_string(s)};
    if (s > 20) throw std::invalid_argument{"s too large; got " + std::to_string(s)};
    std::int64_t q0 = std::int64_t{1} << s;
    std::int64_t q = 2 * q0 * q0;
    return SuzukiParams{s, q0, q, q0 * (q - 1)};
}

std::int64_t m_threshold(const SuzukiParams& p, std::int64_t j, std::int64_t k, std::int64_t ell) {
    // ceil( q0 * (q*(j+k+ell) - (k+ell)) / ((q0-1)*q) ); numerator >= 0
    std::int64_t a = p.q0 * (p.q * (j + k + ell) - (k + ell));
    std::int64_t b = (p.q0 - 1) * p.q;
    return (a + b - 1) / b;
}

std::map<F1Index, std::int64_t> family_f1(const SuzukiParams& p) {
    std::map<F1Index, std::int64_t> out;
    for (std::int64_t ell = 0; ell <= 1; ++ell)
        for (std::int64_t k = 0; k < p.q0; ++k)
            for (std::int64_t j = 0; j < p.q0; ++j) {
                std::int64_t lo = std::max<std::int64_t>(1, m_threshold(p, j, k, ell));
                for (std::int64_t h = lo; h <= 2 * p.q0; ++h)
                    out.emplace(F1Index{h, j, k, ell}, h * p.q - (ell + 2 * k) * p.q0 - j);
            }
    return out;
}

std::map<std::int64_t, std::int64_t> family_f2(const SuzukiParams& p) {
    std::map<std::int64_t, std::int64_t> out;
    for (std::int64_t h = p.q0 + 1; h <= 2 * p.q0; ++h)
        out.emplace(h, h * p.q - (2 * h - 2 * p.q0 - 1) * p.q0 - (p.q0 - 1));
    return out;
}

std::vector<GeneratorLabel> generator_set(const SuzukiParams& p) {
    std::vector<GeneratorLabel> out;
    out.reserve(static_cast<std::size_t>(p.q0 * p.q0 + p.q0));
    for (std::int64_t h = 1; h <= p.q0; ++h)
        for (std::int64_t k = 0; k <= 2 * h - 2; ++k)
            out.push_back({GeneratorLabel::Kind::nu, h, k,
                           h * p.q - k * p.q0 - (2 * h - k - 2) / 2});
    for (const auto& [h, v] : family_f2(p))
        out.push_back({GeneratorLabel::Kind::mu, h, 0, v});
    return out;
}

std::vector<std::int64_t> generator_values(const SuzukiParams& p) {
    std::vector<std::int64_t> vals;
    for (const auto& g : generator_set(p)) vals.push_back(g.value);
    std::sort(vals.begin(), vals.end());
    return vals;
}

NumericalSemigroup rational_point_semigroup(const SuzukiParams& p) {
    return NumericalSemigroup::from_generators(
        {p.q, p.q + p.q0, p.q + 2 * p.q0, p.q + 2 * p.q0 + 1});
}

NumericalSemigroup nonrational_point_semigroup(const SuzukiParams& p) {
    return NumericalSemigroup::from_generators(generator_values(p));
}

std::int64_t delta(const SuzukiParams& p, const F1Index& idx) {
    (void)p;
    return floor_half(2 * idx.h - (idx.ell + 2 * idx.k) - 2) - idx.j;
}

bool VerificationReport::all_passed() const {
    return std::all_of(checks.begin(), checks.end(),
                       [](const CheckResult& c) { return c.pass; });
}

VerificationReport verify_structure(const SuzukiParams& p) {
    VerificationReport report;
    auto add = [&report](std::string id, std::int64_t expected, std::int64_t actual) {
        report.checks.push_back({std::move(id), expected, actual, expected == actual});
    };

    const auto f1 = family_f1(p);
    const auto f2 = family_f2(p);
    const std::int64_t g = p.genus;

    std::set<std::int64_t> f1_values;
    for (const auto& [idx, v] : f1) f1_values.insert(v);

    add("f1_count", 2 * p.q0 * p.q0 * p.q0, static_cast<std::int64_t>(f1.size()));
    add("f1_distinct", static_cast<std::int64_t>(f1.size()),
        static_cast<std::int64_t>(f1_values.size()));

    std::int64_t in_range = std::count_if(f1_values.begin(), f1_values.end(),
                                          [g](std::int64_t v) { return 1 <= v && v <= 2 * g - 1; });
    add("f1_in_range", 2 * p.q0 * p.q0 * p.q0 - 2 * p.q0 - 1, in_range);

    add("f2_count", p.q0, static_cast<std::int64_t>(f2.size()));
    std::int64_t f2_below = 0;
    std::int64_t overlap = 0;
    for (const auto& [h, v] : f2) {
        if (1 <= v && v < 2 * g - 1) ++f2_below;
        if (f1_values.count(v)) ++overlap;
    }
    add("f2_in_range", p.q0, f2_below);
    add("f1_f2_disjoint", 0, overlap);

    const auto family_union = sorted_values(f1, f2);
    const auto span = NumericalSemigroup::from_generators(family_union);
    std::int64_t interval_hits = 0;
    for (std::int64_t x = 2 * g - p.q + 2; x <= 2 * g + 1; ++x)
        if (span.contains(x)) ++interval_hits;
    add("interval_span", p.q, interval_hits);

    std::set<std::int64_t> with_zero{family_union.begin(), family_union.end()};
    with_zero.insert(0);
    std::int64_t below_2g = std::count_if(with_zero.begin(), with_zero.end(),
                                          [g](std::int64_t v) { return 0 <= v && v <= 2 * g - 1; });
    add("count_below_2g", g, below_2g);

    const auto gens = generator_values(p);
    add("gen_set_spans_families", 1, NumericalSemigroup::from_generators(gens) == span ? 1 : 0);

    std::int64_t independent = 0;
    for (std::size_t i = 0; i < gens.size(); ++i) {
        std::vector<std::int64_t> others;
        others.reserve(gens.size() - 1);
        for (std::size_t j = 0; j < gens.size(); ++j)
            if (j != i) others.push_back(gens[j]);
        if (!representable(others, gens[i])) ++independent;
    }
    add("gen_set_minimal", static_cast<std::int64_t>(gens.size()), independent);

    add("rational_symmetric", 1, rational_point_semigroup(p).is_symmetric() ? 1 : 0);
    add("generic_nonsymmetric", 0, nonrational_point_semigroup(p).is_symmetric() ? 1 : 0);

    return report;
}

}  // namespace nsg::suzuki
