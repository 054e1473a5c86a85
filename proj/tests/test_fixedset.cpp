#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>

#include "mvhom/errors.hpp"
#include "mvhom/fixedset.hpp"
#include "testutil.hpp"

using namespace mvhom;
using namespace mvtest;

namespace {

// Exhaustive oracle: union of all fixed subsets (itself fixed, since images
// distribute over unions).
std::vector<int> greatest_fixed_by_search(const Corr& t) {
    const int n = t.source().size();
    std::vector<uint8_t> member(static_cast<size_t>(n), 0);
    for (uint32_t bits = 1; bits < (1u << n); ++bits) {
        std::vector<int> subset;
        for (int p = 0; p < n; ++p)
            if ((bits >> p) & 1) subset.push_back(p);
        if (is_fixed_subset(t, subset))
            for (int p : subset) member[static_cast<size_t>(p)] = 1;
    }
    std::vector<int> out;
    for (int p = 0; p < n; ++p)
        if (member[static_cast<size_t>(p)]) out.push_back(p);
    return out;
}

} // namespace

TEST_CASE("fixed subset checks") {
    auto d3 = share(make_space({"1", "2", "3"}, {}));
    Corr id3 = identity_corr(d3);
    CHECK(is_fixed_subset(id3, {0}));
    CHECK(is_fixed_subset(id3, {0, 1, 2}));

    Corr funnel(d3, d3, {{0, 1}, {1, 1}, {2, 1}});
    CHECK(is_fixed_subset(funnel, {1}));
    CHECK_FALSE(is_fixed_subset(funnel, {0, 1, 2}));
    CHECK_THROWS_AS(is_fixed_subset(funnel, std::vector<int>{7}), InputError);
}

TEST_CASE("greatest fixed subsets by iteration") {
    auto d3 = share(make_space({"1", "2", "3"}, {}));
    Corr id3 = identity_corr(d3);
    FixedSetReport r1 = greatest_fixed_subset(id3);
    CHECK(r1.fixed_set == std::vector<int>{0, 1, 2});
    CHECK(r1.stabilized_at == 0);

    Corr funnel(d3, d3, {{0, 1}, {1, 1}, {2, 1}});
    FixedSetReport r2 = greatest_fixed_subset(funnel);
    CHECK(point_names(*d3, r2.fixed_set) == std::vector<std::string>{"2"});
    CHECK(r2.iterations.size() == 2); // {1,2,3} then {2}
    CHECK(r2.stabilized_at == 1);

    Corr spin(d3, d3, {{0, 1}, {1, 2}, {2, 2}, {1, 0}});
    FixedSetReport r3 = greatest_fixed_subset(spin);
    CHECK(r3.fixed_set == std::vector<int>{0, 1, 2});
    CHECK(r3.stabilized_at == 0);
}

TEST_CASE("random self-correspondences stabilize to the greatest fixed subset") {
    Rng rng(20240823);
    for (int t = 0; t < 400; ++t) {
        auto x = share(random_space(rng, 6));
        Corr corr = random_valid_corr(rng, x, x);
        FixedSetReport report = greatest_fixed_subset(corr);
        CHECK_FALSE(report.fixed_set.empty());
        CHECK(is_fixed_subset(corr, report.fixed_set));
        CHECK(report.stabilized_at <= x->size());
        for (size_t k = 1; k < report.iterations.size(); ++k)
            CHECK(std::includes(report.iterations[k - 1].begin(), report.iterations[k - 1].end(),
                                report.iterations[k].begin(), report.iterations[k].end()));
        if (x->size() <= 4) {
            CHECK(report.fixed_set == greatest_fixed_by_search(corr));
        }
    }
}

TEST_CASE("iterates over discrete spaces stay closed; Sierpinski fails") {
    Rng rng(20240824);
    for (int t = 0; t < 100; ++t) {
        auto x = share(discrete_space(1 + rng.below(5)));
        Corr corr = random_valid_corr(rng, x, x);
        FixedSetReport report = greatest_fixed_subset(corr);
        for (const auto& it : report.iterations) CHECK(is_closed_set(*x, it));
    }
    // The regression pair: closed {c} with non-closed image {o}.
    auto sp = share(sierpinski());
    Corr t(sp, sp, {{sp->index_of("c"), sp->index_of("o")},
                    {sp->index_of("o"), sp->index_of("o")}});
    CHECK(is_closed_set(*sp, {sp->index_of("c")}));
    CHECK_FALSE(is_closed_set(*sp, image(t, {sp->index_of("c")})));
}
