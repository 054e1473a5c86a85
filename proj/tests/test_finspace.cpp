#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>

#include "mvhom/errors.hpp"
#include "mvhom/finspace.hpp"
#include "testutil.hpp"

using namespace mvhom;
using namespace mvtest;

TEST_CASE("make_space builds the interval and discrete models") {
    FinSpace i3 = i3_space();
    CHECK(i3.size() == 3);
    CHECK(i3.leq(i3.index_of("z"), i3.index_of("g")));
    CHECK(i3.leq(i3.index_of("u"), i3.index_of("g")));
    CHECK_FALSE(i3.leq(i3.index_of("z"), i3.index_of("u")));

    FinSpace s2 = discrete_space(2);
    CHECK(s2.size() == 2);
    CHECK_FALSE(s2.leq(0, 1));
    CHECK_FALSE(s2.leq(1, 0));

    CHECK_THROWS_AS(make_space({"p", "q"}, {{"p", "q"}, {"q", "p"}}, true), InputError);
    CHECK_THROWS_AS(make_space({"p"}, {{"p", "r"}}), InputError);
    // Without t0 the same pairs make a legal non-T0 preorder.
    FinSpace pq = make_space({"p", "q"}, {{"p", "q"}, {"q", "p"}});
    CHECK(pq.leq(0, 1));
    CHECK(pq.leq(1, 0));
}

TEST_CASE("closure in small spaces") {
    FinSpace i3 = i3_space();
    CHECK(closure_named(i3, {"g"}) == std::vector<std::string>{"g", "u", "z"});
    FinSpace s2 = discrete_space(2);
    CHECK(closure_named(s2, {"a"}) == std::vector<std::string>{"a"});
    FinSpace sp = sierpinski();
    CHECK(closure_named(sp, {"o"}) == std::vector<std::string>{"c", "o"});
    CHECK_THROWS_AS(closure_named(sp, {"x"}), InputError);
}

TEST_CASE("products") {
    FinSpace sp = sierpinski();
    FinSpace ss = product(sp, sp);
    CHECK(ss.size() == 4);
    int cc = ss.index_of("(c,c)"), oo = ss.index_of("(o,o)");
    int co = ss.index_of("(c,o)"), oc = ss.index_of("(o,c)");
    CHECK(ss.leq(cc, oo));
    CHECK(ss.leq(cc, co));
    CHECK(ss.leq(co, oo));
    CHECK_FALSE(ss.leq(co, oc));

    FinSpace s2 = discrete_space(2);
    FinSpace i3 = i3_space();
    FinSpace p = product(s2, i3);
    CHECK(p.size() == 6);
    CHECK(p.leq(p.index_of("(a,z)"), p.index_of("(a,g)")));
    CHECK_FALSE(p.leq(p.index_of("(a,z)"), p.index_of("(b,g)")));

    // pt x A is isomorphic to A via the pairing.
    FinSpace pt = make_space({"*"}, {});
    FinSpace pa = product(pt, i3);
    REQUIRE(pa.size() == i3.size());
    for (int i = 0; i < i3.size(); ++i)
        for (int j = 0; j < i3.size(); ++j) {
            int pi = pa.index_of(pair_name("*", i3.point(i)));
            int pj = pa.index_of(pair_name("*", i3.point(j)));
            CHECK(pa.leq(pi, pj) == i3.leq(i, j));
        }
}

TEST_CASE("subspaces") {
    FinSpace i3 = i3_space();
    FinSpace zu = subspace_named(i3, {"z", "u"});
    CHECK(zu.size() == 2);
    CHECK_FALSE(zu.leq(0, 1));
    CHECK_FALSE(zu.leq(1, 0));
    CHECK(subspace_named(i3, {"g", "u", "z"}) == i3);
    CHECK(subspace_named(i3, {}).size() == 0);
}

TEST_CASE("continuity is monotonicity") {
    auto i3 = share(i3_space());
    auto sp = share(sierpinski());
    CHECK(is_continuous(identity_map(i3)));
    // z,g -> o and u -> c: u <= g needs c <= o, which holds.
    ContMap f = make_map_named(i3, sp, {{"z", "o"}, {"g", "o"}, {"u", "c"}});
    CHECK(is_continuous(f));
    ContMap swap = make_map_named(sp, sp, {{"o", "c"}, {"c", "o"}});
    CHECK_FALSE(is_continuous(swap));
}

TEST_CASE("closedness of maps") {
    auto sp = share(sierpinski());
    auto ss = share(product(*sp, *sp));
    std::vector<int> proj(static_cast<size_t>(ss->size()));
    for (int i = 0; i < ss->size(); ++i) {
        // first-coordinate projection via names "(x,y)" with 1-char points
        const std::string& name = ss->point(i);
        proj[static_cast<size_t>(i)] = sp->index_of(name.substr(1, 1));
    }
    ContMap projection{ss, sp, proj};
    CHECK(is_continuous(projection));
    CHECK(is_closed_map(projection));

    auto open_pt = share(subspace_named(*sp, {"o"}));
    ContMap incl = make_map_named(open_pt, sp, {{"o", "o"}});
    CHECK_FALSE(is_closed_map(incl));

    auto s2 = share(discrete_space(2));
    auto s3 = share(discrete_space(3));
    ContMap any = make_map_named(s3, s2, {{"a", "b"}, {"b", "b"}, {"c", "a"}});
    CHECK(is_closed_map(any));

    ContMap swap = make_map_named(sp, sp, {{"o", "c"}, {"c", "o"}});
    CHECK_THROWS_AS(is_closed_map(swap), ValidityError);
}

TEST_CASE("closure is idempotent, monotone, extensive across sampled spaces") {
    Rng rng(20240811);
    std::vector<FinSpace> zoo = {discrete_space(1), discrete_space(3), sierpinski(),
                                 i3_space(), pseudocircle(),
                                 make_space(letter_names(4),
                                            {{"a", "b"}, {"b", "c"}, {"c", "d"}})};
    for (int t = 0; t < 60; ++t) zoo.push_back(random_space(rng, 8));
    for (const auto& space : zoo) {
        const int n = space.size();
        REQUIRE(n <= 8);
        for (uint32_t bits = 0; bits < (1u << n); ++bits) {
            std::vector<int> subset;
            for (int p = 0; p < n; ++p)
                if ((bits >> p) & 1) subset.push_back(p);
            auto cl = closure(space, subset);
            CHECK(closure(space, cl) == cl);                       // idempotent
            CHECK(std::includes(cl.begin(), cl.end(), subset.begin(), subset.end()));
            CHECK(is_closed_set(space, subset) == (cl == subset)); // closed iff fixed
            // monotone: closure of a subset of `subset`
            if (!subset.empty()) {
                std::vector<int> smaller(subset.begin(), subset.end() - 1);
                auto cl2 = closure(space, smaller);
                CHECK(std::includes(cl.begin(), cl.end(), cl2.begin(), cl2.end()));
            }
        }
    }
}

TEST_CASE("projections of products are continuous closed maps, exhaustively") {
    std::vector<FinSpace> spaces;
    for (int n = 1; n <= 3; ++n)
        for (auto& s : all_preorders(n)) spaces.push_back(std::move(s));
    for (const auto& a : spaces)
        for (const auto& b : spaces) {
            auto pa = share(a);
            auto pb = share(b);
            auto prod = share(product(a, b));
            std::vector<int> fst(static_cast<size_t>(prod->size()));
            std::vector<int> snd(static_cast<size_t>(prod->size()));
            for (int i = 0; i < a.size(); ++i)
                for (int j = 0; j < b.size(); ++j) {
                    int p = prod->index_of(pair_name(a.point(i), b.point(j)));
                    fst[static_cast<size_t>(p)] = i;
                    snd[static_cast<size_t>(p)] = j;
                }
            ContMap pr1{prod, pa, fst}, pr2{prod, pb, snd};
            REQUIRE(is_continuous(pr1));
            REQUIRE(is_continuous(pr2));
            REQUIRE(is_closed_map(pr1));
            REQUIRE(is_closed_map(pr2));
        }
}

namespace {

// Brute-force closedness: the image of every down-set is a down-set.
bool closed_by_definition(const ContMap& f) {
    const int n = f.dom->size(), m = f.cod->size();
    for (uint32_t bits = 0; bits < (1u << n); ++bits) {
        std::vector<int> subset;
        for (int p = 0; p < n; ++p)
            if ((bits >> p) & 1) subset.push_back(p);
        if (!is_closed_set(*f.dom, subset)) continue;
        std::vector<uint8_t> img(static_cast<size_t>(m), 0);
        for (int p : subset) img[static_cast<size_t>(f(p))] = 1;
        std::vector<int> image_set;
        for (int y = 0; y < m; ++y)
            if (img[static_cast<size_t>(y)]) image_set.push_back(y);
        if (!is_closed_set(*f.cod, image_set)) return false;
    }
    return true;
}

} // namespace

TEST_CASE("is_closed_map agrees with the brute-force definition") {
    // Exhaustive on all preorder pairs with <= 3 points.
    std::vector<SpacePtr> small;
    for (int n = 1; n <= 3; ++n)
        for (auto& s : all_preorders(n)) small.push_back(share(std::move(s)));
    for (const auto& dom : small)
        for (const auto& cod : small) {
            const int n = dom->size(), m = cod->size();
            std::vector<int> map(static_cast<size_t>(n), 0);
            for (;;) {
                ContMap f{dom, cod, map};
                if (is_continuous(f)) CHECK(is_closed_map(f) == closed_by_definition(f));
                int at = 0;
                while (at < n && ++map[static_cast<size_t>(at)] == m) map[static_cast<size_t>(at++)] = 0;
                if (at == n) break;
            }
        }
    // All 4-point domains against a fixed codomain zoo.
    std::vector<SpacePtr> cods = {share(discrete_space(2)), share(sierpinski()),
                                  share(make_space({"a", "b", "c"}, {{"a", "b"}, {"b", "c"}}))};
    for (auto& s : all_preorders(4)) {
        auto dom = share(std::move(s));
        for (const auto& cod : cods) {
            const int n = dom->size(), m = cod->size();
            std::vector<int> map(static_cast<size_t>(n), 0);
            for (;;) {
                ContMap f{dom, cod, map};
                if (is_continuous(f)) CHECK(is_closed_map(f) == closed_by_definition(f));
                int at = 0;
                while (at < n && ++map[static_cast<size_t>(at)] == m) map[static_cast<size_t>(at++)] = 0;
                if (at == n) break;
            }
        }
    }
}
