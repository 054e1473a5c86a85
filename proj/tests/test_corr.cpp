#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "mvhom/corr.hpp"
#include "mvhom/errors.hpp"
#include "testutil.hpp"

using namespace mvhom;
using namespace mvtest;

namespace {

Corr corr_of(const SpacePtr& src, const SpacePtr& tgt,
             const std::vector<std::pair<std::string, std::string>>& pairs) {
    std::vector<std::pair<int, int>> idx;
    for (const auto& [x, y] : pairs) idx.push_back({src->index_of(x), tgt->index_of(y)});
    return Corr(src, tgt, std::move(idx));
}

std::vector<std::pair<std::string, std::string>> named_pairs(const Corr& c) {
    std::vector<std::pair<std::string, std::string>> out;
    for (const auto& [x, y] : c.pairs())
        out.push_back({c.source().point(x), c.target().point(y)});
    return out;
}

} // namespace

TEST_CASE("validate finds closed-projection and surjectivity failures") {
    FinSpace i3 = i3_space();
    FinSpace s2 = make_space({"x", "y"}, {});
    // Projected closure of (g,x) misses u.
    Validity bad = validate_named(i3, s2, {{"z", "x"}, {"g", "x"}, {"u", "y"}});
    CHECK_FALSE(bad.is_valid);
    REQUIRE_FALSE(bad.failures.empty());
    CHECK(bad.failures[0].criterion == "closed-projection");
    CHECK(bad.failures[0].witness == std::vector<std::string>{"g", "x", "u"});

    Validity good = validate_named(i3, s2, {{"z", "x"}, {"g", "x"}, {"u", "x"}, {"u", "y"}});
    CHECK(good.is_valid);

    Validity gap = validate_named(i3, s2, {{"z", "x"}, {"g", "x"}});
    CHECK_FALSE(gap.is_valid);
    bool has_surj = false;
    for (const auto& f : gap.failures) has_surj |= (f.criterion == "surjectivity");
    CHECK(has_surj);

    for (const auto& space : {i3_space(), sierpinski(), pseudocircle()}) {
        auto sp = share(space);
        CHECK(validate(*sp, *sp, identity_corr(sp).pairs()).is_valid);
    }
}

TEST_CASE("from_map makes graphs") {
    auto s2 = share(discrete_space(2));
    Corr id2 = from_map(identity_map(s2));
    CHECK(named_pairs(id2) ==
          std::vector<std::pair<std::string, std::string>>{{"a", "a"}, {"b", "b"}});

    auto i3 = share(i3_space());
    Corr c = from_map(make_map_named(i3, s2, {{"z", "a"}, {"g", "a"}, {"u", "a"}}));
    CHECK(c.pairs().size() == 3);

    auto sp = share(sierpinski());
    Corr path = from_map(make_map_named(i3, sp, {{"z", "o"}, {"g", "o"}, {"u", "c"}}));
    CHECK(path.pairs().size() == 3);

    ContMap swap = make_map_named(sp, sp, {{"o", "c"}, {"c", "o"}});
    CHECK_THROWS_AS(from_map(swap), ValidityError);
}

TEST_CASE("composition") {
    auto x = share(make_space({"p"}, {}));
    auto y = share(discrete_space(2));
    auto z = share(make_space({"u", "v"}, {}));
    Corr r = corr_of(x, y, {{"p", "a"}, {"p", "b"}});
    Corr s = corr_of(y, z, {{"a", "u"}, {"b", "v"}});
    Corr rs = compose(r, s);
    CHECK(named_pairs(rs) ==
          std::vector<std::pair<std::string, std::string>>{{"p", "u"}, {"p", "v"}});

    CHECK(compose(identity_corr(y), s) == s);
    Corr konst = constant_corr(y, z, {z->index_of("u")});
    CHECK(compose(r, konst) == constant_corr(x, z, {z->index_of("u")}));

    CHECK_THROWS_AS(compose(r, corr_of(x, y, {{"p", "a"}})), InputError);
}

TEST_CASE("box product") {
    auto x = share(i3_space());
    auto y = share(discrete_space(2));
    Corr idx = identity_corr(x), idy = identity_corr(y);
    CHECK(box(idx, idy) == identity_corr(share(product(*x, *y))));

    auto p1 = share(make_space({"p"}, {}));
    auto q1 = share(make_space({"q"}, {}));
    auto uu = share(make_space({"u"}, {}));
    Corr r = corr_of(p1, y, {{"p", "a"}, {"p", "b"}});
    Corr rp = corr_of(q1, uu, {{"q", "u"}});
    Corr b = box(r, rp);
    CHECK(named_pairs(b) == std::vector<std::pair<std::string, std::string>>{
                                {"(p,q)", "(a,u)"}, {"(p,q)", "(b,u)"}});
}

TEST_CASE("pullback and pushforward") {
    auto s2 = share(discrete_space(2));
    auto pt = share(make_space({"*"}, {}));
    auto z = share(make_space({"u", "v"}, {}));

    Corr s = corr_of(pt, z, {{"*", "u"}, {"*", "v"}});
    CHECK(pullback(identity_map(pt), s) == s);

    ContMap collapse = make_map_named(s2, pt, {{"a", "*"}, {"b", "*"}});
    Corr pulled = pullback(collapse, s);
    CHECK(named_pairs(pulled) == std::vector<std::pair<std::string, std::string>>{
                                     {"a", "u"}, {"a", "v"}, {"b", "u"}, {"b", "v"}});
    CHECK(pulled == compose(from_map(collapse), s));

    auto p1 = share(make_space({"p"}, {}));
    Corr r = corr_of(p1, s2, {{"p", "a"}, {"p", "b"}});
    CHECK(pushforward(r, identity_map(s2)) == r);
    auto c1 = share(make_space({"c"}, {}));
    ContMap g = make_map_named(s2, c1, {{"a", "c"}, {"b", "c"}});
    CHECK(named_pairs(pushforward(r, g)) ==
          std::vector<std::pair<std::string, std::string>>{{"p", "c"}});

    // pushforward(gr(f), g) = gr(g . f)
    Rng rng(7);
    for (int t = 0; t < 50; ++t) {
        auto a = share(random_space(rng, 4));
        auto b = share(random_space(rng, 4));
        auto c = share(random_space(rng, 4));
        ContMap f = random_monotone_map(rng, a, b);
        ContMap h = random_monotone_map(rng, b, c);
        CHECK(pushforward(from_map(f), h) == from_map(compose_maps(f, h)));
    }
}

TEST_CASE("constant correspondences") {
    auto i3 = share(i3_space());
    auto s2 = share(discrete_space(2));
    Corr c1 = constant_corr(i3, s2, {0});
    CHECK(c1.pairs().size() == 3);
    Corr c2 = constant_corr(s2, s2, {0, 1});
    CHECK(c2.pairs().size() == 4);
    CHECK_THROWS_AS(constant_corr(i3, s2, {}), InputError);

    // compose(constant(X, A), R) = constant(X, R(A))
    Rng rng(11);
    for (int t = 0; t < 50; ++t) {
        auto y = share(random_space(rng, 4));
        auto z = share(random_space(rng, 4));
        Corr r = random_valid_corr(rng, y, z);
        std::vector<int> value{rng.below(y->size())};
        Corr lhs = compose(constant_corr(i3, y, value), r);
        CHECK(lhs == constant_corr(i3, z, image(r, value)));
    }
}

TEST_CASE("gluing") {
    auto s2 = share(discrete_space(2));
    auto tgt = share(i3_space());
    Corr pa = corr_of(share(subspace_named(*s2, {"a"})), tgt, {{"a", "g"}});
    Corr pb = corr_of(share(subspace_named(*s2, {"b"})), tgt, {{"b", "u"}, {"b", "z"}});
    Corr glued = glue(s2, {{0}, {1}}, {pa, pb});
    CHECK(glued.pairs().size() == 3);
    CHECK(restrict_corr(glued, {0}) == pa);
    CHECK(restrict_corr(glued, {1}) == pb);

    Corr whole = corr_of(tgt, tgt, {{"z", "z"}, {"g", "g"}, {"u", "u"}});
    CHECK(glue(tgt, {{0, 1, 2}}, {restrict_corr(whole, {0, 1, 2})}) == whole);

    // Overlapping cover of a discrete pair that disagrees at the shared point.
    auto zu = share(make_space({"u", "z"}, {}));
    Corr part1 = corr_of(share(subspace_named(*zu, {"z"})), tgt, {{"z", "g"}});
    Corr part2 = corr_of(zu, tgt, {{"z", "u"}, {"u", "u"}});
    CHECK_THROWS_AS(glue(zu, {{1}, {0, 1}}, {part1, part2}), ValidityError);

    // Non-closed cover member is rejected.
    auto sp = share(sierpinski());
    Corr po = corr_of(share(subspace_named(*sp, {"o"})), tgt, {{"o", "g"}});
    Corr pall = identity_corr(sp);
    CHECK_THROWS_AS(glue(sp, {{sp->index_of("o")}, {0, 1}},
                         std::vector<Corr>{po, restrict_corr(pushforward(pall,
                             make_map_named(sp, tgt, {{"c", "z"}, {"o", "g"}})), {0, 1})}),
                    ValidityError);
}

TEST_CASE("image and restriction") {
    auto d3 = share(make_space({"1", "2", "3"}, {}));
    Corr funnel = corr_of(d3, d3, {{"1", "2"}, {"2", "2"}, {"3", "2"}});
    CHECK(image(funnel, {0, 1, 2}) == std::vector<int>{1});
    CHECK(image(funnel, {}).empty());
    Corr id3 = identity_corr(d3);
    CHECK(image(id3, {0, 2}) == std::vector<int>{0, 2});

    CHECK(restrict_corr(funnel, {0, 1, 2}) == funnel);
    auto i3 = share(i3_space());
    Corr konst = constant_corr(i3, d3, {1});
    Corr restricted = restrict_corr(konst, point_indices(*i3, {"z", "u"}));
    CHECK(restricted == constant_corr(share(subspace_named(*i3, {"z", "u"})), d3, {1}));
}

TEST_CASE("multivalued paths") {
    auto sp = share(sierpinski());
    Corr path = mpath(sp, {sp->index_of("o")}, {sp->index_of("c")});
    CHECK(named_pairs(path) == std::vector<std::pair<std::string, std::string>>{
                                   {"g1", "o"}, {"m0", "o"}, {"m1", "c"}});

    auto d2 = share(discrete_space(2));
    CHECK_THROWS_AS(mpath(d2, {0}, {1}), ValidityError);
    Corr still = mpath(d2, {0}, {0});
    CHECK(named_pairs(still) == std::vector<std::pair<std::string, std::string>>{
                                    {"g1", "a"}, {"m0", "a"}, {"m1", "a"}});

    // Endpoint fibers recover A and B on a connected space.
    auto i3 = share(i3_space());
    Corr p = mpath(i3, point_indices(*i3, {"z", "u"}), point_indices(*i3, {"g"}));
    int m0 = p.source().index_of("m0");
    int mk = p.source().index_of("m" + std::to_string(p.source().size() / 2));
    CHECK(point_names(*i3, p.fibers()[static_cast<size_t>(m0)]) ==
          std::vector<std::string>{"u", "z"});
    CHECK(point_names(*i3, p.fibers()[static_cast<size_t>(mk)]) ==
          std::vector<std::string>{"g"});
}

TEST_CASE("composition preserves validity and is associative") {
    Rng rng(20240812);
    for (int t = 0; t < 300; ++t) {
        auto x = share(random_space(rng, 5));
        auto y = share(random_space(rng, 5));
        auto z = share(random_space(rng, 5));
        auto w = share(random_space(rng, 5));
        Corr r = random_valid_corr(rng, x, y);
        Corr s = random_valid_corr(rng, y, z);
        Corr u = random_valid_corr(rng, z, w);
        Corr rs = compose(r, s); // constructor re-validates
        CHECK(validate(rs.source(), rs.target(), rs.pairs()).is_valid);
        CHECK(compose(rs, u) == compose(r, compose(s, u)));
    }
}

TEST_CASE("interchange of box and composition") {
    Rng rng(20240813);
    for (int t = 0; t < 200; ++t) {
        auto x = share(random_space(rng, 3));
        auto y = share(random_space(rng, 3));
        auto z = share(random_space(rng, 3));
        auto xp = share(random_space(rng, 3));
        auto yp = share(random_space(rng, 3));
        auto zp = share(random_space(rng, 3));
        Corr r = random_valid_corr(rng, x, y);
        Corr s = random_valid_corr(rng, y, z);
        Corr rp = random_valid_corr(rng, xp, yp);
        Corr sp = random_valid_corr(rng, yp, zp);
        CHECK(box(compose(r, s), compose(rp, sp)) == compose(box(r, rp), box(s, sp)));
    }
}

TEST_CASE("pullback functoriality") {
    Rng rng(20240814);
    for (int t = 0; t < 200; ++t) {
        auto x = share(random_space(rng, 4));
        auto y = share(random_space(rng, 4));
        auto z = share(random_space(rng, 4));
        auto w = share(random_space(rng, 4));
        ContMap f = random_monotone_map(rng, x, y);
        ContMap g = random_monotone_map(rng, y, z);
        Corr s = random_valid_corr(rng, z, w);
        CHECK(pullback(f, pullback(g, s)) == pullback(compose_maps(f, g), s));
        CHECK(pullback(identity_map(z), s) == s);
        CHECK(pullback(f, pullback(g, s)) == compose(from_map(f), compose(from_map(g), s)));
    }
}

TEST_CASE("gluing reproduces any valid correspondence from a closed cover") {
    Rng rng(20240815);
    int done = 0;
    while (done < 150) {
        auto x = share(random_space(rng, 5));
        auto y = share(random_space(rng, 4));
        Corr t = random_valid_corr(rng, x, y);
        // Closed cover out of point-closures, padded to exhaust the space.
        std::vector<std::vector<int>> cover;
        std::vector<uint8_t> hit(static_cast<size_t>(x->size()), 0);
        for (int p = 0; p < x->size(); ++p) {
            if (rng.chance(1, 2)) continue;
            auto cl = closure(*x, {p});
            for (int q : cl) hit[static_cast<size_t>(q)] = 1;
            cover.push_back(cl);
        }
        for (int p = 0; p < x->size(); ++p)
            if (!hit[static_cast<size_t>(p)]) {
                auto cl = closure(*x, {p});
                for (int q : cl) hit[static_cast<size_t>(q)] = 1;
                cover.push_back(cl);
            }
        std::vector<Corr> parts;
        for (const auto& member : cover) parts.push_back(restrict_corr(t, member));
        CHECK(glue(x, cover, parts) == t);
        ++done;
    }
}

TEST_CASE("fiber antitonicity characterizes validity over discrete targets") {
    for (int ny = 1; ny <= 2; ++ny) {
        FinSpace y = discrete_space(ny);
        for (int nx = 1; nx <= 3; ++nx) {
            for (const auto& x : all_preorders(nx)) {
                const int cells = nx * ny;
                for (uint32_t bits = 0; bits < (1u << cells); ++bits) {
                    std::vector<std::pair<int, int>> pairs;
                    for (int c = 0; c < cells; ++c)
                        if ((bits >> c) & 1) pairs.push_back({c / ny, c % ny});
                    bool valid = validate(x, y, pairs).is_valid;
                    // Oracle: all fibers nonempty, and x' <= x implies
                    // fiber(x') contains fiber(x).
                    std::vector<std::vector<uint8_t>> fib(
                        static_cast<size_t>(nx), std::vector<uint8_t>(static_cast<size_t>(ny), 0));
                    for (auto& [p, q] : pairs) fib[static_cast<size_t>(p)][static_cast<size_t>(q)] = 1;
                    bool oracle = true;
                    for (int p = 0; p < nx && oracle; ++p) {
                        bool nonempty = false;
                        for (int q = 0; q < ny; ++q) nonempty |= (fib[static_cast<size_t>(p)][static_cast<size_t>(q)] != 0);
                        oracle &= nonempty;
                    }
                    for (int p = 0; p < nx && oracle; ++p)
                        for (int pp = 0; pp < nx && oracle; ++pp) {
                            if (!x.leq(pp, p)) continue;
                            for (int q = 0; q < ny; ++q)
                                if (fib[static_cast<size_t>(p)][static_cast<size_t>(q)] &&
                                    !fib[static_cast<size_t>(pp)][static_cast<size_t>(q)])
                                    oracle = false;
                        }
                    CHECK(valid == oracle);
                }
            }
        }
    }
}

TEST_CASE("closed images: discrete targets vs the Sierpinski counterexample") {
    // Over a discrete target every image of a closed set is closed.
    Rng rng(20240816);
    for (int t = 0; t < 100; ++t) {
        auto x = share(random_space(rng, 4));
        auto y = share(discrete_space(1 + rng.below(3)));
        Corr corr = random_valid_corr(rng, x, y);
        for (uint32_t bits = 0; bits < (1u << x->size()); ++bits) {
            std::vector<int> subset;
            for (int p = 0; p < x->size(); ++p)
                if ((bits >> p) & 1) subset.push_back(p);
            if (!is_closed_set(*x, subset)) continue;
            CHECK(is_closed_set(*y, image(corr, subset)));
        }
    }
    // Non-Hausdorff target: T = {(c,o),(o,o)} on Sierpinski, A = {c} closed,
    // image {o} not closed.
    auto sp = share(sierpinski());
    Corr t = corr_of(sp, sp, {{"c", "o"}, {"o", "o"}});
    std::vector<int> a{sp->index_of("c")};
    CHECK(is_closed_set(*sp, a));
    auto img = image(t, a);
    CHECK(point_names(*sp, img) == std::vector<std::string>{"o"});
    CHECK_FALSE(is_closed_set(*sp, img));
}
