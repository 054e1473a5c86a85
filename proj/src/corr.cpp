#include "mvhom/corr.hpp"

#include <algorithm>
#include <deque>
#include <set>

#include "mvhom/errors.hpp"

namespace mvhom {

namespace {

std::vector<std::pair<int, int>> canonical_pairs(std::vector<std::pair<int, int>> pairs) {
    std::sort(pairs.begin(), pairs.end());
    pairs.erase(std::unique(pairs.begin(), pairs.end()), pairs.end());
    return pairs;
}

std::string validity_message(const Validity& v, const FinSpace& source, const FinSpace& target) {
    (void)target;
    std::string msg = "invalid correspondence over " + std::to_string(source.size()) + "-point source:";
    for (const auto& f : v.failures) {
        msg += " [" + f.criterion;
        for (const auto& w : f.witness) msg += " " + w;
        msg += "]";
    }
    return msg;
}

} // namespace

Validity validate(const FinSpace& source, const FinSpace& target,
                  const std::vector<std::pair<int, int>>& pairs) {
    Validity v;
    std::vector<std::vector<int>> fibers(static_cast<size_t>(source.size()));
    for (const auto& [x, y] : pairs) {
        if (x < 0 || x >= source.size() || y < 0 || y >= target.size())
            throw InputError("pair outside source x target");
        fibers[static_cast<size_t>(x)].push_back(y);
    }
    for (int x = 0; x < source.size(); ++x)
        if (fibers[static_cast<size_t>(x)].empty())
            v.failures.push_back({"surjectivity", {source.point(x)}});
    for (const auto& [x, y] : pairs) {
        for (int xp = 0; xp < source.size(); ++xp) {
            if (!source.leq(xp, x)) continue;
            bool covered = false;
            for (int yp : fibers[static_cast<size_t>(xp)])
                if (target.leq(yp, y)) {
                    covered = true;
                    break;
                }
            if (!covered)
                v.failures.push_back(
                    {"closed-projection", {source.point(x), target.point(y), source.point(xp)}});
        }
    }
    v.is_valid = v.failures.empty();
    return v;
}

Validity validate_named(const FinSpace& source, const FinSpace& target,
                        const std::vector<std::pair<std::string, std::string>>& pairs) {
    std::vector<std::pair<int, int>> idx;
    idx.reserve(pairs.size());
    for (const auto& [x, y] : pairs) idx.push_back({source.index_of(x), target.index_of(y)});
    return validate(source, target, idx);
}

Corr::Corr(SpacePtr source, SpacePtr target, std::vector<std::pair<int, int>> pairs)
    : source_(std::move(source)), target_(std::move(target)),
      pairs_(canonical_pairs(std::move(pairs))) {
    Validity v = validate(*source_, *target_, pairs_);
    if (!v.is_valid) throw ValidityError(validity_message(v, *source_, *target_));
    fibers_.assign(static_cast<size_t>(source_->size()), {});
    for (const auto& [x, y] : pairs_) fibers_[static_cast<size_t>(x)].push_back(y);
}

Corr::Corr(FinSpace source, FinSpace target, std::vector<std::pair<int, int>> pairs)
    : Corr(share(std::move(source)), share(std::move(target)), std::move(pairs)) {}

bool Corr::contains(int x, int y) const {
    const auto& f = fibers_[static_cast<size_t>(x)];
    return std::binary_search(f.begin(), f.end(), y);
}

bool Corr::operator==(const Corr& other) const {
    return pairs_ == other.pairs_ && *source_ == *other.source_ && *target_ == *other.target_;
}

bool CorrOrder::operator()(const Corr& a, const Corr& b) const {
    if (a.pairs() != b.pairs()) return a.pairs() < b.pairs();
    if (a.source() != b.source()) return a.source().points() < b.source().points();
    if (a.target() != b.target()) return a.target().points() < b.target().points();
    return false;
}

Corr from_map(const ContMap& f) {
    if (!is_continuous(f)) throw ValidityError("from_map requires a continuous map");
    std::vector<std::pair<int, int>> pairs;
    pairs.reserve(f.map.size());
    for (int x = 0; x < f.dom->size(); ++x) pairs.push_back({x, f(x)});
    return Corr(f.dom, f.cod, std::move(pairs));
}

Corr identity_corr(const SpacePtr& space) { return from_map(identity_map(space)); }

Corr compose(const Corr& r, const Corr& s) {
    if (r.target() != s.source()) throw InputError("compose: middle spaces differ");
    std::set<std::pair<int, int>> out;
    for (const auto& [x, y] : r.pairs())
        for (int z : s.fibers()[static_cast<size_t>(y)]) out.insert({x, z});
    return Corr(r.source_ptr(), s.target_ptr(), {out.begin(), out.end()});
}

Corr box(const Corr& r, const Corr& rp) {
    auto src = share(product(r.source(), rp.source()));
    auto tgt = share(product(r.target(), rp.target()));
    std::vector<std::pair<int, int>> pairs;
    pairs.reserve(r.pairs().size() * rp.pairs().size());
    for (const auto& [x, y] : r.pairs())
        for (const auto& [xp, yp] : rp.pairs()) {
            int s = src->index_of(pair_name(r.source().point(x), rp.source().point(xp)));
            int t = tgt->index_of(pair_name(r.target().point(y), rp.target().point(yp)));
            pairs.push_back({s, t});
        }
    return Corr(std::move(src), std::move(tgt), std::move(pairs));
}

Corr pullback(const ContMap& f, const Corr& s) {
    if (!is_continuous(f)) throw ValidityError("pullback requires a continuous map");
    if (*f.cod != s.source()) throw InputError("pullback: space mismatch");
    std::vector<std::pair<int, int>> pairs;
    for (int x = 0; x < f.dom->size(); ++x)
        for (int z : s.fibers()[static_cast<size_t>(f(x))]) pairs.push_back({x, z});
    return Corr(f.dom, s.target_ptr(), std::move(pairs));
}

Corr pushforward(const Corr& r, const ContMap& g) {
    if (!is_continuous(g)) throw ValidityError("pushforward requires a continuous map");
    if (r.target() != *g.dom) throw InputError("pushforward: space mismatch");
    std::set<std::pair<int, int>> out;
    for (const auto& [x, y] : r.pairs()) out.insert({x, g(y)});
    return Corr(r.source_ptr(), g.cod, {out.begin(), out.end()});
}

Corr constant_corr(const SpacePtr& x, const SpacePtr& y, const std::vector<int>& value) {
    if (value.empty()) throw InputError("constant correspondence needs a nonempty value");
    std::vector<std::pair<int, int>> pairs;
    pairs.reserve(static_cast<size_t>(x->size()) * value.size());
    for (int p = 0; p < x->size(); ++p)
        for (int a : value) {
            if (a < 0 || a >= y->size()) throw InputError("constant value outside target");
            pairs.push_back({p, a});
        }
    return Corr(x, y, std::move(pairs));
}

Corr glue(const SpacePtr& x, const std::vector<std::vector<int>>& cover,
          const std::vector<Corr>& parts) {
    if (cover.size() != parts.size()) throw InputError("glue: cover/parts size mismatch");
    if (parts.empty()) throw InputError("glue: needs at least one part");
    std::vector<uint8_t> covered(static_cast<size_t>(x->size()), 0);
    for (const auto& member : cover) {
        if (!is_closed_set(*x, member)) throw ValidityError("glue: cover member is not closed");
        for (int p : member) covered[static_cast<size_t>(p)] = 1;
    }
    if (!std::all_of(covered.begin(), covered.end(), [](uint8_t c) { return c != 0; }))
        throw ValidityError("glue: cover does not exhaust the space");

    // Translate part graphs into coordinates of x, checking each part lives
    // on the right subspace.
    std::vector<std::set<std::pair<int, int>>> graphs(parts.size());
    SpacePtr target = parts.empty() ? nullptr : parts.front().target_ptr();
    for (size_t i = 0; i < parts.size(); ++i) {
        FinSpace expected = subspace(*x, cover[i]);
        if (parts[i].source() != expected)
            throw InputError("glue: part is not defined on its cover member");
        if (parts[i].target() != *target) throw InputError("glue: parts target different spaces");
        for (const auto& [p, y] : parts[i].pairs())
            graphs[i].insert({x->index_of(parts[i].source().point(p)), y});
    }
    for (size_t i = 0; i < parts.size(); ++i)
        for (size_t j = i + 1; j < parts.size(); ++j) {
            std::vector<int> common;
            std::vector<int> ci = cover[i], cj = cover[j];
            std::sort(ci.begin(), ci.end());
            std::sort(cj.begin(), cj.end());
            std::set_intersection(ci.begin(), ci.end(), cj.begin(), cj.end(),
                                  std::back_inserter(common));
            for (int p : common) {
                std::set<int> fi, fj;
                for (const auto& [q, y] : graphs[i])
                    if (q == p) fi.insert(y);
                for (const auto& [q, y] : graphs[j])
                    if (q == p) fj.insert(y);
                if (fi != fj)
                    throw ValidityError("glue: parts disagree at " + x->point(p));
            }
        }
    std::set<std::pair<int, int>> all;
    for (const auto& g : graphs) all.insert(g.begin(), g.end());
    return Corr(x, target, {all.begin(), all.end()});
}

std::vector<int> image(const Corr& t, const std::vector<int>& subset) {
    std::set<int> out;
    for (int x : subset) {
        if (x < 0 || x >= t.source().size()) throw InputError("image: point index out of range");
        const auto& f = t.fibers()[static_cast<size_t>(x)];
        out.insert(f.begin(), f.end());
    }
    return {out.begin(), out.end()};
}

Corr restrict_corr(const Corr& t, const std::vector<int>& subset) {
    FinSpace sub = subspace(t.source(), subset);
    std::vector<std::pair<int, int>> pairs;
    for (const auto& [x, y] : t.pairs()) {
        int p = sub.find(t.source().point(x));
        if (p >= 0) pairs.push_back({p, y});
    }
    return Corr(share(std::move(sub)), t.target_ptr(), std::move(pairs));
}

namespace {

// Shortest comparability-graph zigzag between two points, or empty if none.
std::vector<int> fence_route(const FinSpace& x, int from, int to) {
    std::vector<int> prev(static_cast<size_t>(x.size()), -2);
    std::deque<int> queue{from};
    prev[static_cast<size_t>(from)] = -1;
    while (!queue.empty()) {
        int p = queue.front();
        queue.pop_front();
        if (p == to) break;
        for (int q = 0; q < x.size(); ++q)
            if (prev[static_cast<size_t>(q)] == -2 && (x.leq(p, q) || x.leq(q, p))) {
                prev[static_cast<size_t>(q)] = p;
                queue.push_back(q);
            }
    }
    if (prev[static_cast<size_t>(to)] == -2) return {};
    std::vector<int> route;
    for (int p = to; p != -1; p = prev[static_cast<size_t>(p)]) route.push_back(p);
    std::reverse(route.begin(), route.end());
    return route;
}

} // namespace

Corr mpath(const SpacePtr& x, const std::vector<int>& from, const std::vector<int>& to) {
    if (from.empty() || to.empty()) throw InputError("mpath: endpoint subsets must be nonempty");
    std::vector<std::vector<int>> routes;
    for (int a : from)
        for (int b : to) {
            auto route = fence_route(*x, a, b);
            if (route.empty())
                throw ValidityError("mpath: " + x->point(a) + " and " + x->point(b) +
                                    " lie in different components");
            routes.push_back(std::move(route));
        }
    size_t steps = 1;
    for (const auto& r : routes) steps = std::max(steps, r.size() - 1);

    // Fence with closed points m0..mk and open points g1..gk. A route
    // c0 ~ c1 ~ ... turns into a monotone map by lifting each comparability
    // step to the open point above it; shorter routes are padded by
    // repeating their endpoint.
    std::vector<std::string> names;
    std::vector<std::pair<std::string, std::string>> gens;
    for (size_t j = 0; j <= steps; ++j) names.push_back("m" + std::to_string(j));
    for (size_t j = 1; j <= steps; ++j) {
        names.push_back("g" + std::to_string(j));
        gens.push_back({"m" + std::to_string(j - 1), "g" + std::to_string(j)});
        gens.push_back({"m" + std::to_string(j), "g" + std::to_string(j)});
    }
    auto fence = share(make_space(names, gens));

    std::set<std::pair<int, int>> pairs;
    for (const auto& route : routes) {
        auto value_at = [&](size_t step) { return route[std::min(step, route.size() - 1)]; };
        pairs.insert({fence->index_of("m0"), value_at(0)});
        for (size_t j = 1; j <= steps; ++j) {
            int lo = value_at(j - 1), hi = value_at(j);
            int open_value = x->leq(lo, hi) ? hi : lo;
            pairs.insert({fence->index_of("g" + std::to_string(j)), open_value});
            pairs.insert({fence->index_of("m" + std::to_string(j)), hi});
        }
    }
    return Corr(fence, x, {pairs.begin(), pairs.end()});
}

} // namespace mvhom
