#include "mvhom/finspace.hpp"

#include <algorithm>
#include <set>

#include "mvhom/errors.hpp"

namespace mvhom {

int FinSpace::index_of(std::string_view name) const {
    int i = find(name);
    if (i < 0) throw InputError("unknown point: " + std::string(name));
    return i;
}

int FinSpace::find(std::string_view name) const {
    auto it = std::lower_bound(points_.begin(), points_.end(), name);
    if (it == points_.end() || *it != name) return -1;
    return static_cast<int>(it - points_.begin());
}

FinSpace FinSpace::from_preorder(std::vector<std::string> points,
                                 std::vector<uint8_t> leq, bool t0) {
    FinSpace s;
    s.points_ = std::move(points);
    s.leq_ = std::move(leq);
    s.t0_ = t0;
    return s;
}

FinSpace make_space(std::vector<std::string> points,
                    const std::vector<std::pair<std::string, std::string>>& generating_pairs,
                    bool t0) {
    std::sort(points.begin(), points.end());
    if (std::adjacent_find(points.begin(), points.end()) != points.end())
        throw InputError("duplicate point name");
    const size_t n = points.size();
    std::vector<uint8_t> leq(n * n, 0);
    auto idx = [&](std::string_view name) {
        auto it = std::lower_bound(points.begin(), points.end(), name);
        if (it == points.end() || *it != name)
            throw InputError("unknown point in generating pair: " + std::string(name));
        return static_cast<size_t>(it - points.begin());
    };
    for (size_t i = 0; i < n; ++i) leq[i * n + i] = 1;
    for (const auto& [x, y] : generating_pairs) leq[idx(x) * n + idx(y)] = 1;
    // Floyd-Warshall style transitive closure.
    for (size_t k = 0; k < n; ++k)
        for (size_t i = 0; i < n; ++i)
            if (leq[i * n + k])
                for (size_t j = 0; j < n; ++j)
                    if (leq[k * n + j]) leq[i * n + j] = 1;
    if (t0) {
        for (size_t i = 0; i < n; ++i)
            for (size_t j = i + 1; j < n; ++j)
                if (leq[i * n + j] && leq[j * n + i])
                    throw InputError("antisymmetry violation under t0: " + points[i] +
                                     " and " + points[j]);
    }
    return FinSpace::from_preorder(std::move(points), std::move(leq), t0);
}

std::vector<int> closure(const FinSpace& space, const std::vector<int>& subset) {
    const int n = space.size();
    std::vector<uint8_t> in(static_cast<size_t>(n), 0);
    for (int p : subset) {
        if (p < 0 || p >= n) throw InputError("point index out of range");
        for (int q = 0; q < n; ++q)
            if (space.leq(q, p)) in[static_cast<size_t>(q)] = 1;
    }
    std::vector<int> out;
    for (int q = 0; q < n; ++q)
        if (in[static_cast<size_t>(q)]) out.push_back(q);
    return out;
}

std::vector<std::string> closure_named(const FinSpace& space,
                                       const std::vector<std::string>& subset) {
    return point_names(space, closure(space, point_indices(space, subset)));
}

bool is_closed_set(const FinSpace& space, const std::vector<int>& subset) {
    std::vector<int> sorted = subset;
    std::sort(sorted.begin(), sorted.end());
    sorted.erase(std::unique(sorted.begin(), sorted.end()), sorted.end());
    return closure(space, sorted) == sorted;
}

std::vector<int> point_indices(const FinSpace& space, const std::vector<std::string>& names) {
    std::vector<int> out;
    out.reserve(names.size());
    for (const auto& name : names) out.push_back(space.index_of(name));
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

std::vector<std::string> point_names(const FinSpace& space, const std::vector<int>& subset) {
    std::vector<std::string> out;
    out.reserve(subset.size());
    for (int i : subset) out.push_back(space.point(i));
    std::sort(out.begin(), out.end());
    return out;
}

std::string pair_name(const std::string& a, const std::string& b) {
    return "(" + a + "," + b + ")";
}

FinSpace product(const FinSpace& a, const FinSpace& b) {
    const int na = a.size(), nb = b.size();
    std::vector<std::pair<std::string, std::pair<int, int>>> named;
    named.reserve(static_cast<size_t>(na) * static_cast<size_t>(nb));
    for (int i = 0; i < na; ++i)
        for (int j = 0; j < nb; ++j)
            named.push_back({pair_name(a.point(i), b.point(j)), {i, j}});
    std::sort(named.begin(), named.end());
    const size_t n = named.size();
    std::vector<std::string> points(n);
    for (size_t k = 0; k < n; ++k) points[k] = named[k].first;
    std::vector<uint8_t> leq(n * n, 0);
    for (size_t p = 0; p < n; ++p)
        for (size_t q = 0; q < n; ++q) {
            auto [ia, ib] = named[p].second;
            auto [ja, jb] = named[q].second;
            leq[p * n + q] = (a.leq(ia, ja) && b.leq(ib, jb)) ? 1 : 0;
        }
    return FinSpace::from_preorder(std::move(points), std::move(leq), a.t0() && b.t0());
}

FinSpace subspace(const FinSpace& space, const std::vector<int>& subset) {
    std::vector<int> sel = subset;
    std::sort(sel.begin(), sel.end());
    sel.erase(std::unique(sel.begin(), sel.end()), sel.end());
    const size_t n = sel.size();
    std::vector<std::string> points(n);
    for (size_t k = 0; k < n; ++k) {
        if (sel[k] < 0 || sel[k] >= space.size()) throw InputError("point index out of range");
        points[k] = space.point(sel[k]);
    }
    std::vector<uint8_t> leq(n * n, 0);
    for (size_t p = 0; p < n; ++p)
        for (size_t q = 0; q < n; ++q) leq[p * n + q] = space.leq(sel[p], sel[q]) ? 1 : 0;
    return FinSpace::from_preorder(std::move(points), std::move(leq), space.t0());
}

FinSpace subspace_named(const FinSpace& space, const std::vector<std::string>& subset) {
    return subspace(space, point_indices(space, subset));
}

bool is_order_connected(const FinSpace& space) {
    const int n = space.size();
    if (n == 0) return true;
    std::vector<uint8_t> seen(static_cast<size_t>(n), 0);
    std::vector<int> stack{0};
    seen[0] = 1;
    while (!stack.empty()) {
        int p = stack.back();
        stack.pop_back();
        for (int q = 0; q < n; ++q)
            if (!seen[static_cast<size_t>(q)] && (space.leq(p, q) || space.leq(q, p))) {
                seen[static_cast<size_t>(q)] = 1;
                stack.push_back(q);
            }
    }
    return std::all_of(seen.begin(), seen.end(), [](uint8_t s) { return s != 0; });
}

ContMap make_map(SpacePtr dom, SpacePtr cod, std::vector<int> assignment) {
    if (static_cast<int>(assignment.size()) != dom->size())
        throw InputError("assignment must be total on the domain");
    for (int v : assignment)
        if (v < 0 || v >= cod->size()) throw InputError("assignment hits unknown codomain point");
    return ContMap{std::move(dom), std::move(cod), std::move(assignment)};
}

ContMap make_map_named(SpacePtr dom, SpacePtr cod,
                       const std::vector<std::pair<std::string, std::string>>& assignment) {
    std::vector<int> map(static_cast<size_t>(dom->size()), -1);
    for (const auto& [x, y] : assignment) map[static_cast<size_t>(dom->index_of(x))] = cod->index_of(y);
    for (int v : map)
        if (v < 0) throw InputError("assignment must be total on the domain");
    return ContMap{std::move(dom), std::move(cod), std::move(map)};
}

bool is_continuous(const ContMap& f) {
    const int n = f.dom->size();
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            if (f.dom->leq(i, j) && !f.cod->leq(f(i), f(j))) return false;
    return true;
}

bool is_closed_map(const ContMap& f) {
    if (!is_continuous(f)) throw ValidityError("is_closed_map requires a continuous map");
    const int n = f.dom->size();
    const int m = f.cod->size();
    // Closed sets are finite unions of point-closures, so it is enough that
    // the image of each point-closure is a down-set.
    for (int t = 0; t < n; ++t) {
        std::vector<uint8_t> img(static_cast<size_t>(m), 0);
        for (int s = 0; s < n; ++s)
            if (f.dom->leq(s, t)) img[static_cast<size_t>(f(s))] = 1;
        for (int y = 0; y < m; ++y)
            if (img[static_cast<size_t>(y)])
                for (int z = 0; z < m; ++z)
                    if (f.cod->leq(z, y) && !img[static_cast<size_t>(z)]) return false;
    }
    return true;
}

ContMap identity_map(const SpacePtr& space) {
    std::vector<int> map(static_cast<size_t>(space->size()));
    for (size_t i = 0; i < map.size(); ++i) map[i] = static_cast<int>(i);
    return ContMap{space, space, std::move(map)};
}

ContMap compose_maps(const ContMap& first, const ContMap& then_) {
    if (*first.cod != *then_.dom) throw InputError("compose_maps: space mismatch");
    std::vector<int> map(first.map.size());
    for (size_t i = 0; i < map.size(); ++i) map[i] = then_(first.map[i]);
    return ContMap{first.dom, then_.cod, std::move(map)};
}

ContMap product_map(const ContMap& f, const ContMap& g) {
    auto dom = share(product(*f.dom, *g.dom));
    auto cod = share(product(*f.cod, *g.cod));
    std::vector<int> map(static_cast<size_t>(dom->size()), -1);
    for (int i = 0; i < f.dom->size(); ++i)
        for (int j = 0; j < g.dom->size(); ++j) {
            int from = dom->index_of(pair_name(f.dom->point(i), g.dom->point(j)));
            int to = cod->index_of(pair_name(f.cod->point(f(i)), g.cod->point(g(j))));
            map[static_cast<size_t>(from)] = to;
        }
    return ContMap{std::move(dom), std::move(cod), std::move(map)};
}

} // namespace mvhom
