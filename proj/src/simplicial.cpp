#include "mvhom/simplicial.hpp"

#include <algorithm>
#include <map>
#include <mutex>

#include "mvhom/errors.hpp"

namespace mvhom {

std::string face_name(unsigned mask) {
    std::string name = "{";
    bool first = true;
    for (int v = 0; mask >> v; ++v)
        if (mask & (1u << v)) {
            if (!first) name += ",";
            name += std::to_string(v);
            first = false;
        }
    return name + "}";
}

namespace {

unsigned parse_face_mask(const std::string& name) {
    unsigned mask = 0;
    int v = -1;
    for (char c : name) {
        if (c >= '0' && c <= '9') {
            v = (v < 0 ? 0 : v * 10) + (c - '0');
        } else if (v >= 0) {
            mask |= 1u << v;
            v = -1;
        }
    }
    return mask;
}

} // namespace

unsigned face_mask(const SimplexModel& model, int point_index) {
    return parse_face_mask(model.space->point(point_index));
}

namespace {

// Models are value types but get built repeatedly in inner loops; memoize.
std::map<int, SimplexModel>& simplex_cache() {
    static std::map<int, SimplexModel> cache;
    return cache;
}
std::map<int, IntervalModel>& interval_cache() {
    static std::map<int, IntervalModel> cache;
    return cache;
}
std::mutex& model_mutex() {
    static std::mutex m;
    return m;
}

SimplexModel build_delta_fin(int n) {
    if (n < 0) throw InputError("delta_fin: dimension must be >= 0");
    if (n > 20) throw BoundError("delta_fin: face poset too large");
    const unsigned full = (1u << (n + 1)) - 1;
    std::vector<std::string> points;
    for (unsigned mask = 1; mask <= full; ++mask) points.push_back(face_name(mask));
    std::sort(points.begin(), points.end());
    const size_t count = points.size();
    std::vector<unsigned> masks(count);
    for (size_t p = 0; p < count; ++p) masks[p] = parse_face_mask(points[p]);
    std::vector<uint8_t> leq(count * count, 0);
    for (size_t p = 0; p < count; ++p)
        for (size_t q = 0; q < count; ++q)
            leq[p * count + q] = ((masks[p] & masks[q]) == masks[p]) ? 1 : 0;
    return SimplexModel{n, share(FinSpace::from_preorder(std::move(points), std::move(leq), true))};
}

IntervalModel build_interval_fin(int k) {
    if (k < 1) throw InputError("interval_fin: length must be >= 1");
    std::vector<std::string> names;
    std::vector<std::pair<std::string, std::string>> gens;
    for (int j = 0; j <= k; ++j) names.push_back("m" + std::to_string(j));
    for (int j = 1; j <= k; ++j) {
        names.push_back("g" + std::to_string(j));
        gens.push_back({"m" + std::to_string(j - 1), "g" + std::to_string(j)});
        gens.push_back({"m" + std::to_string(j), "g" + std::to_string(j)});
    }
    return IntervalModel{k, share(make_space(std::move(names), gens, true))};
}

} // namespace

SimplexModel delta_fin(int n) {
    std::lock_guard<std::mutex> lock(model_mutex());
    auto& cache = simplex_cache();
    auto it = cache.find(n);
    if (it == cache.end()) it = cache.emplace(n, build_delta_fin(n)).first;
    return it->second;
}

IntervalModel interval_fin(int k) {
    std::lock_guard<std::mutex> lock(model_mutex());
    auto& cache = interval_cache();
    auto it = cache.find(k);
    if (it == cache.end()) it = cache.emplace(k, build_interval_fin(k)).first;
    return it->second;
}

std::string fence_zero(const IntervalModel&) { return "m0"; }
std::string fence_one(const IntervalModel& m) { return "m" + std::to_string(m.k); }

namespace {

unsigned relabel_mask(unsigned mask, int i, bool face) {
    // face: vertex rule of delta_i (j < i -> j, j >= i -> j+1);
    // otherwise the prism rule (j <= i -> j, j >= i+1 -> j-1).
    unsigned out = 0;
    for (int v = 0; mask >> v; ++v)
        if (mask & (1u << v)) {
            int w = face ? (v < i ? v : v + 1) : (v <= i ? v : v - 1);
            out |= 1u << w;
        }
    return out;
}

} // namespace

ContMap face_fin(int n, int i) {
    if (n < 1 || i < 0 || i > n) throw InputError("face_fin: index out of range");
    SimplexModel dom = delta_fin(n - 1), cod = delta_fin(n);
    std::vector<int> map(static_cast<size_t>(dom.space->size()));
    for (int p = 0; p < dom.space->size(); ++p) {
        unsigned img = relabel_mask(face_mask(dom, p), i, true);
        map[static_cast<size_t>(p)] = cod.space->index_of(face_name(img));
    }
    return ContMap{dom.space, cod.space, std::move(map)};
}

ContMap prism_fin(int n, int i) {
    if (n < 0 || i < 0 || i > n) throw InputError("prism_fin: index out of range");
    SimplexModel dom = delta_fin(n + 1), base = delta_fin(n);
    IntervalModel fence = interval_fin(1);
    auto cod = share(product(*base.space, *fence.space));
    std::vector<int> map(static_cast<size_t>(dom.space->size()));
    for (int p = 0; p < dom.space->size(); ++p) {
        unsigned mask = face_mask(dom, p);
        unsigned img = relabel_mask(mask, i, false);
        const unsigned low = (1u << (i + 1)) - 1; // vertices <= i
        std::string level;
        if ((mask & ~low) == 0)
            level = "m0";
        else if ((mask & low) == 0)
            level = "m1";
        else
            level = "g1";
        map[static_cast<size_t>(p)] = cod->index_of(pair_name(face_name(img), level));
    }
    return ContMap{dom.space, std::move(cod), std::move(map)};
}

ContMap prism_product(const ContMap& f) {
    return product_map(f, identity_map(interval_fin(1).space));
}

ContMap fin_interval_inclusion(int n, int level) {
    if (level != 0 && level != 1) throw InputError("fin_interval_inclusion: level must be 0 or 1");
    SimplexModel base = delta_fin(n);
    IntervalModel fence = interval_fin(1);
    auto cod = share(product(*base.space, *fence.space));
    const std::string tag = level ? "m1" : "m0";
    std::vector<int> map(static_cast<size_t>(base.space->size()));
    for (int p = 0; p < base.space->size(); ++p)
        map[static_cast<size_t>(p)] = cod->index_of(pair_name(base.space->point(p), tag));
    return ContMap{base.space, std::move(cod), std::move(map)};
}

IdentityReport verify_fin_identities(int max_n) {
    if (max_n < 1) throw InputError("verify_fin_identities: max_n must be >= 1");
    IdentityReport report;
    auto record = [&](const char* name, int n, int i, int j, bool ok) {
        report.checks.push_back({name, n, i, j, ok});
    };

    for (int n = 0; n <= max_n; ++n) {
        record("fin-prism-4", n, -1, -1,
               compose_maps(face_fin(n + 1, 0), prism_fin(n, 0)) == fin_interval_inclusion(n, 1));
        record("fin-prism-5", n, -1, -1,
               compose_maps(face_fin(n + 1, n + 1), prism_fin(n, n)) ==
                   fin_interval_inclusion(n, 0));
        for (int i = 0; i < n; ++i)
            record("fin-prism-2", n, i, -1,
                   compose_maps(face_fin(n + 1, i + 1), prism_fin(n, i + 1)) ==
                       compose_maps(face_fin(n + 1, i + 1), prism_fin(n, i)));
        for (int j = 0; j <= n - 1; ++j)
            for (int i = 0; i <= j; ++i)
                record("fin-prism-1", n, i, j,
                       compose_maps(face_fin(n + 1, i), prism_fin(n, j + 1)) ==
                           compose_maps(prism_fin(n - 1, j), prism_product(face_fin(n, i))));
        for (int j = 1; j <= n; ++j)
            for (int i = 0; i < j; ++i)
                record("fin-prism-3", n, i, j,
                       compose_maps(face_fin(n + 1, j + 1), prism_fin(n, i)) ==
                           compose_maps(prism_fin(n - 1, i), prism_product(face_fin(n, j))));
    }
    for (int m = 2; m <= max_n + 1; ++m)
        for (int j = 1; j <= m; ++j)
            for (int i = 0; i < j; ++i)
                record("fin-face-face", m, i, j,
                       compose_maps(face_fin(m - 1, i), face_fin(m, j)) ==
                           compose_maps(face_fin(m - 1, j - 1), face_fin(m, i)));
    return report;
}

} // namespace mvhom
