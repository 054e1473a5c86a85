#include "mvhom/engine.hpp"

#include <algorithm>

#ifdef _OPENMP
#include <omp.h>
#endif

#include "mvhom/errors.hpp"

namespace mvhom {

namespace {

// Shared enumeration state over one space/degree pair. Faces are processed
// in decreasing dimension, so every superset of a face is assigned before
// the face itself; the point-closure constraint only needs checking against
// the covering faces (supersets with one extra vertex), because it is
// transitive along chains of covers.
struct EnumContext {
    SpacePtr space;     // target X
    SpacePtr simplex;   // delta_fin(n).space
    int degree = 0;
    int npoints = 0;                        // |X|
    std::vector<unsigned> face_of;          // position -> face mask, decreasing dimension
    std::vector<int> point_of;              // position -> simplex point index
    std::vector<std::vector<int>> covers;   // position -> positions of covering faces
    std::vector<uint32_t> down_mask;        // X point -> bitmask of its down-set
    std::size_t max_basis = 0;
};

EnumContext make_context(const SpacePtr& space, int degree, const EnumOptions& opt) {
    if (space->size() == 0) throw InputError("enumerate_simplices: empty space");
    if (space->size() > 30)
        throw BoundError("enumerate_simplices: spaces beyond 30 points are not supported");
    if ((std::size_t(1) << space->size()) - 1 > opt.max_basis)
        throw BoundError("enumerate_simplices: fiber candidate count exceeds the basis bound");
    EnumContext ctx;
    ctx.space = space;
    ctx.simplex = delta_fin(degree).space;
    ctx.degree = degree;
    ctx.npoints = space->size();
    ctx.max_basis = opt.max_basis;

    SimplexModel model = delta_fin(degree);
    const int nfaces = model.space->size();
    std::vector<std::pair<int, unsigned>> order; // (-popcount, mask), sorted
    for (int p = 0; p < nfaces; ++p) {
        unsigned mask = face_mask(model, p);
        order.push_back({-__builtin_popcount(mask), mask});
    }
    std::sort(order.begin(), order.end());
    std::vector<int> position_of_mask(std::size_t(1) << (degree + 1), -1);
    for (int pos = 0; pos < nfaces; ++pos) {
        unsigned mask = order[std::size_t(pos)].second;
        ctx.face_of.push_back(mask);
        ctx.point_of.push_back(model.space->index_of(face_name(mask)));
        position_of_mask[mask] = pos;
    }
    ctx.covers.resize(std::size_t(nfaces));
    for (int pos = 0; pos < nfaces; ++pos) {
        unsigned mask = ctx.face_of[std::size_t(pos)];
        for (int v = 0; v <= degree; ++v) {
            unsigned bigger = mask | (1u << v);
            if (bigger != mask) ctx.covers[std::size_t(pos)].push_back(position_of_mask[bigger]);
        }
    }
    ctx.down_mask.assign(std::size_t(ctx.npoints), 0);
    for (int y = 0; y < ctx.npoints; ++y)
        for (int z = 0; z < ctx.npoints; ++z)
            if (space->leq(z, y)) ctx.down_mask[std::size_t(y)] |= 1u << z;
    return ctx;
}

// fiber must meet down(y) for every y in each assigned covering fiber.
bool admissible(const EnumContext& ctx, const std::vector<uint32_t>& fibers, int pos,
                uint32_t fiber) {
    for (int cover_pos : ctx.covers[std::size_t(pos)]) {
        uint32_t over = fibers[std::size_t(cover_pos)];
        for (int y = 0; y < ctx.npoints; ++y)
            if ((over >> y) & 1u)
                if ((fiber & ctx.down_mask[std::size_t(y)]) == 0) return false;
    }
    return true;
}

void emit(const EnumContext& ctx, const std::vector<uint32_t>& fibers, std::vector<Corr>& out) {
    std::vector<std::pair<int, int>> pairs;
    for (std::size_t pos = 0; pos < fibers.size(); ++pos)
        for (int y = 0; y < ctx.npoints; ++y)
            if ((fibers[pos] >> y) & 1u) pairs.push_back({ctx.point_of[pos], y});
    out.emplace_back(ctx.simplex, ctx.space, std::move(pairs));
}

void dfs(const EnumContext& ctx, std::vector<uint32_t>& fibers, std::size_t pos,
         std::vector<Corr>& out) {
    if (pos == fibers.size()) {
        emit(ctx, fibers, out);
        return;
    }
    const uint32_t all = (ctx.npoints == 30) ? 0x3fffffffu : ((1u << ctx.npoints) - 1);
    for (uint32_t fiber = 1; fiber <= all; ++fiber) {
        if (!admissible(ctx, fibers, static_cast<int>(pos), fiber)) continue;
        fibers[pos] = fiber;
        dfs(ctx, fibers, pos + 1, out);
        fibers[pos] = 0;
        if (out.size() > ctx.max_basis)
            throw BoundError("enumerate_simplices: basis exceeds bound of " +
                             std::to_string(ctx.max_basis));
    }
}

void sort_canonically(std::vector<Corr>& simplices) {
    std::sort(simplices.begin(), simplices.end(),
              [](const Corr& a, const Corr& b) { return a.pairs() < b.pairs(); });
}

} // namespace

int SimplexBasis::find(const Corr& simplex) const {
    auto it = std::lower_bound(
        simplices.begin(), simplices.end(), simplex,
        [](const Corr& a, const Corr& b) { return a.pairs() < b.pairs(); });
    if (it == simplices.end() || !(it->pairs() == simplex.pairs())) return -1;
    return static_cast<int>(it - simplices.begin());
}

SimplexBasis enumerate_simplices_serial(const SpacePtr& space, int degree,
                                        const EnumOptions& opt) {
    EnumContext ctx = make_context(space, degree, opt);
    std::vector<uint32_t> fibers(ctx.face_of.size(), 0);
    std::vector<Corr> out;
    dfs(ctx, fibers, 0, out);
    sort_canonically(out);
    return SimplexBasis{space, degree, std::move(out), true};
}

SimplexBasis enumerate_simplices(const SpacePtr& space, int degree, const EnumOptions& opt) {
    EnumContext ctx = make_context(space, degree, opt);
    const std::size_t nfaces = ctx.face_of.size();
    if (!opt.parallel || nfaces < 2)
        return enumerate_simplices_serial(space, degree, opt);

    const uint32_t all = (ctx.npoints == 30) ? 0x3fffffffu : ((1u << ctx.npoints) - 1);
    // Tasks are the admissible assignments of the first two faces; each task
    // owns an independent DFS below them.
    std::vector<std::pair<uint32_t, uint32_t>> tasks;
    for (uint32_t f0 = 1; f0 <= all; ++f0) {
        std::vector<uint32_t> probe(nfaces, 0);
        if (!admissible(ctx, probe, 0, f0)) continue;
        probe[0] = f0;
        for (uint32_t f1 = 1; f1 <= all; ++f1)
            if (admissible(ctx, probe, 1, f1)) tasks.push_back({f0, f1});
    }
    std::vector<std::vector<Corr>> partial(tasks.size());
    std::string failure;

#ifdef _OPENMP
#pragma omp parallel for schedule(dynamic)
#endif
    for (std::ptrdiff_t t = 0; t < static_cast<std::ptrdiff_t>(tasks.size()); ++t) {
        try {
            std::vector<uint32_t> fibers(nfaces, 0);
            fibers[0] = tasks[std::size_t(t)].first;
            fibers[1] = tasks[std::size_t(t)].second;
            dfs(ctx, fibers, 2, partial[std::size_t(t)]);
        } catch (const std::exception& e) {
#ifdef _OPENMP
#pragma omp critical
#endif
            failure = e.what();
        }
    }
    if (!failure.empty()) throw BoundError(failure);

    std::vector<Corr> out;
    std::size_t total = 0;
    for (const auto& p : partial) total += p.size();
    if (total > opt.max_basis)
        throw BoundError("enumerate_simplices: basis exceeds bound of " +
                         std::to_string(opt.max_basis));
    out.reserve(total);
    for (auto& p : partial)
        for (auto& c : p) out.push_back(std::move(c));
    sort_canonically(out);
    return SimplexBasis{space, degree, std::move(out), true};
}

SimplexBasis make_basis(const SpacePtr& space, int degree, std::vector<Corr> simplices) {
    const FinSpace& model = *delta_fin(degree).space;
    for (const auto& s : simplices) {
        if (s.source() != model || s.target() != *space)
            throw InputError("make_basis: simplex over the wrong spaces");
    }
    sort_canonically(simplices);
    simplices.erase(std::unique(simplices.begin(), simplices.end()), simplices.end());
    // Face-closure is a cross-degree property; assembly fails loudly when a
    // face is missing from the companion basis.
    return SimplexBasis{space, degree, std::move(simplices), false};
}

namespace {

BoundaryMatrix assemble_impl(const SimplexBasis& lower, const SimplexBasis& upper,
                             bool parallel) {
    if (upper.degree != lower.degree + 1)
        throw InputError("assemble_boundary: degrees do not stack");
    if (*upper.space != *lower.space) throw InputError("assemble_boundary: space mismatch");
    BoundaryMatrix bm;
    bm.degree = upper.degree;
    bm.mat = IntMat(static_cast<int>(lower.simplices.size()),
                    static_cast<int>(upper.simplices.size()));
    const int n = upper.degree;
    std::string failure;

#ifdef _OPENMP
#pragma omp parallel for schedule(dynamic) if (parallel)
#endif
    for (std::ptrdiff_t col = 0; col < static_cast<std::ptrdiff_t>(upper.simplices.size());
         ++col) {
        try {
            const Corr& sigma = upper.simplices[std::size_t(col)];
            for (int i = 0; i <= n; ++i) {
                Corr f = face(sigma, i);
                int row = lower.find(f);
                if (row < 0) throw ValidityError("assemble_boundary: basis is not face-closed");
                bm.mat.at(row, static_cast<int>(col)) += (i % 2 == 0) ? 1 : -1;
            }
        } catch (const std::exception& e) {
#ifdef _OPENMP
#pragma omp critical
#endif
            failure = e.what();
        }
    }
    if (!failure.empty()) throw ValidityError(failure);
    return bm;
}

} // namespace

BoundaryMatrix assemble_boundary(const SimplexBasis& lower, const SimplexBasis& upper) {
    return assemble_impl(lower, upper, true);
}

BoundaryMatrix assemble_boundary_serial(const SimplexBasis& lower, const SimplexBasis& upper) {
    return assemble_impl(lower, upper, false);
}

HomologyReport space_homology(const SpacePtr& space, int max_n, const HomologyOptions& opt) {
    if (max_n < 0) throw InputError("space_homology: max_n must be >= 0");
    HomologyReport report;
    int computable = max_n;
    if (space->size() > 1 && !opt.attempt_high_degrees) computable = std::min(max_n, 1);

    std::vector<SimplexBasis> bases;
    bool bounded = false;
    for (int d = 0; d <= computable + 1 && !bounded; ++d) {
        try {
            bases.push_back(enumerate_simplices(space, d, opt.enumeration));
        } catch (const BoundError&) {
            bounded = true;
        }
    }
    report.bound_exceeded = bounded;

    for (int n = 0; n <= max_n; ++n) {
        HomologyResult res;
        res.n = n;
        if (n > computable) {
            res.skipped_reason = "requires attempt_high_degrees";
            report.groups.push_back(res);
            continue;
        }
        if (n + 1 >= static_cast<int>(bases.size())) {
            res.skipped_reason = "enumeration bound exceeded";
            report.groups.push_back(res);
            continue;
        }
        BoundaryMatrix dn;
        if (n == 0) {
            dn.degree = 0;
            dn.mat = IntMat(0, static_cast<int>(bases[0].simplices.size()));
        } else {
            dn = assemble_boundary(bases[std::size_t(n) - 1], bases[std::size_t(n)]);
        }
        BoundaryMatrix dn1 = assemble_boundary(bases[std::size_t(n)], bases[std::size_t(n) + 1]);
        res.group = homology_at(dn, dn1);
        res.computed = true;
        report.groups.push_back(res);
    }
    return report;
}

namespace {

bool is_discrete(const FinSpace& space) {
    for (int i = 0; i < space.size(); ++i)
        for (int j = 0; j < space.size(); ++j)
            if (i != j && space.leq(i, j)) return false;
    return true;
}

} // namespace

Contraction contraction(const SpacePtr& space, int basepoint) {
    if (space->size() == 0) throw InputError("contraction: empty space");
    if (basepoint < 0 || basepoint >= space->size())
        throw InputError("contraction: basepoint out of range");
    if (!is_discrete(*space))
        throw ValidityError("contraction: the construction requires a discrete space");
    IntervalModel fence = interval_fin(1);
    auto xi = share(product(*space, *fence.space));
    auto at = [&](int x, const char* level) {
        return xi->index_of(pair_name(space->point(x), level));
    };
    std::vector<std::pair<int, int>> l1, l2;
    for (int x = 0; x < space->size(); ++x) {
        l1.push_back({at(x, "m0"), x});
        l1.push_back({at(x, "g1"), x});
        l1.push_back({at(x, "m1"), x});
        l1.push_back({at(x, "m1"), basepoint});
        l2.push_back({at(x, "m0"), x});
        l2.push_back({at(x, "m0"), basepoint});
        l2.push_back({at(x, "g1"), basepoint});
        l2.push_back({at(x, "m1"), basepoint});
    }
    return Contraction{Corr(xi, space, std::move(l1)), Corr(xi, space, std::move(l2))};
}

Chain constant_chain(long long m, const SpacePtr& space, const std::vector<int>& value, int n) {
    Chain out(n);
    if (m == 0) return out;
    out.add(constant_corr(delta_fin(n).space, space, value), m);
    return out;
}

Chain constant_cycle_fill(long long m, const SpacePtr& space, const std::vector<int>& value,
                          int n) {
    if (n % 2 == 0)
        throw InputError("constant_cycle_fill: the constant chain is a cycle only in odd degree");
    return constant_chain(m, space, value, n + 1);
}

Certificate nullhomotopy_certificate(const Chain& cycle, int basepoint) {
    if (cycle.degree < 1)
        throw InputError("nullhomotopy_certificate: cycle degree must be positive");
    Certificate cert;
    cert.cycle = cycle;
    if (cycle.is_zero()) {
        cert.filling = Chain(cycle.degree + 1);
        cert.steps.push_back("zero cycle: zero filling");
        cert.verified = true;
        return cert;
    }
    SpacePtr space = cycle.terms.begin()->first.target_ptr();
    for (const auto& [s, c] : cycle.terms)
        if (s.target() != *space)
            throw InputError("nullhomotopy_certificate: mixed targets in cycle");
    if (!is_discrete(*space))
        throw ValidityError("nullhomotopy_certificate: target space must be discrete");
    if (basepoint < 0 || basepoint >= space->size())
        throw InputError("nullhomotopy_certificate: basepoint out of range");
    if (!boundary(cycle).is_zero())
        throw ValidityError("nullhomotopy_certificate: chain is not a cycle");

    Contraction c = contraction(space, basepoint);
    Chain h1 = apply_chain_homotopy(c.step1, cycle);
    cert.steps.push_back("h1: chain homotopy of the id-to-doubled step");
    Chain h2 = apply_chain_homotopy(c.step2, cycle);
    cert.steps.push_back("h2: chain homotopy of the doubled-to-constant step");

    long long mass = 0;
    for (const auto& [s, coeff] : cycle.terms) mass += coeff;
    Chain fill(cycle.degree + 1);
    if (cycle.degree % 2 == 1) {
        fill = constant_cycle_fill(mass, space, {basepoint}, cycle.degree);
        cert.steps.push_back("fill: constant cycle filled in degree " +
                             std::to_string(cycle.degree + 1) + " with mass " +
                             std::to_string(mass));
    } else if (mass != 0) {
        throw ValidityError("nullhomotopy_certificate: even-degree cycle with nonzero mass");
    }

    cert.filling = fill;
    cert.filling -= h1;
    cert.filling -= h2;
    if (!(boundary(cert.filling) == cycle))
        throw ValidityError("nullhomotopy_certificate: filling failed re-verification");
    cert.steps.push_back("verified: boundary(filling) == cycle");
    cert.verified = true;
    return cert;
}

} // namespace mvhom
