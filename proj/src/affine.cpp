#include "mvhom/affine.hpp"

#include <algorithm>

#include "mvhom/errors.hpp"

namespace mvhom {

Signature simplex_sig(int n) { return {Factor{Factor::Simplex, n}}; }

Signature simplex_interval_sig(int n) {
    return {Factor{Factor::Simplex, n}, Factor{Factor::Interval, 0}};
}

int ambient_dim(const Signature& sig) {
    int d = 0;
    for (const auto& f : sig) d += (f.kind == Factor::Simplex) ? f.dim + 1 : 1;
    return d;
}

int vertex_count(const Signature& sig) {
    int c = 1;
    for (const auto& f : sig) c *= (f.kind == Factor::Simplex) ? f.dim + 1 : 2;
    return c;
}

namespace {

// Per-factor vertex labels of a mixed-radix vertex index, first factor slowest.
std::vector<int> vertex_digits(const Signature& sig, int index) {
    std::vector<int> digits(sig.size());
    for (size_t f = sig.size(); f-- > 0;) {
        int radix = (sig[f].kind == Factor::Simplex) ? sig[f].dim + 1 : 2;
        digits[f] = index % radix;
        index /= radix;
    }
    return digits;
}

} // namespace

std::vector<Rat> vertex_coords(const Signature& sig, int index) {
    std::vector<int> digits = vertex_digits(sig, index);
    std::vector<Rat> coords;
    coords.reserve(static_cast<size_t>(ambient_dim(sig)));
    for (size_t f = 0; f < sig.size(); ++f) {
        if (sig[f].kind == Factor::Simplex) {
            for (int c = 0; c <= sig[f].dim; ++c) coords.push_back(c == digits[f] ? 1 : 0);
        } else {
            coords.push_back(digits[f]);
        }
    }
    return coords;
}

bool in_polytope(const Signature& sig, const std::vector<Rat>& point) {
    if (static_cast<int>(point.size()) != ambient_dim(sig)) return false;
    size_t at = 0;
    for (const auto& f : sig) {
        if (f.kind == Factor::Simplex) {
            Rat sum = 0;
            for (int c = 0; c <= f.dim; ++c) {
                if (point[at] < 0) return false;
                sum += point[at++];
            }
            if (sum != 1) return false;
        } else {
            if (point[at] < 0 || point[at] > 1) return false;
            ++at;
        }
    }
    return true;
}

AffineMap make_affine(Signature dom, Signature cod, std::vector<std::vector<Rat>> vertex_images) {
    if (static_cast<int>(vertex_images.size()) != vertex_count(dom))
        throw InputError("affine map needs one image per domain vertex");
    for (const auto& img : vertex_images)
        if (!in_polytope(cod, img))
            throw InputError("affine map sends a vertex outside the codomain polytope");
    return AffineMap{std::move(dom), std::move(cod), std::move(vertex_images)};
}

std::vector<Rat> eval_affine(const AffineMap& f, const std::vector<Rat>& point) {
    if (!in_polytope(f.dom, point)) throw InputError("eval_affine: point outside the domain");
    const int nverts = vertex_count(f.dom);
    std::vector<Rat> out(static_cast<size_t>(ambient_dim(f.cod)), Rat(0));
    for (int v = 0; v < nverts; ++v) {
        std::vector<int> digits = vertex_digits(f.dom, v);
        Rat weight = 1;
        size_t at = 0;
        for (size_t fac = 0; fac < f.dom.size(); ++fac) {
            if (f.dom[fac].kind == Factor::Simplex) {
                weight *= point[at + static_cast<size_t>(digits[fac])];
                at += static_cast<size_t>(f.dom[fac].dim) + 1;
            } else {
                weight *= digits[fac] ? point[at] : 1 - point[at];
                ++at;
            }
        }
        if (weight == 0) continue;
        const auto& img = f.vertex_images[static_cast<size_t>(v)];
        for (size_t c = 0; c < out.size(); ++c) out[c] += weight * img[c];
    }
    return out;
}

AffineMap compose_affine(const AffineMap& first, const AffineMap& then_) {
    if (!(first.cod == then_.dom)) throw InputError("compose_affine: signature mismatch");
    std::vector<std::vector<Rat>> images;
    images.reserve(first.vertex_images.size());
    for (const auto& img : first.vertex_images) images.push_back(eval_affine(then_, img));
    return make_affine(first.dom, then_.cod, std::move(images));
}

bool equal_affine(const AffineMap& f, const AffineMap& g) { return f == g; }

AffineMap identity_affine(const Signature& sig) {
    std::vector<std::vector<Rat>> images;
    const int n = vertex_count(sig);
    images.reserve(static_cast<size_t>(n));
    for (int v = 0; v < n; ++v) images.push_back(vertex_coords(sig, v));
    return make_affine(sig, sig, std::move(images));
}

namespace {

std::vector<Rat> simplex_vertex(int n, int j) {
    std::vector<Rat> e(static_cast<size_t>(n) + 1, Rat(0));
    e[static_cast<size_t>(j)] = 1;
    return e;
}

std::vector<Rat> prism_vertex(int n, int j, int level) {
    std::vector<Rat> v = simplex_vertex(n, j);
    v.push_back(level);
    return v;
}

} // namespace

AffineMap face_map(int n, int i) {
    if (n < 1 || i < 0 || i > n) throw InputError("face_map: index out of range");
    std::vector<std::vector<Rat>> images;
    for (int j = 0; j <= n - 1; ++j) images.push_back(simplex_vertex(n, j < i ? j : j + 1));
    return make_affine(simplex_sig(n - 1), simplex_sig(n), std::move(images));
}

AffineMap degeneracy_map(int n, int i) {
    if (n < 0 || i < 0 || i > n) throw InputError("degeneracy_map: index out of range");
    std::vector<std::vector<Rat>> images;
    for (int j = 0; j <= n + 1; ++j) images.push_back(simplex_vertex(n, j <= i ? j : j - 1));
    return make_affine(simplex_sig(n + 1), simplex_sig(n), std::move(images));
}

AffineMap prism_map(int n, int i) {
    if (n < 0 || i < 0 || i > n) throw InputError("prism_map: index out of range");
    std::vector<std::vector<Rat>> images;
    for (int j = 0; j <= n + 1; ++j)
        images.push_back(j <= i ? prism_vertex(n, j, 0) : prism_vertex(n, j - 1, 1));
    return make_affine(simplex_sig(n + 1), simplex_interval_sig(n), std::move(images));
}

std::vector<Rat> prism_formula(int n, int i, const std::vector<Rat>& point) {
    if (static_cast<int>(point.size()) != n + 2) throw InputError("prism_formula: bad point");
    std::vector<Rat> out;
    for (int c = 0; c <= i - 1; ++c) out.push_back(point[static_cast<size_t>(c)]);
    out.push_back(point[static_cast<size_t>(i)] + point[static_cast<size_t>(i) + 1]);
    for (int c = i + 2; c <= n + 1; ++c) out.push_back(point[static_cast<size_t>(c)]);
    Rat level = 0;
    for (int c = i + 1; c <= n + 1; ++c) level += point[static_cast<size_t>(c)];
    out.push_back(level);
    return out;
}

AffineMap product_with_interval(const AffineMap& f) {
    if (f.dom.size() != 1 || f.dom[0].kind != Factor::Simplex ||
        f.cod.size() != 1 || f.cod[0].kind != Factor::Simplex)
        throw InputError("product_with_interval expects a simplex-to-simplex map");
    Signature dom = f.dom, cod = f.cod;
    dom.push_back(Factor{Factor::Interval, 0});
    cod.push_back(Factor{Factor::Interval, 0});
    std::vector<std::vector<Rat>> images;
    for (const auto& img : f.vertex_images)
        for (int level = 0; level <= 1; ++level) {
            std::vector<Rat> v = img;
            v.push_back(level);
            images.push_back(std::move(v));
        }
    return make_affine(std::move(dom), std::move(cod), std::move(images));
}

AffineMap interval_inclusion(int n, int level) {
    if (level != 0 && level != 1) throw InputError("interval_inclusion: level must be 0 or 1");
    std::vector<std::vector<Rat>> images;
    for (int j = 0; j <= n; ++j) images.push_back(prism_vertex(n, j, level));
    return make_affine(simplex_sig(n), simplex_interval_sig(n), std::move(images));
}

bool IdentityReport::all_ok() const {
    return std::all_of(checks.begin(), checks.end(), [](const IdentityCheck& c) { return c.ok; });
}

int IdentityReport::failures() const {
    return static_cast<int>(
        std::count_if(checks.begin(), checks.end(), [](const IdentityCheck& c) { return !c.ok; }));
}

IdentityReport verify_prism_identities(int max_n) {
    if (max_n < 1) throw InputError("verify_prism_identities: max_n must be >= 1");
    IdentityReport report;
    auto record = [&](const char* name, int n, int i, int j, bool ok) {
        report.checks.push_back({name, n, i, j, ok});
    };

    for (int n = 0; n <= max_n; ++n) {
        // (4) r_n^0 . d_{n+1}^0 = (e -> (e, 1))
        record("prism-4", n, -1, -1,
               equal_affine(compose_affine(face_map(n + 1, 0), prism_map(n, 0)),
                            interval_inclusion(n, 1)));
        // (5) r_n^n . d_{n+1}^{n+1} = (e -> (e, 0))
        record("prism-5", n, -1, -1,
               equal_affine(compose_affine(face_map(n + 1, n + 1), prism_map(n, n)),
                            interval_inclusion(n, 0)));
        // (2) r_n^{i+1} . d_{n+1}^{i+1} = r_n^i . d_{n+1}^{i+1}, i < n
        for (int i = 0; i < n; ++i)
            record("prism-2", n, i, -1,
                   equal_affine(compose_affine(face_map(n + 1, i + 1), prism_map(n, i + 1)),
                                compose_affine(face_map(n + 1, i + 1), prism_map(n, i))));
        // (1) r_n^{j+1} . d_{n+1}^i = (d_n^i x id) . r_{n-1}^j, 0 <= i <= j <= n-1
        for (int j = 0; j <= n - 1; ++j)
            for (int i = 0; i <= j; ++i)
                record("prism-1", n, i, j,
                       equal_affine(
                           compose_affine(face_map(n + 1, i), prism_map(n, j + 1)),
                           compose_affine(prism_map(n - 1, j),
                                          product_with_interval(face_map(n, i)))));
        // (3) r_n^i . d_{n+1}^{j+1} = (d_n^j x id) . r_{n-1}^i, i < j <= n
        for (int j = 1; j <= n; ++j)
            for (int i = 0; i < j; ++i)
                record("prism-3", n, i, j,
                       equal_affine(
                           compose_affine(face_map(n + 1, j + 1), prism_map(n, i)),
                           compose_affine(prism_map(n - 1, i),
                                          product_with_interval(face_map(n, j)))));
    }

    // Simplicial identities, bounded by the largest simplex dimension in play.
    for (int m = 2; m <= max_n; ++m)
        for (int j = 1; j <= m; ++j)
            for (int i = 0; i < j; ++i)
                record("face-face", m, i, j,
                       equal_affine(compose_affine(face_map(m - 1, i), face_map(m, j)),
                                    compose_affine(face_map(m - 1, j - 1), face_map(m, i))));
    for (int n = 0; n + 2 <= max_n; ++n)
        for (int i = 0; i <= n; ++i)
            for (int j = 0; j <= i; ++j)
                record("deg-deg", n, i, j,
                       equal_affine(compose_affine(degeneracy_map(n + 1, j), degeneracy_map(n, i)),
                                    compose_affine(degeneracy_map(n + 1, i + 1),
                                                   degeneracy_map(n, j))));
    for (int n = 1; n + 1 <= max_n; ++n)
        for (int i = 0; i <= n + 1; ++i)
            for (int j = 0; j <= n; ++j) {
                AffineMap lhs = compose_affine(face_map(n + 1, i), degeneracy_map(n, j));
                bool ok;
                if (i == j || i == j + 1) {
                    ok = equal_affine(lhs, identity_affine(simplex_sig(n)));
                    record("deg-face-id", n, i, j, ok);
                } else if (i < j) {
                    ok = equal_affine(lhs, compose_affine(degeneracy_map(n - 1, j - 1),
                                                          face_map(n, i)));
                    record("deg-face", n, i, j, ok);
                } else {
                    ok = equal_affine(lhs, compose_affine(degeneracy_map(n - 1, j),
                                                          face_map(n, i - 1)));
                    record("deg-face", n, i, j, ok);
                }
            }
    return report;
}

} // namespace mvhom
