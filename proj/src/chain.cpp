#include "mvhom/chain.hpp"

#include "mvhom/errors.hpp"

namespace mvhom {

void Chain::add(const Corr& simplex, long long coeff) {
    if (coeff == 0) return;
    auto it = terms.find(simplex);
    if (it == terms.end()) {
        terms.emplace(simplex, coeff);
    } else {
        it->second += coeff;
        if (it->second == 0) terms.erase(it);
    }
}

Chain& Chain::operator+=(const Chain& other) {
    if (degree != other.degree) {
        if (!other.is_zero() && !is_zero()) throw InputError("chain addition: degree mismatch");
        if (is_zero()) degree = other.degree;
    }
    for (const auto& [s, c] : other.terms) add(s, c);
    return *this;
}

Chain& Chain::operator-=(const Chain& other) {
    if (degree != other.degree) {
        if (!other.is_zero() && !is_zero()) throw InputError("chain subtraction: degree mismatch");
        if (is_zero()) degree = other.degree;
    }
    for (const auto& [s, c] : other.terms) add(s, -c);
    return *this;
}

Chain Chain::operator*(long long scalar) const {
    Chain out(degree);
    if (scalar == 0) return out;
    for (const auto& [s, c] : terms) out.terms.emplace(s, c * scalar);
    return out;
}

int simplex_degree(const Corr& simplex) {
    int count = simplex.source().size();
    int n = 0;
    while ((1 << (n + 1)) - 1 < count) ++n;
    if ((1 << (n + 1)) - 1 != count || simplex.source() != *delta_fin(n).space)
        throw InputError("simplex source is not a finite simplex model");
    return n;
}

Corr face(const Corr& simplex, int i) {
    int n = simplex_degree(simplex);
    if (n < 1) throw InputError("face: simplex has degree 0");
    if (i < 0 || i > n) throw InputError("face: index out of range");
    return pullback(face_fin(n, i), simplex);
}

Chain boundary_of_simplex(const Corr& simplex) {
    int n = simplex_degree(simplex);
    if (n < 1) throw InputError("boundary: degree must be >= 1");
    Chain out(n - 1);
    for (int i = 0; i <= n; ++i) out.add(face(simplex, i), (i % 2 == 0) ? 1 : -1);
    return out;
}

Chain boundary(const Chain& c) {
    if (c.degree < 1) throw InputError("boundary: degree must be >= 1");
    Chain out(c.degree - 1);
    for (const auto& [s, coeff] : c.terms) {
        for (int i = 0; i <= c.degree; ++i)
            out.add(face(s, i), (i % 2 == 0) ? coeff : -coeff);
    }
    return out;
}

Chain post_compose(const Corr& s, const Chain& c) {
    Chain out(c.degree);
    for (const auto& [simplex, coeff] : c.terms) out.add(compose(simplex, s), coeff);
    return out;
}

HomologyGroup homology_at(const BoundaryMatrix& dn, const BoundaryMatrix& dn1) {
    if (dn1.degree != dn.degree + 1) throw InputError("homology_at: degrees do not compose");
    if (dn.mat.cols != dn1.mat.rows) throw InputError("homology_at: basis sizes do not match");
    if (dn.mat.rows > 0 && dn1.mat.cols > 0 && !is_zero_mat(mat_mul(dn.mat, dn1.mat)))
        throw ValidityError("homology_at: d.d is nonzero");
    SnfResult low = smith_normal_form(dn.mat);
    SnfResult high = smith_normal_form(dn1.mat);
    HomologyGroup out;
    out.rank = dn.mat.cols - low.rank - high.rank;
    for (const auto& f : high.invariant_factors)
        if (f > 1) out.torsion.push_back(f);
    return out;
}

Corr homotopy_end(const Corr& l, const SpacePtr& x, int level) {
    if (level != 0 && level != 1) throw InputError("homotopy_end: level must be 0 or 1");
    if (product(*x, *interval_fin(1).space) != l.source())
        throw InputError("homotopy_end: homotopy source is not X x I3");
    const std::string tag = level ? "m1" : "m0";
    std::vector<int> assignment(static_cast<size_t>(x->size()));
    for (int p = 0; p < x->size(); ++p)
        assignment[static_cast<size_t>(p)] = l.source().index_of(pair_name(x->point(p), tag));
    ContMap incl{x, l.source_ptr(), std::move(assignment)};
    return pullback(incl, l);
}

Chain apply_chain_homotopy(const Corr& l, const Chain& c) {
    Chain out(c.degree + 1);
    if (c.is_zero()) return out;
    Corr fence_id = identity_corr(interval_fin(1).space);
    for (const auto& [alpha, coeff] : c.terms) {
        int n = simplex_degree(alpha);
        Corr spread = box(alpha, fence_id); // delta_fin(n) x I3 -> X x I3
        if (spread.target() != l.source())
            throw InputError("apply_chain_homotopy: homotopy source is not X x I3");
        for (int i = 0; i <= n; ++i) {
            Corr prism = from_map(prism_fin(n, i));
            Corr h = compose(compose(prism, spread), l);
            out.add(h, (i % 2 == 0) ? coeff : -coeff);
        }
    }
    return out;
}

IdentityReport verify_homotopy_identity(const Corr& l, const SpacePtr& x,
                                        const std::vector<Chain>& samples) {
    IdentityReport report;
    Corr r = homotopy_end(l, x, 0);
    Corr s = homotopy_end(l, x, 1);
    int index = 0;
    for (const auto& c : samples) {
        Chain lhs = boundary(apply_chain_homotopy(l, c));
        if (c.degree >= 1) lhs += apply_chain_homotopy(l, boundary(c));
        Chain rhs = post_compose(s, c);
        rhs -= post_compose(r, c);
        report.checks.push_back({"homotopy-identity", c.degree, index++, -1, lhs == rhs});
    }
    return report;
}

} // namespace mvhom
