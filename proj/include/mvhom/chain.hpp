#pragma once

#include <map>
#include <vector>

#include "mvhom/corr.hpp"
#include "mvhom/simplicial.hpp"
#include "mvhom/snf.hpp"

namespace mvhom {

// A formal integer combination of multivalued n-simplices (valid
// correspondences delta_fin(n) -> X). Zero coefficients are never stored.
struct Chain {
    int degree = 0;
    std::map<Corr, long long, CorrOrder> terms;

    Chain() = default;
    explicit Chain(int deg) : degree(deg) {}

    bool is_zero() const { return terms.empty(); }
    void add(const Corr& simplex, long long coeff);
    Chain& operator+=(const Chain& other);
    Chain& operator-=(const Chain& other);
    Chain operator*(long long scalar) const;
    bool operator==(const Chain& other) const {
        return degree == other.degree && terms == other.terms;
    }
};

// Degree of a simplex from its face-poset source; throws InputError when the
// source is not delta_fin(n) for any n.
int simplex_degree(const Corr& simplex);

// i-th face: pullback along face_fin(n, i).
Corr face(const Corr& simplex, int i);

// Alternating sum of faces. Degree 0 chains have no boundary.
Chain boundary(const Chain& c);
Chain boundary_of_simplex(const Corr& simplex);

// C_n^M(S): post-composition with a correspondence S out of the simplex
// target, extended linearly.
Chain post_compose(const Corr& s, const Chain& c);

// Integral boundary operator d_n assembled over explicit bases: rows are
// (n-1)-simplices, columns n-simplices.
struct BoundaryMatrix {
    int degree = 0; // the n of d_n
    IntMat mat;
};

struct HomologyGroup {
    long long rank = 0;
    std::vector<BigInt> torsion; // invariant factors > 1, each dividing the next
};

// H_n from d_n and d_{n+1} via Smith normal form. Checks that the degrees
// compose and that d_n . d_{n+1} = 0.
HomologyGroup homology_at(const BoundaryMatrix& dn, const BoundaryMatrix& dn1);

// The ends of a homotopy L in M(X x I3, Y): pullback along x -> (x, m0) or
// (x, m1). The left factor X must be supplied.
Corr homotopy_end(const Corr& l, const SpacePtr& x, int level);

// The chain homotopy of a homotopy L: on a basis simplex a of degree n,
//   h_n(a) = sum_i (-1)^i [ L . (a box id_I3) . gr(prism_fin(n, i)) ],
// extended linearly. Output has degree n+1 over the target of L.
Chain apply_chain_homotopy(const Corr& l, const Chain& c);

// Checks d h(c) + h(d c) = S . c - R . c exactly for each sample, where R, S
// are the ends of L. Reports one entry per sample.
IdentityReport verify_homotopy_identity(const Corr& l, const SpacePtr& x,
                                        const std::vector<Chain>& samples);

} // namespace mvhom
