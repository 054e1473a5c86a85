#pragma once

#include <string>

#include "mvhom/affine.hpp"
#include "mvhom/finspace.hpp"

namespace mvhom {

// Finite model of the standard n-simplex: the face poset. Points are the
// nonempty subsets of {0..n} ordered by inclusion, so the closure of a face
// is the family of its subfaces.
struct SimplexModel {
    int n = 0;
    SpacePtr space;
};

// Finite model of the unit interval: a fence with closed points m0..mk and
// open points g1..gk, m_{j-1} <= g_j >= m_j.
struct IntervalModel {
    int k = 1;
    SpacePtr space;
};

SimplexModel delta_fin(int n);
IntervalModel interval_fin(int k);

// Canonical face name, e.g. "{0,2}" for vertex bitmask 0b101.
std::string face_name(unsigned mask);
unsigned face_mask(const SimplexModel& model, int point_index);

// Names of the fence endpoints ("m0" / "mk").
std::string fence_zero(const IntervalModel& m);
std::string fence_one(const IntervalModel& m);

// Face map transported to the face posets: relabels vertices along the
// affine face map's vertex rule. A closed embedding.
ContMap face_fin(int n, int i);

// Prism map transported: delta_fin(n+1) -> product(delta_fin(n),
// interval_fin(1)). A face maps to its vertex-image face at level m0 when
// all its vertices are <= i, level m1 when all are >= i+1, and the generic
// point g1 otherwise.
ContMap prism_fin(int n, int i);

// f x id on the fence, landing in product(cod(f), interval_fin(1)).
ContMap prism_product(const ContMap& f);
// F -> (F, m0|m1).
ContMap fin_interval_inclusion(int n, int level);

// Verifies the transported prism identities exhaustively for n <= max_n,
// plus the face-face identities on the models.
IdentityReport verify_fin_identities(int max_n);

} // namespace mvhom
