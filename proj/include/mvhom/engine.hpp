#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "mvhom/chain.hpp"
#include "mvhom/corr.hpp"

namespace mvhom {

struct EnumOptions {
    std::size_t max_basis = 1000000; // per-degree refusal threshold
    bool parallel = true;
};

// All valid correspondences delta_fin(degree) -> space, canonically sorted.
// Generated by assigning fibers to faces in decreasing dimension, pruning
// with the point-closure criterion against the covering faces; the result is
// face-closed by construction.
struct SimplexBasis {
    SpacePtr space;
    int degree = 0;
    std::vector<Corr> simplices;
    bool face_closed = true;

    // Column index of a simplex, or -1.
    int find(const Corr& simplex) const;
};

// The OpenMP kernel partitions the search over the first two fiber choices;
// output order is canonical and independent of scheduling.
SimplexBasis enumerate_simplices(const SpacePtr& space, int degree, const EnumOptions& opt = {});
// Serial reference implementation, kept for testing and benchmarking.
SimplexBasis enumerate_simplices_serial(const SpacePtr& space, int degree,
                                        const EnumOptions& opt = {});

// A user-restricted basis; verifies validity, dedups, and records whether
// the list is face-closed.
SimplexBasis make_basis(const SpacePtr& space, int degree, std::vector<Corr> simplices);

// d_n over explicit bases; columns are filled independently (OpenMP) or in
// sequence (serial reference). Entries are identical either way.
BoundaryMatrix assemble_boundary(const SimplexBasis& lower, const SimplexBasis& upper);
BoundaryMatrix assemble_boundary_serial(const SimplexBasis& lower, const SimplexBasis& upper);

struct HomologyOptions {
    EnumOptions enumeration;
    // Degrees >= 2 over spaces with more than one point are computed only on
    // request; certificates are the default evidence there.
    bool attempt_high_degrees = false;
};

struct HomologyResult {
    int n = 0;
    bool computed = false;
    HomologyGroup group;
    std::string skipped_reason; // set when !computed
};

struct HomologyReport {
    std::vector<HomologyResult> groups;
    bool bound_exceeded = false;
};

HomologyReport space_homology(const SpacePtr& space, int max_n, const HomologyOptions& opt = {});

// The two-step finite transcription of the contraction of a discrete space
// to a basepoint: L1 runs from gr(id) to the doubled correspondence
// D = {(x,x), (x,x0)}, L2 from D to the constant x0. Both are homotopies
// over product(X, I3).
struct Contraction {
    Corr step1;
    Corr step2;
};
Contraction contraction(const SpacePtr& space, int basepoint);

// The constant n-simplex with value A as a chain with coefficient m.
Chain constant_chain(long long m, const SpacePtr& space, const std::vector<int>& value, int n);

// For odd n, the filling m * C_A^{Delta_{n+1}} whose boundary is
// m * C_A^{Delta_n}; even n is rejected since the constant chain is not a
// cycle there.
Chain constant_cycle_fill(long long m, const SpacePtr& space, const std::vector<int>& value,
                          int n);

struct Certificate {
    Chain cycle;
    Chain filling;
    std::vector<std::string> steps;
    bool verified = false;
};

// An explicit filling for a cycle of positive degree over a discrete space:
// boundary(filling) = cycle, re-verified by an independent boundary
// computation before returning. Built from the two contraction homotopies
// plus the constant-cycle fill.
Certificate nullhomotopy_certificate(const Chain& cycle, int basepoint);

} // namespace mvhom
