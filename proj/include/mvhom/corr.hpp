#pragma once

#include <string>
#include <utility>
#include <vector>

#include "mvhom/finspace.hpp"

namespace mvhom {

struct ValidityFailure {
    std::string criterion;            // "closed-projection" | "surjectivity"
    std::vector<std::string> witness; // offending points, see validate()
};

struct Validity {
    bool is_valid = false;
    std::vector<ValidityFailure> failures;
};

// Checks that a candidate graph T <= X x Y is a continuous multivalued map:
// the projection T -> X restricted to the graph must be closed and
// surjective (fibers are finite automatically). Closedness reduces to: for
// every (x, y) in T and every x' <= x there is some y' <= y with (x', y') in
// T. Failures come back as data, with witnesses:
//   closed-projection: {x, y, x'} - no y' <= y covers x'
//   surjectivity:      {x}        - empty fiber
Validity validate(const FinSpace& source, const FinSpace& target,
                  const std::vector<std::pair<int, int>>& pairs);
Validity validate_named(const FinSpace& source, const FinSpace& target,
                        const std::vector<std::pair<std::string, std::string>>& pairs);

// A continuous multivalued map: a graph that passed validate(). Instances
// are immutable and always valid; construction throws ValidityError
// otherwise. Pairs are kept sorted, so equality is syntactic.
class Corr {
public:
    Corr(SpacePtr source, SpacePtr target, std::vector<std::pair<int, int>> pairs);
    Corr(FinSpace source, FinSpace target, std::vector<std::pair<int, int>> pairs);

    const FinSpace& source() const { return *source_; }
    const FinSpace& target() const { return *target_; }
    const SpacePtr& source_ptr() const { return source_; }
    const SpacePtr& target_ptr() const { return target_; }
    const std::vector<std::pair<int, int>>& pairs() const { return pairs_; }

    // Target indices per source point, each sorted.
    const std::vector<std::vector<int>>& fibers() const { return fibers_; }
    bool contains(int x, int y) const;

    bool operator==(const Corr& other) const;
    bool operator!=(const Corr& other) const { return !(*this == other); }

private:
    SpacePtr source_;
    SpacePtr target_;
    std::vector<std::pair<int, int>> pairs_;
    std::vector<std::vector<int>> fibers_;
};

// Strict weak order for map keys; compares graphs first, then spaces.
struct CorrOrder {
    bool operator()(const Corr& a, const Corr& b) const;
};

// gr(f); throws ValidityError if f is not continuous.
Corr from_map(const ContMap& f);
Corr identity_corr(const SpacePtr& space);

// S after R: pairs (x, z) with some y such that (x,y) in R, (y,z) in S.
Corr compose(const Corr& r, const Corr& s);

// Box product on the product spaces.
Corr box(const Corr& r, const Corr& rp);

// f^*(S) = S . gr(f).
Corr pullback(const ContMap& f, const Corr& s);
// g_*(R) = gr(g) . R.
Corr pushforward(const Corr& r, const ContMap& g);

// The multivalued constant map X -> Y with value A (indices into Y).
Corr constant_corr(const SpacePtr& x, const SpacePtr& y, const std::vector<int>& value);

// Glues parts defined on a closed cover; each part must be a Corr over
// subspace(x, cover[i]) and the parts must agree on pairwise intersections.
// Pair indices in the result refer to x.
Corr glue(const SpacePtr& x, const std::vector<std::vector<int>>& cover,
          const std::vector<Corr>& parts);

// T(A): second coordinates of T over A. Sorted unique indices.
std::vector<int> image(const Corr& t, const std::vector<int>& subset);

// T restricted to a subset of the source, as a Corr over the subspace.
Corr restrict_corr(const Corr& t, const std::vector<int>& subset);

// A multivalued path on a fence interval model joining the finite subsets
// A and B of an order-connected space, built as a union of graphs of
// single-valued fence paths refined to a common length.
Corr mpath(const SpacePtr& x, const std::vector<int>& from, const std::vector<int>& to);

} // namespace mvhom
