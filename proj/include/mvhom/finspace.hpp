#pragma once

#include <cstdint>
#include <memory>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace mvhom {

// A finite topological space, encoded by its specialization preorder.
// leq(i, j) means point i lies in the closure of {point j}; closed sets are
// exactly the down-sets of leq and open sets the up-sets. Continuous maps
// between finite spaces are the monotone ones.
//
// Points are kept sorted by name, so equal spaces have identical layouts and
// all serialized output is canonical.
class FinSpace {
public:
    FinSpace() = default;

    int size() const { return static_cast<int>(points_.size()); }
    const std::vector<std::string>& points() const { return points_; }
    const std::string& point(int i) const { return points_[static_cast<size_t>(i)]; }
    bool t0() const { return t0_; }

    bool leq(int i, int j) const {
        return leq_[static_cast<size_t>(i) * points_.size() + static_cast<size_t>(j)] != 0;
    }

    // Index of a named point; throws InputError if unknown.
    int index_of(std::string_view name) const;
    // Index of a named point, or -1.
    int find(std::string_view name) const;

    // Equality of the underlying space; the t0 flag is a construction-time
    // enforcement attribute, not part of the topology.
    bool operator==(const FinSpace& other) const {
        return points_ == other.points_ && leq_ == other.leq_;
    }
    bool operator!=(const FinSpace& other) const { return !(*this == other); }

    // Assumes points sorted/unique and leq already a preorder matrix.
    static FinSpace from_preorder(std::vector<std::string> points,
                                  std::vector<uint8_t> leq, bool t0);

private:
    std::vector<std::string> points_;
    std::vector<uint8_t> leq_; // row-major size()*size()
    bool t0_ = false;
};

using SpacePtr = std::shared_ptr<const FinSpace>;

inline SpacePtr share(FinSpace space) {
    return std::make_shared<const FinSpace>(std::move(space));
}

// Builds a space from generating pairs (x, y) meaning x <= y; the stored
// relation is the reflexive-transitive closure. With t0 set, antisymmetry
// violations are rejected.
FinSpace make_space(std::vector<std::string> points,
                    const std::vector<std::pair<std::string, std::string>>& generating_pairs,
                    bool t0 = false);

// Down-closure of a subset; result is sorted and unique.
std::vector<int> closure(const FinSpace& space, const std::vector<int>& subset);
std::vector<std::string> closure_named(const FinSpace& space,
                                       const std::vector<std::string>& subset);

bool is_closed_set(const FinSpace& space, const std::vector<int>& subset);

// Resolves names to sorted unique indices; throws InputError on unknown names.
std::vector<int> point_indices(const FinSpace& space, const std::vector<std::string>& names);
std::vector<std::string> point_names(const FinSpace& space, const std::vector<int>& subset);

// Product space: pairs with the componentwise preorder. Point (a, b) is
// named pair_name(a, b).
FinSpace product(const FinSpace& a, const FinSpace& b);
std::string pair_name(const std::string& a, const std::string& b);

// Subspace on a subset of points, with the induced preorder.
FinSpace subspace(const FinSpace& space, const std::vector<int>& subset);
FinSpace subspace_named(const FinSpace& space, const std::vector<std::string>& subset);

// Whether the comparability graph connects every pair of points.
bool is_order_connected(const FinSpace& space);

// A (not necessarily continuous) point mapping between finite spaces.
struct ContMap {
    SpacePtr dom;
    SpacePtr cod;
    std::vector<int> map; // dom point index -> cod point index

    int operator()(int i) const { return map[static_cast<size_t>(i)]; }
    bool operator==(const ContMap& other) const {
        return *dom == *other.dom && *cod == *other.cod && map == other.map;
    }
};

ContMap make_map(SpacePtr dom, SpacePtr cod, std::vector<int> assignment);
ContMap make_map_named(SpacePtr dom, SpacePtr cod,
                       const std::vector<std::pair<std::string, std::string>>& assignment);

// Continuity for finite spaces is monotonicity.
bool is_continuous(const ContMap& f);

// Closedness via the point-closure criterion: f(cl{t}) must be a down-set for
// every point t. For maps between finite spaces this is equivalent to
// properness, all fibers being finite hence compact. Throws ValidityError if
// f is not continuous.
bool is_closed_map(const ContMap& f);

ContMap identity_map(const SpacePtr& space);
// then_ after first: (then_ . first), requires first.cod == then_.dom.
ContMap compose_maps(const ContMap& first, const ContMap& then_);
// f x g on the product spaces.
ContMap product_map(const ContMap& f, const ContMap& g);

} // namespace mvhom
