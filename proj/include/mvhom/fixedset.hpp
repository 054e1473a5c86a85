#pragma once

#include <vector>

#include "mvhom/corr.hpp"

namespace mvhom {

struct FixedSetReport {
    std::vector<int> fixed_set;
    // Successive iterates X = A_0, A_1 = T(A_0), ..., ending at the first
    // stable set; weakly decreasing under inclusion.
    std::vector<std::vector<int>> iterations;
    int stabilized_at = 0; // index of the first iterate with T(A) = A
};

// A = T(A)?
bool is_fixed_subset(const Corr& t, const std::vector<int>& subset);

// The greatest fixed subset of a valid self-correspondence, by image
// iteration from the whole space: the image operator is inclusion-monotone
// and T(X) is contained in X, so the iterates decrease and stabilize within
// |X| steps; the stable set is nonempty and contains every fixed subset.
FixedSetReport greatest_fixed_subset(const Corr& t);

} // namespace mvhom
