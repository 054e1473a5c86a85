#include "mvhom/fixedset.hpp"

#include <algorithm>

#include "mvhom/errors.hpp"

namespace mvhom {

bool is_fixed_subset(const Corr& t, const std::vector<int>& subset) {
    if (t.source() != t.target()) throw InputError("is_fixed_subset: not a self-correspondence");
    std::vector<int> sorted = subset;
    std::sort(sorted.begin(), sorted.end());
    sorted.erase(std::unique(sorted.begin(), sorted.end()), sorted.end());
    return image(t, sorted) == sorted;
}

FixedSetReport greatest_fixed_subset(const Corr& t) {
    if (t.source() != t.target())
        throw InputError("greatest_fixed_subset: not a self-correspondence");
    if (t.source().size() == 0) throw InputError("greatest_fixed_subset: empty space");
    FixedSetReport report;
    std::vector<int> current(static_cast<size_t>(t.source().size()));
    for (size_t i = 0; i < current.size(); ++i) current[i] = static_cast<int>(i);
    report.iterations.push_back(current);
    for (;;) {
        std::vector<int> next = image(t, current);
        if (next == current) break;
        current = std::move(next);
        report.iterations.push_back(current);
    }
    report.fixed_set = current;
    report.stabilized_at = static_cast<int>(report.iterations.size()) - 1;
    return report;
}

} // namespace mvhom
